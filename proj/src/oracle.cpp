#include "senav/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>

namespace senav::oracle {

namespace {

constexpr unsigned kEnumerationLimit = 24;
constexpr unsigned kMeetInMiddleLimit = 30;
constexpr unsigned kBacktrackingLimit = 40;
constexpr long long kDpRangeLimit = 1LL << 21;

void check_sum_width(const std::vector<long long>& elements) {
    SumValue abs_total = 0;
    for (long long e : elements) {
        SumValue mag = e < 0 ? -static_cast<SumValue>(e) : static_cast<SumValue>(e);
        abs_total = checked_add(abs_total, mag);
    }
    if (abs_total > static_cast<SumValue>(std::numeric_limits<long long>::max()))
        throw SizeError("oracle sums must fit 64 bits");
}

BigCount brute_force_count(const std::vector<long long>& elements, long long target) {
    if (elements.size() > kEnumerationLimit)
        throw SizeError("brute force limited to 24 elements");
    EnumerationTable table = enumerate_all(elements);
    BigCount count = 0;
    for (long long s : table.sums)
        if (s == target) ++count;
    return count;
}

BigCount dp_count(const std::vector<long long>& elements, long long target) {
    long long neg_total = 0, pos_total = 0;
    for (long long e : elements) (e < 0 ? neg_total : pos_total) += e;
    if (target < neg_total || target > pos_total) return 0;
    long long range = pos_total - neg_total + 1;
    if (range > kDpRangeLimit) throw SizeError("DP sum range too wide");
    // Table over [neg_total, pos_total], shifted so index 0 is neg_total.
    std::vector<BigCount> table(static_cast<std::size_t>(range), 0);
    long long zero_offset = -neg_total;
    table[static_cast<std::size_t>(zero_offset)] = 1;
    long long lo = 0, hi = 0;  // span of sums reachable so far, relative to 0
    for (long long e : elements) {
        if (e == 0) {
            for (long long s = lo; s <= hi; ++s) {
                auto& cell = table[static_cast<std::size_t>(s + zero_offset)];
                cell += cell;
            }
            continue;
        }
        if (e > 0) {
            hi += e;
            for (long long s = hi; s >= lo + e; --s)
                table[static_cast<std::size_t>(s + zero_offset)] +=
                    table[static_cast<std::size_t>(s - e + zero_offset)];
        } else {
            lo += e;
            for (long long s = lo; s <= hi + e; ++s)
                table[static_cast<std::size_t>(s + zero_offset)] +=
                    table[static_cast<std::size_t>(s - e + zero_offset)];
        }
    }
    return table[static_cast<std::size_t>(target + zero_offset)];
}

BigCount meet_in_middle_count(const std::vector<long long>& elements, long long target) {
    if (elements.size() > kMeetInMiddleLimit)
        throw SizeError("meet-in-the-middle limited to 30 elements");
    std::size_t half = elements.size() / 2;
    std::vector<long long> left(elements.begin(), elements.begin() + half);
    std::vector<long long> right(elements.begin() + half, elements.end());
    std::vector<long long> right_sums = enumerate_all(right).sums;
    std::sort(right_sums.begin(), right_sums.end());
    BigCount count = 0;
    for (long long ls : enumerate_all(left).sums) {
        auto [first, last] =
            std::equal_range(right_sums.begin(), right_sums.end(), target - ls);
        count += static_cast<BigCount>(last - first);
    }
    return count;
}

struct BacktrackState {
    const std::vector<long long>* elements;
    std::vector<long long> pos_suffix;  // sum of positive elements from i onward
    std::vector<long long> neg_suffix;  // sum of negative elements from i onward
    long long target = 0;
    BigCount count = 0;

    void descend(std::size_t i, long long partial) {
        long long remaining_lo = partial + neg_suffix[i];
        long long remaining_hi = partial + pos_suffix[i];
        if (target < remaining_lo || target > remaining_hi) return;
        if (i == elements->size()) {
            if (partial == target) ++count;
            return;
        }
        descend(i + 1, partial + (*elements)[i]);
        descend(i + 1, partial);
    }
};

BigCount backtracking_count(const std::vector<long long>& elements, long long target) {
    if (elements.size() > kBacktrackingLimit)
        throw SizeError("backtracking limited to 40 elements");
    BacktrackState state;
    state.elements = &elements;
    state.target = target;
    state.pos_suffix.assign(elements.size() + 1, 0);
    state.neg_suffix.assign(elements.size() + 1, 0);
    for (std::size_t i = elements.size(); i-- > 0;) {
        state.pos_suffix[i] = state.pos_suffix[i + 1] + std::max(elements[i], 0LL);
        state.neg_suffix[i] = state.neg_suffix[i + 1] + std::min(elements[i], 0LL);
    }
    state.descend(0, 0);
    return state.count;
}

}  // namespace

EnumerationTable enumerate_all(const std::vector<long long>& elements) {
    if (elements.size() > kEnumerationLimit)
        throw SizeError("enumeration limited to 24 elements");
    check_sum_width(elements);
    EnumerationTable table;
    std::size_t n = elements.size();
    table.sums.assign(std::size_t{1} << n, 0);
    for (std::size_t i = 1; i < table.sums.size(); ++i) {
        // Strip the lowest set bit; the remainder was already computed.
        std::size_t lowest = static_cast<std::size_t>(std::countr_zero(i));
        table.sums[i] = table.sums[i & (i - 1)] + elements[lowest];
    }
    table.total = table.sums.back();
    return table;
}

BigCount baseline_count(const std::vector<long long>& elements, long long target,
                        BaselineMethod method, bool allow_empty) {
    check_sum_width(elements);
    BigCount count = 0;
    switch (method) {
        case BaselineMethod::BruteForce: count = brute_force_count(elements, target); break;
        case BaselineMethod::DP: count = dp_count(elements, target); break;
        case BaselineMethod::MeetInMiddle: count = meet_in_middle_count(elements, target); break;
        case BaselineMethod::Backtracking: count = backtracking_count(elements, target); break;
    }
    if (!allow_empty && target == 0) --count;  // the literal empty subset always sums to 0
    return count;
}

bool check_symmetry(const EnumerationTable& table) {
    std::size_t n = table.sums.size();
    for (std::size_t i = 0; i < n; ++i)
        if (table.sums[i] + table.sums[n - 1 - i] != table.total) return false;
    return true;
}

bool check_period(const EnumerationTable& table, unsigned split_bit) {
    std::size_t block = std::size_t{1} << split_bit;
    if (block == 0 || block >= table.sums.size()) throw RangeError("split_bit out of range");
    for (std::size_t base = 0; base < table.sums.size(); base += block)
        for (std::size_t i = 0; i < block; ++i)
            if (table.sums[base + i] - table.sums[base] != table.sums[i] - table.sums[0])
                return false;
    return true;
}

}  // namespace senav::oracle
