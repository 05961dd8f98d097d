#include "senav/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <unordered_set>

namespace senav {

void validate(const Instance& instance) {
    if (instance.targets.empty()) throw RangeError("instance needs at least one target");
    std::unordered_set<long long> seen;
    for (long long t : instance.targets)
        if (!seen.insert(t).second) throw RangeError("duplicate target " + std::to_string(t));
    SumValue abs_total = 0;
    for (long long e : instance.elements) {
        if (e == std::numeric_limits<long long>::min())
            throw OverflowError("element magnitude exceeds 63 bits");
        abs_total = checked_add(abs_total, e < 0 ? -static_cast<SumValue>(e)
                                                 : static_cast<SumValue>(e));
    }
}

PreprocessedInstance preprocess(const Instance& instance) {
    validate(instance);
    PreprocessedInstance prep;
    prep.allow_empty = instance.allow_empty;
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < instance.elements.size(); ++i) {
        long long e = instance.elements[i];
        if (e == 0) {
            ++prep.zero_count;
            continue;
        }
        order.push_back(i);
        if (e < 0)
            prep.neg_shift = checked_add(prep.neg_shift, e);
        else
            prep.pos_sum = checked_add(prep.pos_sum, e);
        if (std::llabs(e) % 2 != 0) ++prep.odd_element_count;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::llabs(instance.elements[a]) < std::llabs(instance.elements[b]);
    });
    prep.sorted_elements.reserve(order.size());
    for (std::size_t i : order) prep.sorted_elements.push_back(instance.elements[i]);
    prep.origin_index = std::move(order);
    return prep;
}

TrivialVerdict detect_trivial(const PreprocessedInstance& prep, long long target) {
    if (prep.sorted_elements.empty() && target == 0) {
        if (prep.zero_count == 0) return {TrivialKind::EmptySetOnly, 1};
        return {TrivialKind::PureZero, pow2(static_cast<unsigned>(prep.zero_count))};
    }
    if (prep.odd_element_count == 0 && target % 2 != 0)
        return {TrivialKind::EvenOddUnsat, 0};
    if (static_cast<SumValue>(target) < prep.neg_shift ||
        static_cast<SumValue>(target) > prep.pos_sum)
        return {TrivialKind::OutOfBounds, 0};
    return {TrivialKind::NotTrivial, 0};
}

}  // namespace senav
