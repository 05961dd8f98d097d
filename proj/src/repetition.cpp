#include "senav/repetition.hpp"

namespace senav {

namespace {

// Cumulative alternating-sign accumulation over the explored counts.  Ported
// from the level walker's trivial-count recursion: entries of `arr` are
// promoted to whole-pair totals in place while `total` gathers the skipped
// solutions.  Unsigned wraparound in intermediates is harmless; the final
// value is an exact count.
void accumulate(std::vector<BigCount>& arr, std::size_t size, BigCount& total,
                bool skip_from_top) {
    bool add_next = false;
    BigCount coefficient = size - 1;
    bool skip = skip_from_top;
    if (size == arr.size()) {
        skip = true;
        for (std::size_t i = 0; i + 1 < size; ++i)
            if (arr[i] != 0) {
                skip = false;
                break;
            }
    }
    if (skip) return;
    for (std::size_t i = 1; i <= size - 1; ++i) {
        if (size == 2) add_next = true;
        if (coefficient == 1) {
            if (!add_next) {
                total -= arr[0];
                arr[i] -= arr[0];
                add_next = true;
            } else {
                total += arr[0];
                arr[i] += arr[0];
                add_next = false;
            }
        } else if (i == 1) {
            accumulate(arr, size - 1, total, skip);
            total += coefficient * arr[size - 2];
            arr[size - 1] += coefficient * arr[size - 2];
            coefficient = coefficient * (size - (i + 1)) / (i + 1);
        } else {
            if (!add_next) {
                total -= coefficient * arr[size - (i + 1)];
                arr[size - 1] -= coefficient * arr[size - (i + 1)];
                add_next = true;
            } else {
                total += coefficient * arr[size - (i + 1)];
                arr[size - 1] += coefficient * arr[size - (i + 1)];
                add_next = false;
            }
            coefficient = coefficient * (size - (i + 1)) / (i + 1);
        }
    }
}

}  // namespace

std::vector<BigCount> coefficients(unsigned m) {
    if (m < 1) throw RangeError("coefficient row needs m >= 1");
    std::vector<BigCount> row;
    row.reserve(m);
    BigCount previous = 1;
    BigCount n = static_cast<BigCount>(m) + 1;
    for (BigCount k = 1; k <= m; ++k) {
        previous = previous * (n - k) / k;
        row.push_back(previous);
    }
    return row;
}

BigCount trivial_total(const TrivialAccumulator& acc) {
    if (acc.a_counts.size() < 2) return 0;  // no repeated step recorded
    std::vector<BigCount> scratch = acc.a_counts;
    BigCount total = 0;
    accumulate(scratch, scratch.size(), total, true);
    return total;
}

bool detect_repetition(const LevelState& state, SumValue next_abs) {
    return checked_add(next_abs, state.base_shift) == state.A;
}

}  // namespace senav
