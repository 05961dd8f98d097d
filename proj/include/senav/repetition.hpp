#pragma once

// Repeated-element handling.  When consecutive sorted elements share a
// magnitude, each repeated step re-explores translated copies of earlier
// subsets; only a fixed-size tail window per step is genuinely new.  The
// solutions inside the skipped windows are recovered from the per-step
// explored counts by an alternating binomial-coefficient scheme.

#include <cstdint>
#include <vector>

#include "senav/ints.hpp"
#include "senav/sepoint.hpp"

namespace senav {

struct TrivialAccumulator {
    // a_counts[0] is the pre-repetition pair count; one tail count is
    // appended per repeated step.
    std::vector<BigCount> a_counts;
    long long repeat_count = 0;          // occurrences seen so far (>= 2 once active)
    unsigned last_part_dist_exp = 0;     // distance exponent of the tail window

    bool active() const { return !a_counts.empty(); }
};

// Binomial coefficient row for m repetitions beyond the first appearance:
// [C(m,1), C(m,2), ..., C(m,m)].  Signs are applied by the caller,
// alternating +,-,+,... with the final explored term always added.
std::vector<BigCount> coefficients(unsigned m);

// Exact count of solutions inside the skipped redundant subsets.  Returns 0
// immediately when every entry before the tail is zero.
BigCount trivial_total(const TrivialAccumulator& acc);

// True when the incoming element would land on the same shifted value as the
// current first starting point, i.e. its magnitude repeats the previous
// element's.
bool detect_repetition(const LevelState& state, SumValue next_abs);

}  // namespace senav
