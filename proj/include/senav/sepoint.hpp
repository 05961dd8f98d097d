#pragma once

// S/E point algebra.  A level walks the possibility space in pairs of
// starting/ending points; five running sum variables are enough to move from
// one pair to the next, so a level never materializes more than one state.
//
// Distances are stored as exponents: a point with dist_exp d spans
// 2^(d+1) - 1 positions from start to end.  The first four possibilities of a
// level are emitted as two adjacent points with dist_exp 0.

#include <cstdint>
#include <utility>
#include <vector>

#include "senav/core.hpp"
#include "senav/ints.hpp"

namespace senav {

struct SEPoint {
    SumValue start = 0;
    SumValue end = 0;
    unsigned dist_exp = 0;   // distance = 2^(dist_exp + 1) - 1
    BigCount preceding = 0;  // enumeration positions before `start`
    bool first_of_pair = true;

    BigCount distance() const { return pow2(dist_exp + 1) - 1; }
};

// The five-variable state that walks one level's S/E pairs.  (A,B) is the
// current first point, (C,D) the second; E_util carries the incoming shifted
// element between updates.
struct LevelState {
    SumValue A = 0, B = 0, C = 0, D = 0;
    SumValue E_util = 0;
    SumValue base_shift = 0;    // level starting point + outer shift
    std::size_t elem_idx = 0;   // index of the last element consumed
    unsigned dist_exp = 0;
    BigCount preceding_base = 0;

    // Seeds the first four possibilities from the first two elements.
    static LevelState head(SumValue base_shift, SumValue abs_e0, SumValue abs_e1,
                           BigCount preceding);
    // Re-seeds A..D for the third element, the first to produce a pair.
    void seed_third(SumValue abs_e2, SumValue abs_e1, SumValue abs_e0);
    // Advances past one more element (index >= 3) and returns the new pair.
    // Preceding indices of the returned points are not filled in; the caller
    // owns that bookkeeping (it depends on repetition handling).
    std::pair<SEPoint, SEPoint> step(SumValue element_abs);

    std::pair<SEPoint, SEPoint> current_pair() const;
};

// Descriptor of the inner level reached by zooming into a S/E point.
struct LevelDesc {
    SumValue start = 0;          // inner base; no further shift is applied
    std::size_t element_budget;  // highest element index the level may use
    BigCount preceding = 0;      // inherited from the zoomed point
};

// First-level enumeration: 2 head points plus one pair per element from the
// third onward, 4n - 4 values in total, all shifted by neg_shift.
// Requires at least 3 non-zero elements.
std::vector<SEPoint> first_level(const PreprocessedInstance& prep);

// Enumerates one level below `desc` (used by tests and the trace tooling;
// the navigator drives LevelState directly so it can interleave pruning).
std::vector<SEPoint> enumerate_level(const PreprocessedInstance& prep, const LevelDesc& desc);

// Zoom-in: the inner level translates the global prefix pattern to
// sep.start.  Fails on distance-1 points (no interior possibilities).
LevelDesc expand(const SEPoint& sep, const PreprocessedInstance& prep);

}  // namespace senav
