#include "senav/sepoint.hpp"

#include <cstdlib>

namespace senav {

namespace {

SumValue abs_of(long long e) {
    return e < 0 ? -static_cast<SumValue>(e) : static_cast<SumValue>(e);
}

}  // namespace

LevelState LevelState::head(SumValue base_shift, SumValue abs_e0, SumValue abs_e1,
                            BigCount preceding) {
    LevelState s;
    s.base_shift = base_shift;
    s.A = base_shift;
    s.B = checked_add(abs_e0, base_shift);
    s.C = checked_add(abs_e1, base_shift);
    s.D = checked_add(checked_add(abs_e1, abs_e0), base_shift);
    s.elem_idx = 1;
    s.dist_exp = 0;
    s.preceding_base = preceding;
    return s;
}

void LevelState::seed_third(SumValue abs_e2, SumValue abs_e1, SumValue abs_e0) {
    A = checked_add(abs_e2, base_shift);
    B = checked_add(A, abs_e0);
    C = checked_add(A, abs_e1);
    D = checked_add(C, abs_e0);
    elem_idx = 2;
    dist_exp = 0;
}

std::pair<SEPoint, SEPoint> LevelState::step(SumValue element_abs) {
    E_util = checked_add(element_abs, base_shift);
    B = checked_add(checked_sub(D, A), E_util);
    C = checked_sub(checked_add(A, E_util), base_shift);
    D = checked_sub(checked_add(D, E_util), base_shift);
    A = E_util;
    ++dist_exp;
    ++elem_idx;
    return current_pair();
}

std::pair<SEPoint, SEPoint> LevelState::current_pair() const {
    SEPoint first{A, B, dist_exp, 0, true};
    SEPoint second{C, D, dist_exp, 0, false};
    return {first, second};
}

std::vector<SEPoint> first_level(const PreprocessedInstance& prep) {
    if (prep.size() < 3)
        throw SizeError("S/E enumeration needs at least 3 non-zero elements");
    return enumerate_level(prep, LevelDesc{prep.neg_shift, prep.size() - 1, 0});
}

std::vector<SEPoint> enumerate_level(const PreprocessedInstance& prep,
                                     const LevelDesc& desc) {
    if (desc.element_budget >= prep.size())
        throw RangeError("element budget exceeds instance size");
    if (prep.size() < 2) throw SizeError("a level needs at least two elements");
    const auto& e = prep.sorted_elements;
    std::vector<SEPoint> out;
    BigCount pre = desc.preceding;

    LevelState state = LevelState::head(desc.start, abs_of(e[0]), abs_of(e[1]), pre);
    out.push_back({state.A, state.B, 0, pre, true});
    pre += 2;
    out.push_back({state.C, state.D, 0, pre, false});
    if (desc.element_budget < 2) return out;

    state.seed_third(abs_of(e[2]), abs_of(e[1]), abs_of(e[0]));
    for (std::size_t j = 2; j <= desc.element_budget; ++j) {
        if (j > 2) state.step(abs_of(e[j]));
        auto [first, second] = state.current_pair();
        pre += state.dist_exp == 0 ? 2 : pow2(state.dist_exp);
        first.preceding = pre;
        out.push_back(first);
        pre += state.dist_exp == 0 ? 2 : pow2(state.dist_exp + 1);
        second.preceding = pre;
        out.push_back(second);
    }
    return out;
}

LevelDesc expand(const SEPoint& sep, const PreprocessedInstance& prep) {
    if (sep.dist_exp == 0)
        throw RangeError("distance-1 point has no interior possibilities");
    if (sep.dist_exp >= prep.size())
        throw RangeError("point distance exceeds instance size");
    return LevelDesc{sep.start, sep.dist_exp, sep.preceding};
}

}  // namespace senav
