#include <cstdlib>
#include <random>

#include "doctest.h"
#include "senav/oracle.hpp"
#include "senav/sepoint.hpp"
#include "test_util.hpp"

using namespace senav;

namespace {

struct FlatPoint {
    long long start, end;
    BigCount distance;
};

std::vector<FlatPoint> flatten(const std::vector<SEPoint>& points) {
    std::vector<FlatPoint> out;
    for (const auto& p : points)
        out.push_back({static_cast<long long>(p.start), static_cast<long long>(p.end),
                       p.distance()});
    return out;
}

bool operator==(const FlatPoint& a, const FlatPoint& b) {
    return a.start == b.start && a.end == b.end && a.distance == b.distance;
}

PreprocessedInstance prep_of(std::vector<long long> elements) {
    return preprocess(test_util::make_instance(std::move(elements), {1}));
}

}  // namespace

TEST_SUITE("sepoint") {

TEST_CASE("first level of 1..8 reproduces the reference listing") {
    auto points = first_level(prep_of({1, 2, 3, 4, 5, 6, 7, 8}));
    // 2 head points + 2 per element from the third onward = 4n - 4 values.
    REQUIRE(points.size() == 14);
    std::vector<FlatPoint> expected{
        {0, 1, 1},    {2, 3, 1},                    // first four possibilities
        {3, 4, 1},    {5, 6, 1},                    // element 3
        {4, 7, 3},    {7, 10, 3},                   // element 4
        {5, 11, 7},   {9, 15, 7},                   // element 5
        {6, 16, 15},  {11, 21, 15},                 // element 6
        {7, 22, 31},  {13, 28, 31},                 // element 7
        {8, 29, 63},  {15, 36, 63},                 // element 8
    };
    auto flat = flatten(points);
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CAPTURE(i);
        CHECK(flat[i] == expected[i]);
    }
    // Preceding indices: first of pair at 2^j, second at 2^j + 2^(j-1).
    CHECK(points[2].preceding == 4);
    CHECK(points[3].preceding == 6);
    CHECK(points[10].preceding == 64);
    CHECK(points[11].preceding == 96);
    CHECK(points[12].preceding == 128);
    CHECK(points[13].preceding == 192);
}

TEST_CASE("first level of a mixed-sign set is shifted by the negative total") {
    auto points = first_level(prep_of({-1, 1, -2, 2, -3, 3}));
    std::vector<FlatPoint> expected{
        {-6, -5, 1},  {-5, -4, 1},  {-4, -3, 1},  {-3, -2, 1},  {-4, -2, 3},
        {-2, 0, 3},   {-3, 1, 7},   {-1, 3, 7},   {-3, 3, 15},  {0, 6, 15},
    };
    auto flat = flatten(points);
    REQUIRE(flat.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CAPTURE(i);
        CHECK(flat[i].start == expected[i].start);
        CHECK(flat[i].end == expected[i].end);
    }
}

TEST_CASE("smallest supported instance emits 4n - 4 values") {
    auto points = first_level(prep_of({1, 2, 3}));
    auto flat = flatten(points);
    std::vector<FlatPoint> expected{{0, 1, 1}, {2, 3, 1}, {3, 4, 1}, {5, 6, 1}};
    REQUIRE(flat.size() == 4);  // 8 scalar values = 4*3 - 4
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(flat[i] == expected[i]);
    CHECK_THROWS_AS(first_level(prep_of({1, 2})), SizeError);
}

TEST_CASE("step applies the five-variable recurrence") {
    auto prep = prep_of({1, 2, 3, 4, 5, 6, 7, 8});
    LevelState state = LevelState::head(0, 1, 2, 0);
    state.seed_third(3, 2, 1);
    auto [p1, p2] = state.step(4);
    CHECK(p1.start == SumValue{4});
    CHECK(p1.end == SumValue{7});
    CHECK(p2.start == SumValue{7});
    CHECK(p2.end == SumValue{10});
    CHECK(p1.distance() == 3);
    auto [q1, q2] = state.step(5);
    CHECK(q1.start == SumValue{5});
    CHECK(q1.end == SumValue{11});
    CHECK(q2.start == SumValue{9});
    CHECK(q2.end == SumValue{15});
    CHECK(q1.distance() == 7);
    // Prefix property: D - A equals the sum of magnitudes up to elem_idx - 1.
    CHECK(state.D - state.A == SumValue{1 + 2 + 3 + 4});
}

TEST_CASE("prefix property holds while stepping random levels") {
    std::mt19937 rng(4096);
    for (int round = 0; round < 50; ++round) {
        auto elements = test_util::random_elements(rng, 4 + round % 10, 1, 99, 0.0, 0.3);
        auto prep = prep_of(elements);
        if (prep.size() < 4) continue;
        const auto& e = prep.sorted_elements;
        LevelState state = LevelState::head(prep.neg_shift, std::llabs(e[0]),
                                            std::llabs(e[1]), 0);
        state.seed_third(std::llabs(e[2]), std::llabs(e[1]), std::llabs(e[0]));
        SumValue prefix = std::llabs(e[0]) + std::llabs(e[1]) + std::llabs(e[2]);
        for (std::size_t j = 3; j < prep.size(); ++j) {
            state.step(std::llabs(e[j]));
            CHECK(state.A == SumValue{std::llabs(e[j])} + state.base_shift);
            CHECK(state.D - state.A == prefix);
            prefix += std::llabs(e[j]);
        }
    }
}

TEST_CASE("expand translates the global prefix pattern to the point") {
    auto prep = prep_of({1, 2, 3, 4, 5, 6, 7, 8});
    auto points = first_level(prep);
    const SEPoint& p722 = points[10];  // (7, 22)31
    REQUIRE(p722.start == SumValue{7});
    LevelDesc inner = expand(p722, prep);
    CHECK(inner.start == SumValue{7});
    CHECK(inner.element_budget == 4);
    auto level = flatten(enumerate_level(prep, inner));
    std::vector<FlatPoint> expected{
        {7, 8, 1},   {9, 10, 1},  {10, 11, 1}, {12, 13, 1},
        {11, 14, 3}, {14, 17, 3}, {12, 18, 7}, {16, 22, 7},
    };
    REQUIRE(level.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CAPTURE(i);
        CHECK(level[i] == expected[i]);
    }

    // The (13, 28)31 sibling ends at (18, 24)7, (22, 28)7.
    auto sibling = flatten(enumerate_level(prep, expand(points[11], prep)));
    CHECK(sibling[sibling.size() - 2] == FlatPoint{18, 24, 7});
    CHECK(sibling.back() == FlatPoint{22, 28, 7});

    // Distance-1 points have no interior to expand.
    CHECK_THROWS_AS(expand(points[2], prep), RangeError);
}

TEST_CASE("position fidelity against the oracle enumeration") {
    std::mt19937 rng(90);
    for (int round = 0; round < 80; ++round) {
        auto elements = test_util::random_elements(rng, 3 + round % 14, -50, 50, 0.0, 0.3);
        auto prep = prep_of(elements);
        if (prep.size() < 3) continue;
        auto table = oracle::enumerate_all(prep.sorted_elements);
        // The oracle enumerates raw signs; the transformed reading shifts
        // every position by the sum it removed, so compare in shifted space.
        std::vector<long long> abs_elements;
        for (long long e : prep.sorted_elements) abs_elements.push_back(std::llabs(e));
        auto abs_table = oracle::enumerate_all(abs_elements);
        for (const auto& p : first_level(prep)) {
            auto at = [&](BigCount idx) {
                return abs_table.sums[static_cast<std::size_t>(idx)] +
                       static_cast<long long>(prep.neg_shift);
            };
            CHECK(static_cast<long long>(p.start) == at(p.preceding));
            CHECK(static_cast<long long>(p.end) == at(p.preceding + p.distance()));
        }
    }
}

TEST_CASE("symmetry of emitted values at their claimed indices") {
    auto prep = prep_of({3, 9, 14, 20, 25, 40});
    auto table = oracle::enumerate_all(prep.sorted_elements);
    REQUIRE(oracle::check_symmetry(table));
    for (const auto& p : first_level(prep)) {
        std::size_t idx = static_cast<std::size_t>(p.preceding);
        CHECK(table.sums[idx] + table.sums[table.sums.size() - 1 - idx] == table.total);
    }
}

TEST_CASE("expanded levels reproduce the global prefix pattern") {
    std::mt19937 rng(91);
    for (int round = 0; round < 30; ++round) {
        auto elements = test_util::random_elements(rng, 4 + round % 8, 1, 60, 0.0, 0.2);
        auto prep = prep_of(elements);
        if (prep.size() < 4) continue;
        auto top = first_level(prep);
        for (const auto& p : top) {
            if (p.dist_exp == 0) continue;
            auto inner = enumerate_level(prep, expand(p, prep));
            auto pattern = enumerate_level(
                prep, LevelDesc{0, p.dist_exp, 0});
            REQUIRE(inner.size() == pattern.size());
            for (std::size_t i = 0; i < inner.size(); ++i) {
                CHECK(inner[i].start - p.start == pattern[i].start);
                CHECK(inner[i].end - p.start == pattern[i].end);
            }
        }
    }
}

}  // TEST_SUITE
