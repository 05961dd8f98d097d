#include <random>

#include "doctest.h"
#include "senav/navigator.hpp"
#include "senav/oracle.hpp"
#include "senav/repetition.hpp"
#include "test_util.hpp"

using namespace senav;

namespace {

BigCount navigator_count(const std::vector<long long>& elements, long long target) {
    auto prep = preprocess(test_util::make_instance(elements, {target}));
    SearchConfig config;
    config.mode = SearchMode::Count;
    config.targets = {target};
    return solve(prep, config).result_for(target).final_count;
}

}  // namespace

TEST_SUITE("repetition") {

TEST_CASE("coefficient rows follow the binomial expansions") {
    CHECK(coefficients(1) == std::vector<BigCount>{1});
    CHECK(coefficients(2) == std::vector<BigCount>{2, 1});
    CHECK(coefficients(3) == std::vector<BigCount>{3, 3, 1});
    CHECK(coefficients(4) == std::vector<BigCount>{4, 6, 4, 1});
    CHECK(coefficients(5) == std::vector<BigCount>{5, 10, 10, 5, 1});
    CHECK(coefficients(6) == std::vector<BigCount>{6, 15, 20, 15, 6, 1});
    CHECK(coefficients(7) == std::vector<BigCount>{7, 21, 35, 35, 21, 7, 1});
    CHECK(coefficients(8) == std::vector<BigCount>{8, 28, 56, 70, 56, 28, 8, 1});
}

TEST_CASE("trivial_total skips when no explored subset had solutions") {
    TrivialAccumulator acc;
    acc.a_counts = {0, 0, 0, 0};
    CHECK(trivial_total(acc) == 0);
}

TEST_CASE("trivial_total recovers the skipped solutions of 5,5,5,5,5 at 10") {
    // Explored counts per step: pre-repetition pair found 2, first tail
    // window found 1, second found 0; the skipped regions hold 6 solutions
    // (brute force count C(5,2) = 10, explored paths found 4).
    TrivialAccumulator acc;
    acc.a_counts = {2, 1, 0};
    CHECK(trivial_total(acc) == 6);
}

TEST_CASE("detect_repetition compares the incoming shifted value with A") {
    LevelState state = LevelState::head(0, 5, 5, 0);
    state.seed_third(5, 5, 5);
    auto pair = state.step(5);
    (void)pair;
    CHECK(detect_repetition(state, 5));
    CHECK_FALSE(detect_repetition(state, 10));
}

TEST_CASE("repetition end-to-end counts match brute force on fixed sets") {
    CHECK(navigator_count({5, 5, 5, 5, 10}, 10) == 7);
    CHECK(navigator_count({5, 5, 5, 5, 10}, 20) ==
          oracle::baseline_count({5, 5, 5, 5, 10}, 20,
                                 oracle::BaselineMethod::BruteForce));
    CHECK(navigator_count({3, 3, 3}, 6) == 3);
    CHECK(navigator_count({5, 5, 5, 5, 5}, 10) == 10);
    CHECK(navigator_count({-2, 2, 5}, 0) ==
          oracle::baseline_count({-2, 2, 5}, 0, oracle::BaselineMethod::BruteForce));
}

TEST_CASE("multisets with heavy repetition match brute force exactly") {
    std::mt19937 rng(52);
    for (int round = 0; round < 200; ++round) {
        std::uniform_int_distribution<int> n_dist(3, 14);
        std::uniform_int_distribution<int> distinct_dist(1, 3);
        std::uniform_int_distribution<long long> value_dist(-12, 12);
        int n = n_dist(rng);
        int distinct = distinct_dist(rng);
        std::vector<long long> pool;
        for (int i = 0; i < distinct; ++i) {
            long long v = value_dist(rng);
            pool.push_back(v == 0 ? 1 : v);
        }
        std::vector<long long> elements;
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (int i = 0; i < n; ++i) elements.push_back(pool[pick(rng)]);
        long long target = test_util::random_in_bounds_target(rng, elements);
        CAPTURE(elements);
        CAPTURE(target);
        BigCount truth = oracle::baseline_count(elements, target,
                                                oracle::BaselineMethod::BruteForce);
        CHECK(navigator_count(elements, target) == truth);
    }
}

TEST_CASE("explored work inside a run stays pinned to the pre-repetition pair") {
    // Trace the repetition tail windows: each covers 2^last_part_dist
    // positions, the size of the pair where the repeated element first
    // appeared.
    auto prep = preprocess(test_util::make_instance({5, 5, 5, 5, 5, 5}, {15}));
    SearchConfig config;
    config.mode = SearchMode::Count;
    config.targets = {15};
    config.trace = true;
    std::vector<TraceEvent> events;
    config.sink = [&](const TraceEvent& e) { events.push_back(e); };
    Outcome outcome = solve(prep, config);
    CHECK(outcome.result_for(15).final_count ==
          oracle::baseline_count({5, 5, 5, 5, 5, 5}, 15,
                                 oracle::BaselineMethod::BruteForce));
    bool saw_begin = false, saw_end = false;
    bool in_run = false;
    unsigned window_exp = 0;
    bool window_fixed = false;
    for (const auto& e : events) {
        if (e.depth != 0) continue;
        if (e.kind == TraceKind::RepetitionBegin) {
            saw_begin = true;
            in_run = true;
            window_fixed = false;
        }
        if (e.kind == TraceKind::RepetitionEnd) {
            saw_end = true;
            in_run = false;
        }
        // Every explored tail window inside a run keeps the size of the
        // pre-repetition pair: a constant distance exponent.
        if (in_run && e.kind == TraceKind::Visit) {
            if (!window_fixed) {
                window_exp = e.sep.dist_exp;
                window_fixed = true;
            }
            CHECK(e.sep.dist_exp == window_exp);
        }
    }
    CHECK(saw_begin);
    CHECK(saw_end);
}

}  // TEST_SUITE
