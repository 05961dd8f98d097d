#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "doctest.h"
#include "senav/navigator.hpp"
#include "senav/oracle.hpp"
#include "test_util.hpp"

using namespace senav;

namespace {

Outcome run(const std::vector<long long>& elements, std::vector<long long> targets,
            SearchMode mode = SearchMode::Count, bool allow_empty = true) {
    auto prep = preprocess(test_util::make_instance(elements, targets, allow_empty));
    SearchConfig config;
    config.mode = mode;
    config.targets = std::move(targets);
    return solve(prep, config);
}

BigCount brute(const std::vector<long long>& elements, long long target,
               bool allow_empty = true) {
    return oracle::baseline_count(elements, target, oracle::BaselineMethod::BruteForce,
                                  allow_empty);
}

}  // namespace

TEST_SUITE("navigator") {

TEST_CASE("classify decisions") {
    CHECK(classify(SEPoint{13, 28, 4, 96, false}, 24) == Classification::ZoomIn);
    CHECK(classify(SEPoint{12, 17, 1, 0, true}, 17) == Classification::SolutionAtEnd);
    CHECK(classify(SEPoint{12, 17, 1, 0, true}, 12) == Classification::SolutionAtStart);
    CHECK(classify(SEPoint{162, 179, 0, 0, false}, 166) ==
          Classification::FalsePositiveLeaf);
    CHECK(classify(SEPoint{25, 28, 1, 0, true}, 24) == Classification::StopLevel);
    CHECK(classify(SEPoint{25, 28, 1, 0, false}, 24) == Classification::Skip);
    CHECK(classify(SEPoint{3, 4, 0, 4, true}, 10) == Classification::Skip);
}

TEST_CASE("the worked 1..8 instance counts ten 24s at the expected indices") {
    Outcome outcome = run({1, 2, 3, 4, 5, 6, 7, 8}, {24});
    CHECK(outcome.result_for(24).final_count == 10);
    std::set<BigCount> indices;
    for (const auto& w : outcome.witnesses) indices.insert(w.preceding_index);
    std::set<BigCount> expected{206, 119, 122, 213, 216, 175, 182, 227, 228, 185};
    CHECK(indices == expected);
    // Index 206 decodes to 2 + 3 + 4 + 7 + 8.
    for (const auto& w : outcome.witnesses)
        if (w.preceding_index == 206)
            CHECK(w.elements == std::vector<long long>{2, 3, 4, 7, 8});
}

TEST_CASE("mixed-sign decision through a shifted zoom") {
    Outcome outcome = run({-1, 2, -3, 4, -5, 6}, {3}, SearchMode::Decision);
    CHECK(outcome.result_for(3).satisfiable);
}

TEST_CASE("false positive at (162, 179) on the random large set") {
    auto prep = preprocess(test_util::make_instance({17, 25, 31, 47, 59, 71, 89, 97}, {166}));
    SearchConfig config;
    config.mode = SearchMode::Count;
    config.targets = {166};
    config.trace = true;
    std::vector<TraceEvent> events;
    config.sink = [&](const TraceEvent& e) { events.push_back(e); };
    Outcome outcome = solve(prep, config);
    CHECK(outcome.result_for(166).satisfiable);
    CHECK(outcome.false_positive_count >= 1);
    bool straddle_seen = false;
    for (const auto& e : events)
        if (e.kind == TraceKind::FalsePositive && e.sep.start == SumValue{162} &&
            e.sep.end == SumValue{179})
            straddle_seen = true;
    CHECK(straddle_seen);
}

TEST_CASE("out-of-bounds targets cost zero nodes") {
    Outcome outcome = run({1, 2, 3, 4}, {100});
    CHECK_FALSE(outcome.result_for(100).satisfiable);
    CHECK(outcome.result_for(100).shortcut == TrivialKind::OutOfBounds);
    CHECK(outcome.nodes_visited == 0);

    Outcome parity = run({2, 4, 6}, {7});
    CHECK_FALSE(parity.result_for(7).satisfiable);
    CHECK(parity.result_for(7).shortcut == TrivialKind::EvenOddUnsat);
    CHECK(parity.nodes_visited == 0);
}

TEST_CASE("multi-target traversal equals independent solves") {
    Outcome both = run({1, 2, 3, 4, 5, 6, 7, 8}, {24, 36});
    CHECK(both.result_for(24).final_count == 10);
    CHECK(both.result_for(36).final_count == 1);

    Outcome single = run({1, 2, 3, 4, 5, 6, 7, 8}, {24});
    CHECK(single.result_for(24).final_count == both.result_for(24).final_count);

    // Singleton reduction: solve_multi on one target equals solve.
    auto prep18 = preprocess(test_util::make_instance({1, 2, 3, 4, 5, 6, 7, 8}, {24}));
    SearchConfig one;
    one.mode = SearchMode::Count;
    one.targets = {24};
    Outcome via_multi = solve_multi(prep18, one);
    CHECK(via_multi.result_for(24).final_count == single.result_for(24).final_count);
    CHECK(via_multi.nodes_visited == single.nodes_visited);

    Outcome split = run({2, 3, 5, 7, 11}, {14, 100});
    CHECK(split.result_for(14).satisfiable);
    CHECK_FALSE(split.result_for(100).satisfiable);

    std::mt19937 rng(100);
    for (int round = 0; round < 40; ++round) {
        auto elements = test_util::random_elements(rng, 3 + round % 10, -30, 30);
        long long t1 = test_util::random_in_bounds_target(rng, elements);
        long long t2 = test_util::random_in_bounds_target(rng, elements);
        if (t1 == t2) t2 += 1;
        auto prep = preprocess(test_util::make_instance(elements, {t1, t2}));
        SearchConfig config;
        config.mode = SearchMode::Count;
        config.targets = {t1, t2};
        Outcome multi = solve_multi(prep, config);
        CHECK(multi.result_for(t1).final_count == brute(elements, t1));
        CHECK(multi.result_for(t2).final_count == brute(elements, t2));
    }
}

TEST_CASE("oracle equivalence fuzz with zeros and duplicates") {
    std::mt19937 rng(561);
    for (int round = 0; round < 300; ++round) {
        auto elements = test_util::random_elements(rng, 1 + round % 16, -50, 50);
        long long target = test_util::random_in_bounds_target(rng, elements);
        CAPTURE(round);
        CAPTURE(target);
        Outcome outcome = run(elements, {target});
        CHECK(outcome.result_for(target).final_count == brute(elements, target));
        CHECK(outcome.max_depth <= (elements.size() + 1) / 2);
    }
}

TEST_CASE("decision mode agrees with count mode") {
    std::mt19937 rng(77);
    for (int round = 0; round < 120; ++round) {
        auto elements = test_util::random_elements(rng, 2 + round % 12, -25, 25);
        long long target = test_util::random_in_bounds_target(rng, elements);
        bool counted = run(elements, {target}).result_for(target).final_count > 0;
        bool decided = run(elements, {target}, SearchMode::Decision)
                           .result_for(target)
                           .satisfiable;
        CHECK(counted == decided);
    }
}

TEST_CASE("witnesses re-sum to their targets and decode through the mapping") {
    std::mt19937 rng(88);
    for (int round = 0; round < 60; ++round) {
        auto elements = test_util::random_elements(rng, 3 + round % 11, -40, 40);
        long long target = test_util::random_in_bounds_target(rng, elements);
        Outcome outcome = run(elements, {target});
        for (const auto& w : outcome.witnesses) {
            long long sum = std::accumulate(w.elements.begin(), w.elements.end(), 0LL);
            CHECK(sum == w.target);
            CHECK(w.target == target);
        }
    }
}

TEST_CASE("zero padding multiplies counts by powers of two") {
    std::vector<long long> base{3, 5, 9, 14};
    long long target = 14;
    BigCount k = run(base, {target}).result_for(target).final_count;
    REQUIRE(k > 0);
    for (int z = 1; z <= 6; ++z) {
        auto padded = base;
        padded.insert(padded.end(), z, 0);
        CHECK(run(padded, {target}).result_for(target).final_count ==
              k * pow2(static_cast<unsigned>(z)));
    }
    for (int z = 0; z <= 6; ++z) {
        std::vector<long long> zeros(z, 0);
        CHECK(run(zeros, {0}).result_for(0).final_count ==
              pow2(static_cast<unsigned>(z)));
    }
}

TEST_CASE("empty-subset policy") {
    // All-positive set, target zero: only the empty subset hits.
    CHECK(run({1, 2, 3}, {0}).result_for(0).final_count == 1);
    CHECK(run({1, 2, 3}, {0}, SearchMode::Count, false).result_for(0).final_count == 0);
    CHECK_FALSE(
        run({1, 2, 3}, {0}, SearchMode::Decision, false).result_for(0).satisfiable);
    // With a zero in the set the dressed empty subset still counts.
    CHECK(run({0, 5}, {0}, SearchMode::Count, false).result_for(0).final_count == 1);
    CHECK(run({0, 5}, {0}, SearchMode::Decision, false).result_for(0).satisfiable);
    // Mixed signs: the cancelling pair plus empty handling.
    CHECK(run({-2, 2, 5}, {0}).result_for(0).final_count == brute({-2, 2, 5}, 0));
    CHECK(run({-2, 2, 5}, {0}, SearchMode::Count, false).result_for(0).final_count ==
          brute({-2, 2, 5}, 0, false));
    // Pure-zero instance without the empty subset.
    CHECK(run({0, 0}, {0}, SearchMode::Count, false).result_for(0).final_count == 3);
}

TEST_CASE("small instances bypass to direct enumeration") {
    CHECK(run({7}, {7}).result_for(7).final_count == 1);
    CHECK(run({7}, {3}).result_for(3).satisfiable == false);
    CHECK(run({-4, 4}, {0}).result_for(0).final_count == brute({-4, 4}, 0));
    CHECK(run({2, 3}, {5}).result_for(5).final_count == 1);
}

TEST_CASE("enumerate mode respects the solution limit") {
    auto prep = preprocess(test_util::make_instance({1, 2, 3, 4, 5, 6, 7, 8}, {24}));
    SearchConfig config;
    config.mode = SearchMode::Enumerate;
    config.targets = {24};
    config.solution_limit = 4;
    Outcome outcome = solve(prep, config);
    CHECK(outcome.witnesses.size() == 4);
    CHECK(outcome.limit_reached);
}

TEST_CASE("cancellation returns partial results") {
    auto prep = preprocess(test_util::make_instance({1, 2, 3, 4, 5, 6, 7, 8}, {24}));
    SearchConfig config;
    config.mode = SearchMode::Count;
    config.targets = {24};
    std::atomic<bool> cancel{true};
    config.cancel = &cancel;
    Outcome outcome = solve(prep, config);
    CHECK(outcome.interrupted);
}

TEST_CASE("deterministic trace sequences") {
    auto trace_of = [](long long target) {
        auto prep = preprocess(
            test_util::make_instance({3, 5, 9, 14, 20, 25, 33, 40}, {target}));
        SearchConfig config;
        config.mode = SearchMode::Count;
        config.targets = {target};
        config.trace = true;
        std::vector<std::tuple<unsigned, TraceKind, SumValue, SumValue>> events;
        config.sink = [&](const TraceEvent& e) {
            events.emplace_back(e.depth, e.kind, e.sep.start, e.sep.end);
        };
        solve(prep, config);
        return events;
    };
    CHECK(trace_of(40) == trace_of(40));
}

TEST_CASE("false positives on unsatisfiable instances are distance-1 leaves") {
    std::mt19937 rng(99);
    int unsat_seen = 0;
    for (int round = 0; round < 200 && unsat_seen < 40; ++round) {
        auto elements = test_util::random_elements(rng, 3 + round % 10, -30, 30, 0.0, 0.2);
        long long target = test_util::random_in_bounds_target(rng, elements);
        if (brute(elements, target) != 0) continue;
        ++unsat_seen;
        auto prep = preprocess(test_util::make_instance(elements, {target}));
        SearchConfig config;
        config.mode = SearchMode::Count;
        config.targets = {target};
        config.trace = true;
        BigCount fp_events = 0;
        config.sink = [&](const TraceEvent& e) {
            if (e.kind == TraceKind::FalsePositive) {
                ++fp_events;
                CHECK(e.sep.dist_exp == 0);
            }
        };
        Outcome outcome = solve(prep, config);
        CHECK_FALSE(outcome.result_for(target).satisfiable);
        CHECK(outcome.false_positive_count == fp_events);
        CHECK(outcome.nodes_visited >= outcome.false_positive_count);
    }
    CHECK(unsat_seen > 0);
}

TEST_CASE("parallel mode merges to the same counts") {
    std::mt19937 rng(123);
    for (int round = 0; round < 40; ++round) {
        auto elements = test_util::random_elements(rng, 6 + round % 10, -40, 40);
        long long target = test_util::random_in_bounds_target(rng, elements);
        auto prep = preprocess(test_util::make_instance(elements, {target}));
        SearchConfig config;
        config.mode = SearchMode::Count;
        config.targets = {target};
        Outcome sequential = solve(prep, config);
        config.parallel = true;
        Outcome parallel = solve(prep, config);
        CHECK(parallel.result_for(target).final_count ==
              sequential.result_for(target).final_count);
        CHECK(parallel.nodes_visited == sequential.nodes_visited);
    }
}

}  // TEST_SUITE
