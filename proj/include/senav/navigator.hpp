#pragma once

// The LIFO-stack search engine.  Levels are walked with the constant-space
// iterator from sepoint.hpp; each point is classified against the sum-bound
// criteria of every live target, zoomed into when a target lies strictly
// inside, and counted exactly (boundary hits are solutions, distance-1
// straddles are false positives, a first point past the largest target kills
// the rest of its level).  Repeated magnitudes divert into the trivial
// counting scheme from repetition.hpp.

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "senav/core.hpp"
#include "senav/ints.hpp"
#include "senav/mapping.hpp"
#include "senav/sepoint.hpp"

namespace senav {

enum class SearchMode { Decision, Count, Enumerate };

enum class TraceKind {
    Visit,
    ZoomIn,
    Solution,
    FalsePositive,
    SkipLevelRemainder,
    RepetitionBegin,
    RepetitionEnd,
};

struct TraceEvent {
    unsigned depth = 0;
    TraceKind kind = TraceKind::Visit;
    SEPoint sep;
    long long target = 0;          // Solution / FalsePositive
    BigCount solution_index = 0;   // Solution
};

using TraceSink = std::function<void(const TraceEvent&)>;

struct SearchConfig {
    SearchMode mode = SearchMode::Count;
    std::vector<long long> targets;
    std::optional<BigCount> solution_limit;  // Enumerate: stop after this many
    bool trace = false;
    bool parallel = false;
    TraceSink sink;                         // required when trace is set
    std::atomic<bool>* cancel = nullptr;    // cooperative interruption
    BigCount witness_cap = 4096;            // recording cap in Count mode
    // Streaming hook for Enumerate mode: fired as each witness is found
    // (sequential traversal only; parallel order is unspecified).
    std::function<void(const SolutionRecord&)> on_witness;
};

struct TargetResult {
    long long target = 0;
    TrivialKind shortcut = TrivialKind::NotTrivial;
    bool satisfiable = false;
    BigCount actual_count = 0;
    BigCount trivial_count = 0;
    BigCount final_count = 0;
    BigCount false_positives = 0;
    bool pure_zero = false;  // the p term of the final-count formula
};

struct Outcome {
    std::vector<TargetResult> per_target;
    std::vector<SolutionRecord> witnesses;
    BigCount false_positive_count = 0;  // summed over targets
    unsigned max_depth = 0;
    BigCount nodes_visited = 0;
    bool limit_reached = false;  // Enumerate stopped at solution_limit
    bool interrupted = false;    // external cancellation fired

    const TargetResult& result_for(long long target) const;
    bool satisfiable(long long target) const { return result_for(target).satisfiable; }
};

// Runs the search for every configured target in a single traversal.
Outcome solve(const PreprocessedInstance& prep, const SearchConfig& config);

// Multi-target entry point: identical traversal, kept as a named surface for
// callers that want the >= 2 targets contract spelled out.
Outcome solve_multi(const PreprocessedInstance& prep, const SearchConfig& config);

// Classification of a single point against a single target.
enum class Classification {
    Skip,
    SolutionAtStart,
    SolutionAtEnd,
    ZoomIn,
    FalsePositiveLeaf,
    StopLevel,
};

Classification classify(const SEPoint& sep, long long target);

}  // namespace senav
