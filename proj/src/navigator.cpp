#include "senav/navigator.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "senav/repetition.hpp"

namespace senav {

namespace {

constexpr std::size_t kMaxIndexedElements = 126;  // index bookkeeping is 128-bit

SumValue abs_of(long long e) {
    return e < 0 ? -static_cast<SumValue>(e) : static_cast<SumValue>(e);
}

struct Accum {
    std::vector<BigCount> actual;  // per live target
    std::vector<BigCount> trivial;
    std::vector<BigCount> false_pos;
    std::vector<SolutionRecord> witnesses;
    BigCount nodes = 0;
    unsigned max_depth = 0;

    explicit Accum(std::size_t targets)
        : actual(targets, 0), trivial(targets, 0), false_pos(targets, 0) {}

    void merge(const Accum& other) {
        for (std::size_t i = 0; i < actual.size(); ++i) {
            actual[i] += other.actual[i];
            trivial[i] += other.trivial[i];
            false_pos[i] += other.false_pos[i];
        }
        witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
        nodes += other.nodes;
        max_depth = std::max(max_depth, other.max_depth);
    }
};

// Boundary positions of a zoomed point.  The inner level re-enters both (its
// first start and final end are the outer point's own possibilities), and any
// solution there was already recorded when the outer point was classified, so
// inner findings at these indices are duplicates under multi-target zooms.
struct Suppress {
    bool active = false;
    BigCount lo = 0, hi = 0;

    bool covers(BigCount index) const { return active && (index == lo || index == hi); }
};

struct Frame {
    LevelDesc desc;
    unsigned depth;
    Suppress suppress;
};

class Searcher {
  public:
    Searcher(const PreprocessedInstance& prep, const SearchConfig& config,
             std::vector<long long> live_targets)
        : prep_(prep),
          config_(config),
          targets_(std::move(live_targets)),
          acc_(targets_.size()),
          decided_(targets_.size()),
          undecided_(static_cast<long long>(targets_.size())) {
        max_target_ = targets_.empty() ? 0 : targets_.back();
        for (auto& d : decided_) d.store(false, std::memory_order_relaxed);
        empty_index_ = 0;
        for (std::size_t i = 0; i < prep_.size(); ++i)
            if (prep_.sorted_elements[i] < 0) empty_index_ |= pow2(static_cast<unsigned>(i));
        trace_on_ = config_.trace && config_.sink && !config_.parallel;
    }

    void run() {
        if (prep_.size() < 3) {
            small_instance();
            return;
        }
        LevelDesc top{prep_.neg_shift, prep_.size() - 1, 0};
        if (config_.parallel && !trace_on_) {
            // First pass walks the top level sequentially and defers zoom
            // frames; the pool then drains them into per-frame accumulators
            // that merge in frame order.
            std::vector<Frame> frames;
            run_level(top, 0, acc_, Suppress{}, &frames);
            run_parallel(frames);
        } else {
            run_level(top, 0, acc_, Suppress{}, nullptr);
        }
    }

    Accum& accum() { return acc_; }
    bool limit_reached() const { return limit_reached_.load(); }
    bool interrupted() const { return cancelled_.load(); }

  private:
    bool stopped() {
        if (config_.cancel && config_.cancel->load(std::memory_order_relaxed))
            cancelled_.store(true, std::memory_order_relaxed);
        return stop_.load(std::memory_order_relaxed) ||
               cancelled_.load(std::memory_order_relaxed);
    }

    void trace(TraceKind kind, unsigned depth, const SEPoint& sep, long long target = 0,
               BigCount index = 0) {
        if (!trace_on_) return;
        config_.sink(TraceEvent{depth, kind, sep, target, index});
    }

    // Enumerates the whole (tiny) possibility space directly; the S/E scheme
    // needs three elements to form pairs.
    void small_instance() {
        std::size_t n = prep_.size();
        for (BigCount idx = 0; idx < pow2(static_cast<unsigned>(n)); ++idx) {
            SumValue value = prep_.neg_shift;
            for (std::size_t i = 0; i < n; ++i)
                if ((idx >> i) & 1) value = checked_add(value, abs_of(prep_.sorted_elements[i]));
            for (std::size_t t = 0; t < targets_.size(); ++t)
                if (value == static_cast<SumValue>(targets_[t]))
                    record_solution(t, idx, 0, acc_, Suppress{}, nullptr, nullptr);
        }
    }

    void run_parallel(std::vector<Frame>& frames) {
        if (frames.empty()) return;
        unsigned workers = std::max(1u, std::thread::hardware_concurrency());
        workers = static_cast<unsigned>(std::min<std::size_t>(workers, frames.size()));
        std::vector<Accum> results(frames.size(), Accum(targets_.size()));
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            std::size_t i;
            while ((i = next.fetch_add(1)) < frames.size()) {
                if (stopped()) break;
                run_level(frames[i].desc, frames[i].depth, results[i],
                          frames[i].suppress, nullptr);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
        for (const auto& r : results) acc_.merge(r);
    }

    // Walks one level.  Returns the per-target count of solutions found in
    // this level and everything beneath it (the repetition scheme needs the
    // per-pair totals).
    std::vector<BigCount> run_level(const LevelDesc& desc, unsigned depth, Accum& acc,
                                    Suppress suppress, std::vector<Frame>* collector) {
        const auto& e = prep_.sorted_elements;
        acc.max_depth = std::max(acc.max_depth, depth);
        const std::size_t n_targets = targets_.size();
        std::vector<BigCount> found(n_targets, 0);
        std::vector<BigCount> first_count(n_targets, 0), second_count(n_targets, 0);
        std::vector<BigCount> last_count(n_targets, 0);

        // Repetition run state; columns[t] is the per-target explored-count list.
        bool run_active = false;
        long long repeat_count = 0;
        unsigned last_part_dist = 0;
        std::vector<std::vector<BigCount>> columns(n_targets);

        LevelState state;
        BigCount pre = desc.preceding;
        bool cont = true;
        for (std::size_t j = 0; j <= desc.element_budget && cont && !stopped(); ++j) {
            if (j == 0) {
                state = LevelState::head(desc.start, abs_of(e[0]), abs_of(e[1]),
                                         desc.preceding);
                SEPoint p{state.A, state.B, 0, pre, true};
                cont = visit_point(p, depth, acc, suppress, first_count, found, nullptr);
            } else if (j == 1) {
                pre += 2;
                SEPoint p{state.C, state.D, 0, pre, false};
                cont = visit_point(p, depth, acc, suppress, second_count, found, nullptr);
            } else {
                bool repeating = false;
                if (j == 2) {
                    std::fill(first_count.begin(), first_count.end(), 0);
                    std::fill(second_count.begin(), second_count.end(), 0);
                    state.seed_third(abs_of(e[2]), abs_of(e[1]), abs_of(e[0]));
                } else {
                    SumValue next = abs_of(e[j]);
                    repeating = detect_repetition(state, next);
                    state.step(next);
                    if (repeating) {
                        repeat_count = repeat_count == 0 ? 2 : repeat_count + 1;
                        if (!run_active) {
                            run_active = true;
                            last_part_dist = state.dist_exp + 1;
                            for (std::size_t t = 0; t < n_targets; ++t)
                                columns[t] = {first_count[t] + second_count[t]};
                            std::fill(first_count.begin(), first_count.end(), 0);
                            std::fill(second_count.begin(), second_count.end(), 0);
                            trace(TraceKind::RepetitionBegin, depth,
                                  state.current_pair().first);
                        }
                    } else {
                        if (run_active) {
                            flush_run(columns, found, acc, depth, state);
                            run_active = false;
                        } else {
                            std::fill(first_count.begin(), first_count.end(), 0);
                            std::fill(second_count.begin(), second_count.end(), 0);
                        }
                        last_part_dist = 0;
                        repeat_count = 0;
                    }
                }
                if (!repeating) {
                    pre += state.dist_exp == 0 ? 2 : pow2(state.dist_exp);
                    auto [p1, p2] = state.current_pair();
                    p1.preceding = pre;
                    bool defer_ok = collector && (j == desc.element_budget ||
                                                  abs_of(e[j + 1]) != abs_of(e[j]));
                    cont = visit_point(p1, depth, acc, suppress, first_count, found,
                                       defer_ok ? collector : nullptr);
                    if (cont) {
                        pre += state.dist_exp == 0 ? 2 : pow2(state.dist_exp + 1);
                        p2.preceding = pre;
                        cont = visit_point(p2, depth, acc, suppress, second_count, found,
                                           defer_ok ? collector : nullptr);
                    }
                } else {
                    // Only the non-redundant tail window of the pair is new;
                    // everything before it is a translated copy of earlier
                    // subsets and is settled by the trivial count at run end.
                    pre += pow2(state.dist_exp) + 2 * pow2(state.dist_exp + 1) -
                           pow2(last_part_dist);
                    SumValue a_start = checked_add(
                        checked_mul(abs_of(e[j - 1]), repeat_count), desc.start);
                    SEPoint tail{a_start, state.D, last_part_dist - 1, pre, false};
                    std::fill(last_count.begin(), last_count.end(), 0);
                    cont = visit_point(tail, depth, acc, suppress, last_count, found, nullptr);
                    pre -= pow2(state.dist_exp + 1) - pow2(last_part_dist);
                    for (std::size_t t = 0; t < n_targets; ++t)
                        columns[t].push_back(last_count[t]);
                }
            }
        }
        if (run_active) flush_run(columns, found, acc, depth, state);
        return found;
    }

    void flush_run(std::vector<std::vector<BigCount>>& columns, std::vector<BigCount>& found,
                   Accum& acc, unsigned depth, const LevelState& state) {
        for (std::size_t t = 0; t < targets_.size(); ++t) {
            TrivialAccumulator rep;
            rep.a_counts = columns[t];
            BigCount skipped = trivial_total(rep);
            acc.trivial[t] += skipped;
            found[t] += skipped;
            columns[t].clear();
        }
        trace(TraceKind::RepetitionEnd, depth, state.current_pair().first);
    }

    // Classifies one point for every live target and acts on the decision.
    // Returns false when the rest of the level is disqualified.
    bool visit_point(const SEPoint& p, unsigned depth, Accum& acc, Suppress suppress,
                     std::vector<BigCount>& point_count, std::vector<BigCount>& level_found,
                     std::vector<Frame>* collector) {
        if (stopped()) return false;
        acc.nodes += 1;
        bool any_pass = false;
        bool any_interior = false;
        for (long long t : targets_) {
            SumValue tv = t;
            if (p.start <= tv && tv <= p.end) {
                any_pass = true;
                if (p.start < tv && tv < p.end) any_interior = true;
            }
        }
        if (!any_pass) {
            if (p.first_of_pair && p.start > static_cast<SumValue>(max_target_)) {
                trace(TraceKind::SkipLevelRemainder, depth, p);
                return false;
            }
            return true;
        }
        trace(TraceKind::Visit, depth, p);
        for (std::size_t t = 0; t < targets_.size(); ++t) {
            SumValue tv = targets_[t];
            if (p.start == tv)
                record_solution(t, p.preceding, depth, acc, suppress, &point_count,
                                &level_found);
            else if (p.end == tv)
                record_solution(t, p.preceding + p.distance(), depth, acc, suppress,
                                &point_count, &level_found);
        }
        if (any_interior) {
            if (p.dist_exp > 0) {
                trace(TraceKind::ZoomIn, depth, p);
                Suppress inner{true, p.preceding, p.preceding + p.distance()};
                if (collector) {
                    collector->push_back(
                        Frame{LevelDesc{p.start, p.dist_exp, p.preceding}, depth + 1,
                              inner});
                } else {
                    auto got = run_level(LevelDesc{p.start, p.dist_exp, p.preceding},
                                         depth + 1, acc, inner, nullptr);
                    for (std::size_t t = 0; t < targets_.size(); ++t) {
                        point_count[t] += got[t];
                        level_found[t] += got[t];
                    }
                }
            } else {
                // Adjacent points straddle the target: a fully traversed path
                // that cannot yield a solution.
                for (std::size_t t = 0; t < targets_.size(); ++t) {
                    SumValue tv = targets_[t];
                    if (p.start < tv && tv < p.end) {
                        acc.false_pos[t] += 1;
                        trace(TraceKind::FalsePositive, depth, p, targets_[t]);
                    }
                }
            }
        }
        return true;
    }

    void record_solution(std::size_t t, BigCount index, unsigned depth, Accum& acc,
                         Suppress suppress, std::vector<BigCount>* point_count,
                         std::vector<BigCount>* level_found) {
        if (suppress.covers(index)) return;  // already recorded at the outer point
        acc.actual[t] += 1;
        if (point_count) (*point_count)[t] += 1;
        if (level_found) (*level_found)[t] += 1;
        trace(TraceKind::Solution, depth, SEPoint{}, targets_[t], index);

        bool literal_empty = index == empty_index_;
        bool reportable = prep_.allow_empty || !literal_empty;
        if (reportable && config_.mode != SearchMode::Decision) {
            bool record = config_.mode == SearchMode::Enumerate ||
                          acc.witnesses.size() <
                              static_cast<std::size_t>(config_.witness_cap);
            if (record) {
                acc.witnesses.push_back(decode_index(index, targets_[t], prep_));
                if (config_.on_witness && !config_.parallel)
                    config_.on_witness(acc.witnesses.back());
            }
        }
        if (config_.mode == SearchMode::Enumerate && config_.solution_limit) {
            unsigned long long taken = witnesses_taken_.fetch_add(1) + 1;
            if (static_cast<BigCount>(taken) >= *config_.solution_limit) {
                limit_reached_.store(true, std::memory_order_relaxed);
                stop_.store(true, std::memory_order_relaxed);
            }
        }
        if (config_.mode == SearchMode::Decision) {
            // The literal empty subset only decides the instance if zeros can
            // dress it into a non-empty one.
            if (!reportable && prep_.zero_count == 0) return;
            if (!decided_[t].exchange(true, std::memory_order_relaxed)) {
                if (undecided_.fetch_sub(1, std::memory_order_relaxed) == 1)
                    stop_.store(true, std::memory_order_relaxed);
            }
        }
    }

    const PreprocessedInstance& prep_;
    const SearchConfig& config_;
    std::vector<long long> targets_;  // live targets, ascending
    long long max_target_ = 0;
    BigCount empty_index_ = 0;
    Accum acc_;
    std::atomic<bool> stop_{false};
    std::atomic<bool> limit_reached_{false};
    std::atomic<bool> cancelled_{false};
    std::atomic<unsigned long long> witnesses_taken_{0};
    std::vector<std::atomic<bool>> decided_;
    std::atomic<long long> undecided_;
    bool trace_on_ = false;
};

}  // namespace

Classification classify(const SEPoint& sep, long long target) {
    SumValue tv = target;
    if (sep.start <= tv && tv <= sep.end) {
        if (sep.start == tv) return Classification::SolutionAtStart;
        if (sep.end == tv) return Classification::SolutionAtEnd;
        return sep.dist_exp > 0 ? Classification::ZoomIn : Classification::FalsePositiveLeaf;
    }
    if (sep.first_of_pair && sep.start > tv) return Classification::StopLevel;
    return Classification::Skip;
}

const TargetResult& Outcome::result_for(long long target) const {
    for (const auto& r : per_target)
        if (r.target == target) return r;
    throw RangeError("unknown target " + std::to_string(target));
}

Outcome solve(const PreprocessedInstance& prep, const SearchConfig& config) {
    if (config.targets.empty()) throw RangeError("no targets configured");
    if (config.solution_limit && *config.solution_limit < 1)
        throw RangeError("solution limit must be at least 1");
    for (std::size_t i = 0; i < config.targets.size(); ++i)
        for (std::size_t j = i + 1; j < config.targets.size(); ++j)
            if (config.targets[i] == config.targets[j])
                throw RangeError("duplicate target " + std::to_string(config.targets[i]));
    if (prep.size() > kMaxIndexedElements)
        throw SizeError("instance exceeds 126 non-zero elements");

    Outcome outcome;
    outcome.per_target.reserve(config.targets.size());
    std::vector<long long> live;
    for (long long t : config.targets) {
        TargetResult result;
        result.target = t;
        TrivialVerdict verdict = detect_trivial(prep, t);
        result.shortcut = verdict.kind;
        if (verdict.kind == TrivialKind::NotTrivial)
            live.push_back(t);
        else if (verdict.kind == TrivialKind::PureZero ||
                 verdict.kind == TrivialKind::EmptySetOnly)
            result.pure_zero = true;
        outcome.per_target.push_back(result);
    }
    std::sort(live.begin(), live.end());

    if (!live.empty()) {
        Searcher searcher(prep, config, live);
        searcher.run();
        Accum& acc = searcher.accum();
        for (std::size_t i = 0; i < live.size(); ++i) {
            for (auto& result : outcome.per_target) {
                if (result.target != live[i]) continue;
                result.actual_count = acc.actual[i];
                result.trivial_count = acc.trivial[i];
                result.false_positives = acc.false_pos[i];
            }
        }
        outcome.witnesses = std::move(acc.witnesses);
        outcome.max_depth = acc.max_depth;
        outcome.nodes_visited = acc.nodes;
        outcome.limit_reached = searcher.limit_reached();
        outcome.interrupted = searcher.interrupted();
    }

    BigCount zero_factor = pow2(static_cast<unsigned>(prep.zero_count));
    for (auto& result : outcome.per_target) {
        BigCount raw = (result.actual_count + result.trivial_count +
                        (result.pure_zero ? 1 : 0)) *
                       zero_factor;
        // The literal empty subset is part of the raw count exactly when the
        // target is zero; drop it when the policy excludes it.
        if (!prep.allow_empty && result.target == 0 && raw > 0) raw -= 1;
        result.final_count = raw;
        result.satisfiable = result.final_count > 0;
        outcome.false_positive_count += result.false_positives;
    }
    return outcome;
}

Outcome solve_multi(const PreprocessedInstance& prep, const SearchConfig& config) {
    // A singleton target list reduces to the plain solve.
    return solve(prep, config);
}

}  // namespace senav
