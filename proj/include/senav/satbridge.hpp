#pragma once

// CNF-SAT -> Subset Sum bridge.  Literals map to alternating-sign powers of
// two, clauses to the sum of their literal values (injectively, since every
// magnitude is a distinct power of two), and clause values decode back to
// literal sets by running the subset-sum navigator on the literal-mapping
// instance.  On top of the encoding sits the root-clause solving method:
// seed one partial assignment per non-cancelled root signature, propagate
// forced assignments to fixpoint, branch when stalled, and count surviving
// partials as 2^(free variables) each.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "senav/ints.hpp"

namespace senav::sat {

struct CnfFormula {
    int num_vars = 0;
    // Clauses hold signed 1-based variable references; negative = negation.
    std::vector<std::vector<int>> clauses;
};

// Checks clause sanity: no empty clause, variables in [1, num_vars], no
// clause with a literal and its negation.  Duplicate literals are collapsed.
void validate(CnfFormula& formula);

struct LiteralMap {
    int num_vars = 0;
    long long value(int var, bool positive) const;
    long long value(int literal) const;  // signed reference form
    // Inverse of value(); throws RangeError for values outside the mapping.
    int literal_for(long long value) const;
    std::vector<long long> all_values() const;  // +x1, -x1, +x2, ... order
};

LiteralMap map_literals(int num_vars);  // num_vars <= 31

std::vector<long long> clause_values(const CnfFormula& formula, const LiteralMap& map);

// Recovers the unique literal set summing to `value` by navigating the
// literal-mapping instance.  Throws NoSolutionError when unachievable or for
// the empty-clause value 0.
std::vector<int> decode_clause(long long value, const LiteralMap& map);

struct ClauseSignature {
    std::vector<int> vars;       // ascending
    std::vector<bool> polarity;  // polarity[i] <-> vars[i], true = positive
    bool present_in_formula = false;
    bool cancelled = false;  // complete opposite is present in the formula

    std::vector<int> literals() const;
};

struct RootAnalysis {
    std::vector<ClauseSignature> signatures;  // all 2^k, upper row then lower
    bool unsatisfiable = false;               // every signature is present
};

RootAnalysis root_signatures(const std::vector<int>& clause, const CnfFormula& formula);

enum class VarState : char { Unassigned, True, False };

struct PartialAssignment {
    std::vector<VarState> values;  // values[v-1] is variable v
    bool internal = false;         // seeded from a root signature in the formula

    std::size_t free_vars() const;
    std::string star_notation() const;  // "TTFF", "TTT*", ...
};

enum class PropagateStatus { Progress, Stalled, AllSatisfied, Conflict };

struct PropagateResult {
    PropagateStatus status = PropagateStatus::Stalled;
    PartialAssignment partial;
};

// Runs forced-assignment sweeps to fixpoint.  Progress: assignments were
// made but unsatisfied clauses remain.  Stalled: nothing forced, unsatisfied
// clauses remain.  Conflict: some clause has every literal false.
PropagateResult propagate(const CnfFormula& formula, PartialAssignment partial);

struct SatOutcome {
    bool satisfiable = false;
    std::vector<PartialAssignment> partial_solutions;
    BigCount total_count = 0;
    bool root_fully_cancelled = false;  // all 2^k signatures present
};

// Root-clause solving method.  `root_index` picks the root clause; the first
// clause is the deterministic default.
SatOutcome solve_sat(const CnfFormula& formula, std::size_t root_index = 0);

CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs_file(const std::string& path);

std::string render_report(const CnfFormula& formula, const SatOutcome& outcome);

}  // namespace senav::sat
