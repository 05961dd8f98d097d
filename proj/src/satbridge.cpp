#include "senav/satbridge.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "senav/navigator.hpp"

namespace senav::sat {

namespace {

constexpr int kMaxMappedVars = 31;   // paired powers must fit 63 bits
constexpr int kMaxRootVars = 20;     // 2^k signatures per root
constexpr int kExpansionVarLimit = 20;  // dedup by full expansion below this

std::string literal_name(int literal) {
    std::string name = literal < 0 ? "~x" : "x";
    return name + std::to_string(std::abs(literal));
}

}  // namespace

void validate(CnfFormula& formula) {
    if (formula.num_vars < 1) throw RangeError("formula needs at least one variable");
    for (auto& clause : formula.clauses) {
        if (clause.empty()) throw RangeError("empty clause");
        std::sort(clause.begin(), clause.end(),
                  [](int a, int b) { return std::abs(a) < std::abs(b); });
        clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
        for (std::size_t i = 0; i < clause.size(); ++i) {
            int lit = clause[i];
            if (lit == 0 || std::abs(lit) > formula.num_vars)
                throw RangeError("literal " + std::to_string(lit) + " out of range");
            if (i > 0 && clause[i - 1] == -lit)
                throw RangeError("clause contains " + literal_name(lit) +
                                 " and its negation");
        }
    }
}

long long LiteralMap::value(int var, bool positive) const {
    if (var < 1 || var > num_vars) throw RangeError("variable out of range");
    if (positive) return 1LL << (2 * (var - 1));
    return -(1LL << (2 * var - 1));
}

long long LiteralMap::value(int literal) const { return value(std::abs(literal), literal > 0); }

int LiteralMap::literal_for(long long v) const {
    if (v == 0) throw RangeError("0 is not a literal value");
    unsigned long long mag = static_cast<unsigned long long>(v < 0 ? -v : v);
    if (!std::has_single_bit(mag)) throw RangeError("literal values are powers of two");
    int exp = std::countr_zero(mag);
    if (v > 0) {
        if (exp % 2 != 0) throw RangeError("positive literal values use even exponents");
        int var = exp / 2 + 1;
        if (var > num_vars) throw RangeError("literal value out of range");
        return var;
    }
    if (exp % 2 != 1) throw RangeError("negative literal values use odd exponents");
    int var = (exp + 1) / 2;
    if (var > num_vars) throw RangeError("literal value out of range");
    return -var;
}

std::vector<long long> LiteralMap::all_values() const {
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(num_vars) * 2);
    for (int v = 1; v <= num_vars; ++v) {
        out.push_back(value(v, true));
        out.push_back(value(v, false));
    }
    return out;
}

LiteralMap map_literals(int num_vars) {
    if (num_vars < 1) throw RangeError("need at least one variable");
    if (num_vars > kMaxMappedVars)
        throw SizeError("literal mapping limited to 31 variables");
    return LiteralMap{num_vars};
}

std::vector<long long> clause_values(const CnfFormula& formula, const LiteralMap& map) {
    std::vector<long long> out;
    out.reserve(formula.clauses.size());
    for (const auto& clause : formula.clauses) {
        long long sum = 0;
        for (int lit : clause) sum += map.value(lit);
        out.push_back(sum);
    }
    return out;
}

std::vector<int> decode_clause(long long value, const LiteralMap& map) {
    if (value == 0) throw NoSolutionError("0 decodes to the empty clause");
    Instance instance;
    instance.elements = map.all_values();
    instance.targets = {value};
    instance.allow_empty = false;
    PreprocessedInstance prep = preprocess(instance);
    SearchConfig config;
    config.mode = SearchMode::Enumerate;
    config.targets = {value};
    config.solution_limit = 2;  // uniqueness is part of the encoding contract
    Outcome outcome = solve(prep, config);
    if (outcome.witnesses.empty())
        throw NoSolutionError("value " + std::to_string(value) + " is not achievable");
    if (outcome.witnesses.size() > 1)
        throw RangeError("clause value " + std::to_string(value) + " is ambiguous");
    std::vector<int> literals;
    for (long long e : outcome.witnesses.front().elements)
        literals.push_back(map.literal_for(e));
    std::sort(literals.begin(), literals.end(),
              [](int a, int b) { return std::abs(a) < std::abs(b); });
    return literals;
}

std::vector<int> ClauseSignature::literals() const {
    std::vector<int> out;
    out.reserve(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i)
        out.push_back(polarity[i] ? vars[i] : -vars[i]);
    return out;
}

RootAnalysis root_signatures(const std::vector<int>& clause, const CnfFormula& formula) {
    std::vector<int> vars;
    for (int lit : clause) vars.push_back(std::abs(lit));
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    const std::size_t k = vars.size();
    if (k == 0) throw RangeError("empty root clause");
    if (k > kMaxRootVars) throw SizeError("root clause limited to 20 variables");

    // Polarity masks (bit i <-> vars[i], set = positive) of formula clauses
    // sharing the root's variable set.
    std::set<std::uint32_t> present;
    for (const auto& other : formula.clauses) {
        if (other.size() != k) continue;
        std::uint32_t mask = 0;
        bool same_vars = true;
        for (int lit : other) {
            auto it = std::lower_bound(vars.begin(), vars.end(), std::abs(lit));
            if (it == vars.end() || *it != std::abs(lit)) {
                same_vars = false;
                break;
            }
            if (lit > 0) mask |= 1u << (it - vars.begin());
        }
        if (same_vars) present.insert(mask);
    }

    // Signature-table order: upper row fixes the first variable positive and
    // walks the remaining polarities from all-positive down; the lower row
    // holds the complete opposites in the same column order.
    std::vector<std::uint32_t> order;
    std::uint32_t all = k == 32 ? ~0u : (1u << k) - 1;
    for (std::uint32_t col = 0; col < (1u << (k - 1)); ++col) {
        std::uint32_t mask = 1u;  // vars[0] positive
        for (std::size_t i = 1; i < k; ++i)
            if (((col >> (k - 1 - i)) & 1) == 0) mask |= 1u << i;
        order.push_back(mask);
    }
    std::size_t upper = order.size();
    for (std::size_t col = 0; col < upper; ++col) order.push_back(order[col] ^ all);

    RootAnalysis analysis;
    analysis.unsatisfiable = true;
    for (std::uint32_t mask : order) {
        ClauseSignature sig;
        sig.vars = vars;
        sig.polarity.resize(k);
        for (std::size_t i = 0; i < k; ++i) sig.polarity[i] = (mask >> i) & 1;
        sig.present_in_formula = present.count(mask) > 0;
        sig.cancelled = present.count(mask ^ all) > 0;
        if (!sig.present_in_formula) analysis.unsatisfiable = false;
        analysis.signatures.push_back(std::move(sig));
    }
    return analysis;
}

std::size_t PartialAssignment::free_vars() const {
    std::size_t n = 0;
    for (VarState s : values) n += s == VarState::Unassigned;
    return n;
}

std::string PartialAssignment::star_notation() const {
    std::string out;
    out.reserve(values.size());
    for (VarState s : values)
        out.push_back(s == VarState::Unassigned ? '*' : (s == VarState::True ? 'T' : 'F'));
    return out;
}

PropagateResult propagate(const CnfFormula& formula, PartialAssignment partial) {
    bool forced_any = false;
    while (true) {
        bool changed = false;
        bool all_satisfied = true;
        for (const auto& clause : formula.clauses) {
            bool satisfied = false;
            int unassigned_lit = 0;
            int unassigned_count = 0;
            for (int lit : clause) {
                VarState s = partial.values[static_cast<std::size_t>(std::abs(lit)) - 1];
                if (s == VarState::Unassigned) {
                    ++unassigned_count;
                    unassigned_lit = lit;
                } else if ((s == VarState::True) == (lit > 0)) {
                    satisfied = true;
                    break;
                }
            }
            if (satisfied) continue;
            if (unassigned_count == 0)
                return {PropagateStatus::Conflict, std::move(partial)};
            all_satisfied = false;
            if (unassigned_count == 1) {
                partial.values[static_cast<std::size_t>(std::abs(unassigned_lit)) - 1] =
                    unassigned_lit > 0 ? VarState::True : VarState::False;
                changed = true;
                forced_any = true;
            }
        }
        if (all_satisfied) return {PropagateStatus::AllSatisfied, std::move(partial)};
        if (!changed)
            return {forced_any ? PropagateStatus::Progress : PropagateStatus::Stalled,
                    std::move(partial)};
    }
}

namespace {

void explore(const CnfFormula& formula, PartialAssignment partial,
             std::vector<PartialAssignment>& survivors) {
    while (true) {
        PropagateResult res = propagate(formula, std::move(partial));
        partial = std::move(res.partial);
        if (res.status == PropagateStatus::Conflict) return;
        if (res.status == PropagateStatus::AllSatisfied) {
            survivors.push_back(std::move(partial));
            return;
        }
        if (res.status == PropagateStatus::Progress) continue;
        // Stalled: branch on the lowest-index unassigned variable, false first.
        std::size_t v = 0;
        while (v < partial.values.size() && partial.values[v] != VarState::Unassigned) ++v;
        if (v == partial.values.size()) return;  // fully assigned yet stalled: impossible
        PartialAssignment low = partial;
        low.values[v] = VarState::False;
        explore(formula, std::move(low), survivors);
        partial.values[v] = VarState::True;
    }
}

}  // namespace

SatOutcome solve_sat(const CnfFormula& formula, std::size_t root_index) {
    SatOutcome outcome;
    if (formula.clauses.empty()) {
        // Vacuously satisfied: every assignment works.
        outcome.satisfiable = true;
        PartialAssignment all_free;
        all_free.values.assign(static_cast<std::size_t>(formula.num_vars),
                               VarState::Unassigned);
        outcome.partial_solutions.push_back(all_free);
        outcome.total_count = pow2(static_cast<unsigned>(formula.num_vars));
        return outcome;
    }
    if (root_index >= formula.clauses.size()) throw RangeError("root clause out of range");

    RootAnalysis analysis = root_signatures(formula.clauses[root_index], formula);
    if (analysis.unsatisfiable) {
        outcome.root_fully_cancelled = true;
        return outcome;
    }

    std::vector<PartialAssignment> survivors;
    for (const auto& sig : analysis.signatures) {
        if (sig.cancelled) continue;
        PartialAssignment seed;
        seed.values.assign(static_cast<std::size_t>(formula.num_vars), VarState::Unassigned);
        seed.internal = sig.present_in_formula;
        for (std::size_t i = 0; i < sig.vars.size(); ++i)
            seed.values[static_cast<std::size_t>(sig.vars[i]) - 1] =
                sig.polarity[i] ? VarState::True : VarState::False;
        std::vector<PartialAssignment> local;
        explore(formula, std::move(seed), local);
        for (auto& p : local) {
            p.internal = sig.present_in_formula;
            survivors.push_back(std::move(p));
        }
    }

    outcome.partial_solutions = std::move(survivors);
    if (formula.num_vars <= kExpansionVarLimit) {
        // Canonical dedup by full expansion.
        std::set<std::uint32_t> assignments;
        for (const auto& p : outcome.partial_solutions) {
            std::vector<std::size_t> free;
            std::uint32_t base = 0;
            for (std::size_t v = 0; v < p.values.size(); ++v) {
                if (p.values[v] == VarState::True) base |= 1u << v;
                if (p.values[v] == VarState::Unassigned) free.push_back(v);
            }
            for (std::uint32_t fill = 0; fill < (1u << free.size()); ++fill) {
                std::uint32_t full = base;
                for (std::size_t b = 0; b < free.size(); ++b)
                    if ((fill >> b) & 1) full |= 1u << free[b];
                assignments.insert(full);
            }
        }
        outcome.total_count = assignments.size();
    } else {
        // Partials from distinct seeds differ on a root variable and branches
        // differ on the branched variable, so expansions are disjoint; verify.
        for (std::size_t a = 0; a < outcome.partial_solutions.size(); ++a)
            for (std::size_t b = a + 1; b < outcome.partial_solutions.size(); ++b) {
                const auto& pa = outcome.partial_solutions[a].values;
                const auto& pb = outcome.partial_solutions[b].values;
                bool disjoint = false;
                for (std::size_t v = 0; v < pa.size(); ++v)
                    if (pa[v] != VarState::Unassigned && pb[v] != VarState::Unassigned &&
                        pa[v] != pb[v]) {
                        disjoint = true;
                        break;
                    }
                if (!disjoint)
                    throw RangeError("overlapping partial assignments detected");
            }
        for (const auto& p : outcome.partial_solutions)
            outcome.total_count += pow2(static_cast<unsigned>(p.free_vars()));
    }
    outcome.satisfiable = outcome.total_count > 0;
    return outcome;
}

CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula formula;
    bool header_seen = false;
    int declared_clauses = 0;
    std::vector<int> current;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
        std::istringstream tokens(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            if (!(tokens >> p >> fmt >> formula.num_vars >> declared_clauses) || fmt != "cnf")
                throw ParseError("malformed DIMACS header", line_no, 1);
            header_seen = true;
            continue;
        }
        int lit;
        while (tokens >> lit) {
            if (lit == 0) {
                if (!current.empty()) formula.clauses.push_back(current);
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
        if (!tokens.eof())
            throw ParseError("invalid token in clause", line_no, 1);
    }
    if (!current.empty()) formula.clauses.push_back(current);
    if (!header_seen) throw ParseError("missing 'p cnf' header", line_no, 1);
    validate(formula);
    return formula;
}

CnfFormula parse_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0, 0);
    return parse_dimacs(in);
}

std::string render_report(const CnfFormula& formula, const SatOutcome& outcome) {
    std::ostringstream out;
    LiteralMap map = map_literals(formula.num_vars);
    out << "variables: " << formula.num_vars << ", clauses: " << formula.clauses.size()
        << "\n";
    out << "literal values:";
    for (int v = 1; v <= formula.num_vars; ++v)
        out << " " << literal_name(v) << "=" << map.value(v, true) << " "
            << literal_name(-v) << "=" << map.value(v, false);
    out << "\nclause values:";
    for (long long cv : clause_values(formula, map)) out << " " << cv;
    out << "\n";
    if (outcome.root_fully_cancelled)
        out << "every root signature is present with its opposite: unsatisfiable\n";
    if (!outcome.satisfiable) {
        out << "UNSAT\n";
        return out.str();
    }
    out << "partial solutions:\n";
    for (const auto& p : outcome.partial_solutions)
        out << "  " << (p.internal ? "i " : "e ") << p.star_notation() << "  ("
            << to_string(pow2(static_cast<unsigned>(p.free_vars())))
            << " assignments)\n";
    out << "satisfying assignments: " << to_string(outcome.total_count) << "\n";
    return out.str();
}

}  // namespace senav::sat
