#pragma once

// Front-end plumbing shared by the CLI and its tests: instance parsing (line
// format or JSON), trace rendering in the reference indentation style, the
// run report (text and JSON, schema "se-nav/1"), and optional baseline
// cross-check rows.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "senav/core.hpp"
#include "senav/navigator.hpp"
#include "senav/oracle.hpp"

namespace senav {

// Line format: targets (comma-separated) on line 1, elements (space
// separated, possibly empty) on line 2.  A leading '{' switches to JSON:
// {"targets": [...], "elements": [...], "allow_empty": bool}.
Instance parse_instance(std::istream& in);
Instance parse_instance_file(const std::string& path);

// One line per event, tab-indented by depth, points rendered as "N(S, E)D".
std::string render_trace_event(const TraceEvent& event, const PreprocessedInstance& prep);

struct BaselineRow {
    std::string method;
    BigCount count = 0;
    double millis = 0.0;
    bool agrees = true;
};

struct RunReport {
    Instance instance;
    PreprocessedInstance prep;
    Outcome outcome;
    double solve_millis = 0.0;
    double preprocess_millis = 0.0;
    std::vector<std::vector<BaselineRow>> baselines;  // per target, optional
    std::size_t witness_print_cap = 32;

    // "(actual + trivial + p) * 2^zeros - adj"; arithmetic matches final_count.
    std::string formula_string(const TargetResult& result) const;
};

std::string render_text_report(const RunReport& report);
std::string render_json_report(const RunReport& report);  // schema se-nav/1

// Renders one witness like "2 + 3 + 4 + 7 + 8" (or the empty-set marker).
std::string render_witness_elements(const SolutionRecord& record);

}  // namespace senav
