// Subset-sum navigator command line front end.
//
//   senav [instance-file|-] [--mode decide|count|enumerate] [--limit N]
//         [--trace] [--parallel] [--oracle off|brute|dp|mitm|all] [--json]
//   senav --sat formula.cnf
//
// Exit codes: 0 satisfiable/completed, 1 unsatisfiable, 2 error,
// 3 oracle mismatch.

#include <atomic>
#include <chrono>
#include <csignal>
#include <iostream>

#include "CLI11.hpp"
#include "senav/navigator.hpp"
#include "senav/oracle.hpp"
#include "senav/report.hpp"
#include "senav/satbridge.hpp"

namespace {

std::atomic<bool> g_cancel{false};

void handle_sigint(int) { g_cancel.store(true); }

double elapsed_ms(std::chrono::steady_clock::time_point from) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - from)
        .count();
}

std::vector<senav::BaselineRow> run_baselines(const senav::Instance& instance,
                                              long long target, const std::string& which,
                                              senav::BigCount navigator_count) {
    using senav::oracle::BaselineMethod;
    std::vector<std::pair<std::string, BaselineMethod>> methods;
    if (which == "brute" || which == "all")
        methods.emplace_back("brute-force", BaselineMethod::BruteForce);
    if (which == "dp" || which == "all") methods.emplace_back("dp", BaselineMethod::DP);
    if (which == "mitm" || which == "all")
        methods.emplace_back("meet-in-the-middle", BaselineMethod::MeetInMiddle);
    if (which == "all")
        methods.emplace_back("backtracking", BaselineMethod::Backtracking);
    std::vector<senav::BaselineRow> rows;
    for (const auto& [name, method] : methods) {
        senav::BaselineRow row;
        row.method = name;
        auto begin = std::chrono::steady_clock::now();
        try {
            row.count = senav::oracle::baseline_count(instance.elements, target, method,
                                                      instance.allow_empty);
            row.agrees = row.count == navigator_count;
        } catch (const senav::SizeError&) {
            row.method += " (skipped: size guard)";
            row.count = navigator_count;
        }
        row.millis = elapsed_ms(begin);
        rows.push_back(row);
    }
    return rows;
}

int run_sat(const std::string& path) {
    senav::sat::CnfFormula formula = senav::sat::parse_dimacs_file(path);
    senav::sat::SatOutcome outcome = senav::sat::solve_sat(formula);
    std::cout << senav::sat::render_report(formula, outcome);
    return outcome.satisfiable ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"S/E point subset sum navigator"};
    std::string input_path = "-";
    std::string mode = "count";
    std::string oracle = "off";
    std::string sat_path;
    unsigned long long limit = 0;
    bool trace = false, parallel = false, json_output = false;

    app.add_option("instance", input_path, "instance file path, or - for stdin");
    app.add_option("--mode", mode, "decide | count | enumerate")
        ->check(CLI::IsMember({"decide", "count", "enumerate"}));
    app.add_option("--limit", limit, "stop enumerate mode after N witnesses");
    app.add_flag("--trace", trace, "print the traversal, one tab per depth level");
    app.add_flag("--parallel", parallel, "explore zoom frames on a worker pool");
    app.add_option("--oracle", oracle, "cross-check counts: off | brute | dp | mitm | all")
        ->check(CLI::IsMember({"off", "brute", "dp", "mitm", "all"}));
    app.add_flag("--json", json_output, "emit the se-nav/1 JSON report");
    app.add_option("--sat", sat_path, "solve a DIMACS CNF file via the SAT bridge");
    CLI11_PARSE(app, argc, argv);

    std::signal(SIGINT, handle_sigint);
    try {
        if (!sat_path.empty()) return run_sat(sat_path);

        senav::RunReport report;
        report.instance = input_path == "-" ? senav::parse_instance(std::cin)
                                            : senav::parse_instance_file(input_path);
        auto t0 = std::chrono::steady_clock::now();
        report.prep = senav::preprocess(report.instance);
        report.preprocess_millis = elapsed_ms(t0);

        senav::SearchConfig config;
        config.targets = report.instance.targets;
        config.mode = mode == "decide"  ? senav::SearchMode::Decision
                      : mode == "count" ? senav::SearchMode::Count
                                        : senav::SearchMode::Enumerate;
        if (limit > 0) config.solution_limit = limit;
        config.parallel = parallel;
        config.cancel = &g_cancel;
        config.trace = trace;
        if (trace) {
            config.sink = [&](const senav::TraceEvent& event) {
                std::cout << senav::render_trace_event(event, report.prep) << "\n";
                if (event.kind == senav::TraceKind::Solution) std::cout.flush();
            };
        }
        bool streaming = config.mode == senav::SearchMode::Enumerate && !json_output &&
                         !parallel;
        if (streaming) {
            // Catch it if you can: witnesses print the moment they are found.
            config.on_witness = [](const senav::SolutionRecord& w) {
                std::cout << "witness " << senav::to_string(w.preceding_index) << "("
                          << w.target << ")0 = " << senav::render_witness_elements(w)
                          << std::endl;
            };
            report.witness_print_cap = 0;
        }

        auto t1 = std::chrono::steady_clock::now();
        report.outcome = senav::solve(report.prep, config);
        report.solve_millis = elapsed_ms(t1);

        bool mismatch = false;
        if (oracle != "off") {
            for (const auto& r : report.outcome.per_target) {
                auto rows = run_baselines(report.instance, r.target, oracle, r.final_count);
                for (const auto& row : rows) mismatch = mismatch || !row.agrees;
                report.baselines.push_back(std::move(rows));
            }
        }

        std::cout << (json_output ? senav::render_json_report(report)
                                  : senav::render_text_report(report))
                  << std::endl;
        if (mismatch) return 3;
        bool any_sat = false;
        for (const auto& r : report.outcome.per_target) any_sat = any_sat || r.satisfiable;
        return any_sat ? 0 : 1;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
}
