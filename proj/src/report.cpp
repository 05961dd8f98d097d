#include "senav/report.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "json.hpp"

namespace senav {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, sep)) out.push_back(token);
    return out;
}

std::string trim(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    std::size_t last = text.find_last_not_of(" \t\r\n");
    return text.substr(first, last - first + 1);
}

Instance parse_json_instance(const std::string& text) {
    json doc = json::parse(text);
    Instance instance;
    if (!doc.contains("targets") || !doc["targets"].is_array())
        throw ParseError("JSON instance needs a 'targets' array", 1, 1);
    for (const auto& t : doc["targets"]) instance.targets.push_back(t.get<long long>());
    if (doc.contains("elements"))
        for (const auto& e : doc["elements"]) instance.elements.push_back(e.get<long long>());
    if (doc.contains("allow_empty")) instance.allow_empty = doc["allow_empty"].get<bool>();
    validate(instance);
    return instance;
}

// JSON value for a 128-bit count: plain number while it is JS-safe,
// otherwise a decimal string.
json count_json(BigCount v) {
    if (v <= BigCount{1} << 53) return static_cast<std::uint64_t>(v);
    return to_string(v);
}

const char* shortcut_name(TrivialKind kind) {
    switch (kind) {
        case TrivialKind::NotTrivial: return "none";
        case TrivialKind::PureZero: return "pure-zero";
        case TrivialKind::EvenOddUnsat: return "even-odd";
        case TrivialKind::OutOfBounds: return "out-of-bounds";
        case TrivialKind::EmptySetOnly: return "empty-set";
    }
    return "none";
}

std::string point_string(const SEPoint& sep) {
    return to_string(sep.preceding) + "(" + to_string(sep.start) + ", " +
           to_string(sep.end) + ")" + to_string(sep.distance());
}

}  // namespace

Instance parse_instance(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::string trimmed = trim(text);
    if (!trimmed.empty() && trimmed[0] == '{') return parse_json_instance(trimmed);

    auto lines = split(text, '\n');
    if (lines.empty() || trim(lines[0]).empty())
        throw ParseError("expected targets on line 1", 1, 1);
    Instance instance;
    int column = 1;
    for (const auto& token : split(lines[0], ',')) {
        std::string t = trim(token);
        if (t.empty()) throw ParseError("empty target entry", 1, column);
        instance.targets.push_back(parse_i64(t, 1, column));
        column += static_cast<int>(token.size()) + 1;
    }
    if (lines.size() > 1) {
        std::istringstream elems(lines[1]);
        std::string token;
        column = 1;
        while (elems >> token) {
            instance.elements.push_back(parse_i64(token, 2, column));
            column += static_cast<int>(token.size()) + 1;
        }
    }
    validate(instance);
    return instance;
}

Instance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0, 0);
    return parse_instance(in);
}

std::string render_witness_elements(const SolutionRecord& record) {
    if (record.is_empty) return "Empty Set Zero";
    std::string out;
    for (std::size_t i = 0; i < record.elements.size(); ++i) {
        if (i > 0) out += " + ";
        out += std::to_string(record.elements[i]);
    }
    return out;
}

std::string render_trace_event(const TraceEvent& event, const PreprocessedInstance& prep) {
    std::string line(event.depth + 1, '\t');
    switch (event.kind) {
        case TraceKind::Visit:
            line += point_string(event.sep);
            break;
        case TraceKind::ZoomIn:
            line += "zoom-in " + point_string(event.sep);
            break;
        case TraceKind::Solution: {
            SolutionRecord record = decode_index(event.solution_index, event.target, prep);
            line += "target " + std::to_string(event.target) + " found: " +
                    to_string(event.solution_index) + "(" + std::to_string(event.target) +
                    ")0 = " + render_witness_elements(record);
            break;
        }
        case TraceKind::FalsePositive:
            line += "false positive " + point_string(event.sep) + " for target " +
                    std::to_string(event.target);
            break;
        case TraceKind::SkipLevelRemainder:
            line += "level remainder skipped at " + point_string(event.sep);
            break;
        case TraceKind::RepetitionBegin:
            line += "repetition detected; trivial count deferred to run end";
            break;
        case TraceKind::RepetitionEnd:
            line += "repetition ended; trivial count updated";
            break;
    }
    return line;
}

std::string RunReport::formula_string(const TargetResult& result) const {
    BigCount adj = 0;
    if (!prep.allow_empty && result.target == 0) {
        BigCount raw = (result.actual_count + result.trivial_count +
                        (result.pure_zero ? 1 : 0)) *
                       pow2(static_cast<unsigned>(prep.zero_count));
        if (raw > 0) adj = 1;
    }
    return "(" + to_string(result.actual_count) + " + " + to_string(result.trivial_count) +
           " + " + std::string(result.pure_zero ? "1" : "0") + ") * 2^" +
           std::to_string(prep.zero_count) + " - " + to_string(adj);
}

std::string render_text_report(const RunReport& report) {
    std::ostringstream out;
    out << "elements (" << report.instance.elements.size() << "):";
    for (long long e : report.instance.elements) out << " " << e;
    out << "\nzeros count: " << report.prep.zero_count << "\n";
    for (std::size_t i = 0; i < report.outcome.per_target.size(); ++i) {
        const TargetResult& r = report.outcome.per_target[i];
        out << "target " << r.target << ": "
            << (r.satisfiable ? "satisfiable" : "unsatisfiable");
        if (r.shortcut != TrivialKind::NotTrivial)
            out << " [shortcut: " << shortcut_name(r.shortcut) << "]";
        out << "\n";
        out << "  trivially counted solutions: " << to_string(r.trivial_count) << "\n";
        out << "  actual count of solutions before processing: "
            << to_string(r.actual_count) << "\n";
        out << "  number of possible solutions found: " << to_string(r.final_count)
            << " = " << report.formula_string(r) << "\n";
        if (r.false_positives > 0)
            out << "  false positives: " << to_string(r.false_positives) << "\n";
        if (i < report.baselines.size() && !report.baselines[i].empty()) {
            out << "  baseline cross-check:\n";
            for (const auto& row : report.baselines[i])
                out << "    " << row.method << ": " << to_string(row.count) << " ("
                    << row.millis << " ms)" << (row.agrees ? "" : "  MISMATCH") << "\n";
        }
    }
    std::size_t shown = 0;
    for (const auto& w : report.outcome.witnesses) {
        if (shown++ >= report.witness_print_cap) {
            out << "  ... (" << report.outcome.witnesses.size() - report.witness_print_cap
                << " more witnesses)\n";
            break;
        }
        out << "  witness " << to_string(w.preceding_index) << "(" << w.target
            << ")0 = " << render_witness_elements(w) << "\n";
    }
    out << "nodes visited: " << to_string(report.outcome.nodes_visited)
        << ", max depth: " << report.outcome.max_depth << "\n";
    if (report.outcome.limit_reached) out << "stopped at solution limit\n";
    if (report.outcome.interrupted) out << "interrupted; counts are partial\n";
    out << "solve time: " << report.solve_millis << " ms\n";
    return out.str();
}

std::string render_json_report(const RunReport& report) {
    json doc;
    doc["schema"] = "se-nav/1";
    doc["instance"] = {{"targets", report.instance.targets},
                       {"elements", report.instance.elements},
                       {"allow_empty", report.instance.allow_empty}};
    doc["zeros"] = report.prep.zero_count;
    doc["results"] = json::array();
    for (std::size_t i = 0; i < report.outcome.per_target.size(); ++i) {
        const TargetResult& r = report.outcome.per_target[i];
        json row;
        row["target"] = r.target;
        row["satisfiable"] = r.satisfiable;
        row["shortcut"] = shortcut_name(r.shortcut);
        row["actual_count"] = count_json(r.actual_count);
        row["trivial_count"] = count_json(r.trivial_count);
        row["final_count"] = count_json(r.final_count);
        row["formula"] = report.formula_string(r);
        row["false_positives"] = count_json(r.false_positives);
        if (i < report.baselines.size() && !report.baselines[i].empty()) {
            row["baselines"] = json::array();
            for (const auto& b : report.baselines[i])
                row["baselines"].push_back({{"method", b.method},
                                            {"count", count_json(b.count)},
                                            {"millis", b.millis},
                                            {"agrees", b.agrees}});
        }
        doc["results"].push_back(row);
    }
    doc["witnesses"] = json::array();
    std::size_t cap = std::min<std::size_t>(report.outcome.witnesses.size(),
                                            report.witness_print_cap);
    for (std::size_t i = 0; i < cap; ++i) {
        const SolutionRecord& w = report.outcome.witnesses[i];
        doc["witnesses"].push_back({{"target", w.target},
                                    {"index", count_json(w.preceding_index)},
                                    {"bitmask", w.bitmask.to_string()},
                                    {"elements", w.elements},
                                    {"origin_positions", w.origin_positions},
                                    {"empty_set", w.is_empty}});
    }
    doc["witness_total"] = report.outcome.witnesses.size();
    doc["nodes_visited"] = count_json(report.outcome.nodes_visited);
    doc["max_depth"] = report.outcome.max_depth;
    doc["limit_reached"] = report.outcome.limit_reached;
    doc["interrupted"] = report.outcome.interrupted;
    doc["timing"] = {{"preprocess_ms", report.preprocess_millis},
                     {"solve_ms", report.solve_millis}};
    return doc.dump(2);
}

}  // namespace senav
