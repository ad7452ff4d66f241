#include "pursuit/algorithms.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/graph6.hpp"
#include "pursuit/harness.hpp"
#include "pursuit/patterns.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>
#include <variant>

namespace pursuit {

namespace {

struct Outcome {
    std::optional<GraphRecord> record; // empty when the graph is outside the class
    std::optional<InputError> error;
};

bool in_class(const GraphRecord& r, const SweepOptions& o) {
    switch (o.mode) {
    case SweepMode::Conj1TwoK2: return r.two_k2_free;
    case SweepMode::Conj2P5: return r.p5_free;
    case SweepMode::Diam2Report: return r.two_k2_free && r.diameter == 2;
    case SweepMode::Mk2: return r.mk2_free_level <= o.m;
    }
    return false;
}

Outcome examine(std::size_t line, const std::string& text, const SweepOptions& o) {
    Outcome out;
    Graph g;
    try {
        g = parse_graph6(text);
    } catch (const ParseError& e) {
        out.error = InputError{line, e.what()};
        return out;
    }
    if (!is_connected(g)) {
        out.error = InputError{line, "graph is disconnected"};
        return out;
    }

    GraphRecord r;
    r.line = line;
    r.graph6 = text;
    r.n = g.n();
    r.two_k2_free = !has_induced_mk2(g, 2);
    r.p5_free = !has_induced_path(g, 5);
    r.diameter = diameter(g);
    r.c3_free = !has_induced_cycle(g, 3);
    r.c4_free = !has_induced_cycle(g, 4);
    r.c5_free = !has_induced_cycle(g, 5);
    r.mk2_free_level = mk2_free_level(g);
    if (!in_class(r, o))
        return out;

    const bool mk2 = o.mode == SweepMode::Mk2;
    r.cop_bound = mk2 ? 2 * o.m - 1 : 2;
    const int k_max = mk2 ? 2 * o.m - 1 : 3;
    try {
        r.cop_number = cop_number(g, k_max, o.solve);
    } catch (const BoundExceededError&) {
        r.note = "cop number exceeds " + std::to_string(k_max);
    } catch (const ResourceError& e) {
        r.note = e.what();
    }
    r.bound_satisfied = r.cop_number && *r.cop_number <= r.cop_bound;

    if (!mk2 && r.two_k2_free) {
        try {
            const auto s = select_strategy(g, o.solve);
            r.provenance = std::string(to_string(s.provenance));
            r.strategy_cops = s.k;
            r.phase_bound = s.phase_bound;
            const auto verdict = verify_exhaustive(g, s, o.phase_cap);
            if (const auto* trace = std::get_if<StrategyTrace>(&verdict)) {
                r.capture_phases = trace->cop_phases;
                r.strategy_captured = trace->cop_phases <= s.phase_bound;
                if (!r.strategy_captured)
                    r.note = "capture took longer than the strategy's phase bound";
            } else {
                r.strategy_captured = false;
                r.note = "strategy escape: " + std::get<EscapeWitness>(verdict).reason;
            }
            if (r.strategy_captured && r.cop_number && *r.cop_number > s.k) {
                r.strategy_captured = false;
                r.note = "strategy captured with fewer cops than the cop number";
            }
        } catch (const Error& e) {
            r.strategy_captured = false;
            r.note = std::string("strategy failed: ") + e.what();
        }
        r.bound_satisfied = r.bound_satisfied && r.strategy_captured;
    }
    out.record = std::move(r);
    return out;
}

} // namespace

std::string_view to_string(SweepMode mode) {
    switch (mode) {
    case SweepMode::Conj1TwoK2: return "conj1";
    case SweepMode::Conj2P5: return "conj2";
    case SweepMode::Diam2Report: return "diam2";
    case SweepMode::Mk2: return "mk2";
    }
    return "unknown";
}

SweepReport sweep(const std::vector<std::string>& graph6_lines, const SweepOptions& options) {
    if (options.mode == SweepMode::Mk2 && options.m < 2)
        throw ArgumentError("mK2 sweeps need m >= 2");
    std::vector<Outcome> outcomes(graph6_lines.size());
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < graph6_lines.size(); ++i)
            outcomes[i] = examine(i + 1, graph6_lines[i], options);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < graph6_lines.size(); i = next++)
                    outcomes[i] = examine(i + 1, graph6_lines[i], options);
            });
        for (auto& t : workers)
            t.join();
    }

    SweepReport report;
    report.mode = options.mode;
    report.m = options.m;
    report.graphs_read = graph6_lines.size();
    for (auto& o : outcomes) {
        if (o.error)
            report.input_errors.push_back(std::move(*o.error));
        if (o.record)
            report.records.push_back(std::move(*o.record));
    }
    return report;
}

SweepReport sweep_conjecture(const std::vector<std::string>& graph6_lines, SweepMode mode, const SweepOptions& options) {
    if (mode == SweepMode::Mk2)
        throw ArgumentError("use sweep_mk2 for mK2 sweeps");
    auto o = options;
    o.mode = mode;
    return sweep(graph6_lines, o);
}

SweepReport sweep_mk2(const std::vector<std::string>& graph6_lines, int m, const SweepOptions& options) {
    auto o = options;
    o.mode = SweepMode::Mk2;
    o.m = m;
    return sweep(graph6_lines, o);
}

std::vector<const GraphRecord*> SweepReport::violations() const {
    std::vector<const GraphRecord*> out;
    for (const auto& r : records)
        if (!r.bound_satisfied)
            out.push_back(&r);
    return out;
}

int SweepReport::max_cop_number() const {
    int best = 0;
    for (const auto& r : records)
        best = std::max(best, r.cop_number.value_or(0));
    return best;
}

int SweepReport::max_capture_phases() const {
    int best = 0;
    for (const auto& r : records)
        best = std::max(best, r.capture_phases.value_or(0));
    return best;
}

nlohmann::ordered_json to_json(const GraphRecord& r) {
    nlohmann::ordered_json j;
    j["line"] = r.line;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["classes"] = {{"two_k2_free", r.two_k2_free}, {"p5_free", r.p5_free},     {"diameter", r.diameter},
                    {"c3_free", r.c3_free},         {"c4_free", r.c4_free},     {"c5_free", r.c5_free},
                    {"mk2_free_level", r.mk2_free_level}};
    j["cop_number"] = r.cop_number ? nlohmann::ordered_json(*r.cop_number) : nlohmann::ordered_json();
    j["cop_bound"] = r.cop_bound;
    j["provenance"] = r.provenance ? nlohmann::ordered_json(*r.provenance) : nlohmann::ordered_json();
    j["strategy_cops"] = r.strategy_cops ? nlohmann::ordered_json(*r.strategy_cops) : nlohmann::ordered_json();
    j["capture_phases"] = r.capture_phases ? nlohmann::ordered_json(*r.capture_phases) : nlohmann::ordered_json();
    j["phase_bound"] = r.phase_bound ? nlohmann::ordered_json(*r.phase_bound) : nlohmann::ordered_json();
    j["bound_satisfied"] = r.bound_satisfied;
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

nlohmann::ordered_json summary_json(const SweepReport& report) {
    nlohmann::ordered_json j;
    j["mode"] = to_string(report.mode);
    if (report.mode == SweepMode::Mk2)
        j["m"] = report.m;
    j["graphs_read"] = report.graphs_read;
    j["in_class"] = report.records.size();

    std::map<std::string, int> counts{{"two_k2_free", 0}, {"c3_free", 0}, {"c4_free", 0}, {"c5_free", 0}};
    std::map<int, int> by_diameter, by_order, cop_hist;
    std::map<std::string, int> provenance;
    for (const auto& r : report.records) {
        counts["two_k2_free"] += r.two_k2_free;
        counts["c3_free"] += r.c3_free;
        counts["c4_free"] += r.c4_free;
        counts["c5_free"] += r.c5_free;
        ++by_diameter[r.diameter];
        ++by_order[r.n];
        if (r.cop_number)
            ++cop_hist[*r.cop_number];
        if (r.provenance)
            ++provenance[*r.provenance];
    }
    auto keyed = [](const std::map<int, int>& m) {
        nlohmann::ordered_json out = nlohmann::ordered_json::object();
        for (auto [k, v] : m)
            out[std::to_string(k)] = v;
        return out;
    };
    j["class_counts"] = counts;
    j["by_order"] = keyed(by_order);
    j["by_diameter"] = keyed(by_diameter);
    j["cop_number_histogram"] = keyed(cop_hist);
    j["max_cop_number"] = report.max_cop_number();
    j["cop_number_unresolved"] = std::count_if(report.records.begin(), report.records.end(),
                                               [](const GraphRecord& r) { return !r.cop_number; });
    j["provenance_counts"] = provenance;
    j["max_capture_phases"] = report.max_capture_phases();

    nlohmann::ordered_json violations = nlohmann::ordered_json::array();
    for (const auto* r : report.violations()) {
        nlohmann::ordered_json v;
        v["line"] = r->line;
        v["graph6"] = r->graph6;
        v["cop_number"] = r->cop_number ? nlohmann::ordered_json(*r->cop_number) : nlohmann::ordered_json();
        v["reason"] = r->note.empty() ? "cop number above " + std::to_string(r->cop_bound) : r->note;
        violations.push_back(std::move(v));
    }
    j["violations"] = std::move(violations);

    nlohmann::ordered_json errors = nlohmann::ordered_json::array();
    for (const auto& e : report.input_errors)
        errors.push_back({{"line", e.line}, {"message", e.message}});
    j["input_errors"] = std::move(errors);
    return j;
}

} // namespace pursuit
