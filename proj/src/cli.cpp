#include "pursuit/cli.hpp"

#include "pursuit/algorithms.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/graph6.hpp"
#include "pursuit/harness.hpp"
#include "pursuit/patterns.hpp"
#include "pursuit/strategies.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace pursuit::cli {

namespace {

struct CliConfig {
    std::string input;
    int n_min = 1;
    int n_max = 0;
    int k_max = 3;
    int m = 2;
    std::string mode = "conj1";
    std::optional<std::uint64_t> seed;
    int count = 1;
    bool random = false;
    int phase_cap = 0;
    int jobs = 1;
    bool pretty = false;
    std::string output;
};

struct IoFailure {
    std::string message;
};

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        constexpr std::string_view header = ">>graph6<<";
        if (line.starts_with(header))
            line.erase(0, header.size());
        lines.push_back(std::move(line));
    }
    return lines;
}

std::vector<std::string> load_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-")
        return read_lines(in);
    std::ifstream file(path);
    if (!file)
        throw IoFailure{"cannot open input file " + path};
    return read_lines(file);
}

// Either the --output file or the caller's stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty() && path != "-") {
            file_.open(path);
            if (!file_)
                throw IoFailure{"cannot open output file " + path};
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }
    void finish() {
        stream_->flush();
        if (!*stream_)
            throw IoFailure{"write failed"};
    }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

std::optional<Graph> parse_line(const std::string& text, std::size_t line, std::ostream& err) {
    try {
        return parse_graph6(text);
    } catch (const ParseError& e) {
        err << "line " << line << ": " << e.what() << '\n';
        return std::nullopt;
    }
}

int cmd_check(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto lines = load_input(cfg.input, in);
    Sink sink(cfg.output, out);
    bool bad_input = false;
    if (cfg.pretty)
        sink.get() << std::left << std::setw(20) << "graph6" << std::setw(4) << "n" << std::setw(6) << "conn"
                   << std::setw(6) << "2K2f" << std::setw(5) << "C3f" << std::setw(5) << "C4f" << std::setw(5)
                   << "C5f" << std::setw(5) << "P5f" << std::setw(6) << "diam"
                   << "mK2-free from m=" << '\n';
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto g = parse_line(lines[i], i + 1, err);
        if (!g) {
            bad_input = true;
            continue;
        }
        const bool connected = is_connected(*g);
        nlohmann::ordered_json j;
        j["graph6"] = lines[i];
        j["n"] = g->n();
        j["connected"] = connected;
        j["two_k2_free"] = !has_induced_mk2(*g, 2);
        j["c3_free"] = !has_induced_cycle(*g, 3);
        j["c4_free"] = !has_induced_cycle(*g, 4);
        j["c5_free"] = !has_induced_cycle(*g, 5);
        j["p5_free"] = !has_induced_path(*g, 5);
        j["diameter"] = connected ? nlohmann::ordered_json(diameter(*g)) : nlohmann::ordered_json();
        j["mk2_free_level"] = mk2_free_level(*g);
        j["mk2_free"] = !has_induced_mk2(*g, cfg.m);
        if (cfg.pretty) {
            auto yn = [](const nlohmann::ordered_json& v) { return v.get<bool>() ? "yes" : "no"; };
            sink.get() << std::left << std::setw(20) << lines[i] << std::setw(4) << g->n() << std::setw(6)
                       << yn(j["connected"]) << std::setw(6) << yn(j["two_k2_free"]) << std::setw(5)
                       << yn(j["c3_free"]) << std::setw(5) << yn(j["c4_free"]) << std::setw(5) << yn(j["c5_free"])
                       << std::setw(5) << yn(j["p5_free"]) << std::setw(6) << j["diameter"].dump()
                       << j["mk2_free_level"].get<int>() << '\n';
        } else {
            sink.get() << j.dump() << '\n';
        }
    }
    sink.finish();
    return bad_input ? kIo : kOk;
}

int cmd_cop_number(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto lines = load_input(cfg.input, in);
    Sink sink(cfg.output, out);
    int status = kOk;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto g = parse_line(lines[i], i + 1, err);
        if (!g) {
            status = kIo;
            continue;
        }
        try {
            const int c = cop_number(*g, cfg.k_max);
            if (cfg.pretty)
                sink.get() << lines[i] << "  c(G) = " << c << '\n';
            else
                sink.get() << c << '\n';
        } catch (const Error& e) {
            err << "line " << i + 1 << ": " << e.what() << '\n';
            if (status == kOk)
                status = kFailure;
        }
    }
    sink.finish();
    return status;
}

nlohmann::ordered_json verdict_json(const Verdict& v) {
    nlohmann::ordered_json j;
    if (const auto* t = std::get_if<StrategyTrace>(&v)) {
        j["captured"] = t->captured;
        j["cop_phases"] = t->cop_phases;
    } else {
        const auto& w = std::get<EscapeWitness>(v);
        j["captured"] = false;
        j["escape"] = w.reason;
        j["cycle_start"] = w.cycle_start ? nlohmann::ordered_json(*w.cycle_start) : nlohmann::ordered_json();
    }
    return j;
}

int cmd_verify(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto lines = load_input(cfg.input, in);
    Sink sink(cfg.output, out);
    int status = kOk;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto g = parse_line(lines[i], i + 1, err);
        if (!g) {
            status = kIo;
            continue;
        }
        try {
            const auto s = select_strategy(*g);
            const auto played = verify_adversarial(*g, s, cfg.phase_cap);
            const auto worst = verify_exhaustive(*g, s, cfg.phase_cap);
            const bool ok = std::holds_alternative<StrategyTrace>(played) && std::holds_alternative<StrategyTrace>(worst);

            nlohmann::ordered_json head;
            head["graph6"] = lines[i];
            head["provenance"] = to_string(s.provenance);
            head["cops"] = s.k;
            head["placement"] = s.placement;
            head["phase_bound"] = s.phase_bound;
            head["optimal_robber"] = verdict_json(played);
            head["all_robbers"] = verdict_json(worst);
            const auto& rounds = std::visit([](const auto& v) -> const std::vector<Snapshot>& { return v.rounds; }, played);
            if (cfg.pretty) {
                sink.get() << lines[i] << ": " << to_string(s.provenance) << " with " << s.k << " cops, "
                           << (ok ? "captured" : "ESCAPED") << '\n';
                for (const auto& snap : rounds) {
                    sink.get() << "  phase " << snap.phase << "  cops";
                    for (auto c : snap.cops)
                        sink.get() << ' ' << c;
                    sink.get() << "  robber " << snap.robber << "  [" << snap.branch << "]\n";
                }
            } else {
                sink.get() << head.dump() << '\n' << trace_to_json_lines(rounds);
            }
            if (!ok)
                status = kViolations;
        } catch (const Error& e) {
            err << "line " << i + 1 << ": " << e.what() << '\n';
            if (status == kOk)
                status = kFailure;
        }
    }
    sink.finish();
    return status;
}

int cmd_sweep(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& /*err*/) {
    static const std::map<std::string, SweepMode> modes{{"conj1", SweepMode::Conj1TwoK2},
                                                        {"conj2", SweepMode::Conj2P5},
                                                        {"diam2", SweepMode::Diam2Report},
                                                        {"mk2", SweepMode::Mk2}};
    std::vector<std::string> lines;
    if (!cfg.input.empty())
        lines = load_input(cfg.input, in);
    else
        lines = enumerated_graph6(cfg.n_min, cfg.n_max);

    SweepOptions options;
    options.mode = modes.at(cfg.mode);
    options.m = cfg.m;
    options.phase_cap = cfg.phase_cap;
    options.jobs = cfg.jobs;
    const auto report = sweep(lines, options);
    const auto summary = summary_json(report);

    Sink sink(cfg.output, out);
    if (cfg.pretty) {
        sink.get() << std::left << std::setw(20) << "graph6" << std::setw(4) << "n" << std::setw(6) << "diam"
                   << std::setw(5) << "c(G)" << std::setw(16) << "strategy" << std::setw(8) << "phases" << "ok\n";
        for (const auto& r : report.records)
            sink.get() << std::left << std::setw(20) << r.graph6 << std::setw(4) << r.n << std::setw(6) << r.diameter
                       << std::setw(5) << (r.cop_number ? std::to_string(*r.cop_number) : "?") << std::setw(16)
                       << r.provenance.value_or("-") << std::setw(8)
                       << (r.capture_phases ? std::to_string(*r.capture_phases) : "-")
                       << (r.bound_satisfied ? "yes" : "NO") << '\n';
        sink.get() << summary.dump(2) << '\n';
    } else {
        for (const auto& r : report.records)
            sink.get() << to_json(r).dump() << '\n';
        sink.get() << nlohmann::ordered_json{{"summary", summary}}.dump() << '\n';
    }
    sink.finish();
    if (!report.violations().empty())
        return kViolations;
    return report.input_errors.empty() ? kOk : kIo;
}

int cmd_gen(const CliConfig& cfg, std::ostream& out) {
    Sink sink(cfg.output, out);
    if (cfg.random) {
        for (int i = 0; i < cfg.count; ++i)
            sink.get() << write_graph6(random_2k2free(cfg.n_max, *cfg.seed + static_cast<std::uint64_t>(i))) << '\n';
    } else {
        for (const auto& line : enumerated_graph6(cfg.n_min, cfg.n_max))
            sink.get() << line << '\n';
    }
    sink.finish();
    return kOk;
}

} // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Exact cops-and-robbers analysis of 2K2-free graphs", "pursuit"};
    app.require_subcommand(1, 1);
    app.allow_extras(false);

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.input, "graph6 file, one graph per line ('-' for stdin)");
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", cfg.output, "write results to this file instead of stdout");
        sub->add_flag("--pretty", cfg.pretty, "human-readable table instead of JSON lines");
    };

    auto* check = app.add_subcommand("check", "class membership flags for each input graph");
    add_input(check);
    check->add_option("--m", cfg.m, "also report mK2-freeness for this m")->check(CLI::Range(1, 64));
    add_output(check);

    auto* copnum = app.add_subcommand("cop-number", "exact cop number of each input graph");
    add_input(copnum);
    copnum->add_option("--k-max", cfg.k_max, "largest cop count to try")->check(CLI::Range(1, 8));
    add_output(copnum);

    auto* verify = app.add_subcommand("verify", "select a strategy and verify it against the optimal robber");
    add_input(verify);
    verify->add_option("--phase-cap", cfg.phase_cap, "give up after this many cop phases (0: n^2)")->check(CLI::NonNegativeNumber);
    add_output(verify);

    auto* sw = app.add_subcommand("sweep", "class sweep over a graph stream or the built-in enumeration");
    add_input(sw);
    sw->add_option("--n-min", cfg.n_min, "smallest order when enumerating")->check(CLI::Range(1, kMaxEnumerationOrder));
    sw->add_option("--n-max", cfg.n_max, "largest order when enumerating")->check(CLI::Range(1, kMaxEnumerationOrder));
    sw->add_option("--mode", cfg.mode, "conj1 (2K2-free), conj2 (P5-free), diam2 (2K2-free, diameter 2), mk2")
        ->check(CLI::IsMember({"conj1", "conj2", "diam2", "mk2"}));
    sw->add_option("--m", cfg.m, "m for --mode mk2")->check(CLI::Range(2, 8));
    sw->add_option("--phase-cap", cfg.phase_cap, "strategy phase cap (0: n^2)")->check(CLI::NonNegativeNumber);
    sw->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));
    add_output(sw);

    auto* gen = app.add_subcommand("gen", "emit graph6 lines: all connected graphs, or random 2K2-free graphs");
    gen->add_option("--n-min", cfg.n_min, "smallest order when enumerating")->check(CLI::Range(1, kMaxEnumerationOrder));
    gen->add_option("--n-max", cfg.n_max, "largest order (enumeration) or the order (--random)")->required()->check(CLI::PositiveNumber);
    gen->add_flag("--random", cfg.random, "sample connected 2K2-free graphs");
    gen->add_option("--seed", cfg.seed, "seed for --random (required)");
    gen->add_option("--count", cfg.count, "number of random graphs")->check(CLI::PositiveNumber);
    gen->add_option("--output", cfg.output, "write results to this file instead of stdout");

    try {
        app.parse(argc, argv);
        if (sw->parsed() && cfg.input.empty() && cfg.n_max == 0)
            throw CLI::ValidationError("sweep", "needs --input or --n-max");
        if (gen->parsed() && cfg.random && !cfg.seed)
            throw CLI::ValidationError("gen", "--random requires --seed");
        if (gen->parsed() && !cfg.random && cfg.n_max > kMaxEnumerationOrder)
            throw CLI::ValidationError("gen", "enumeration is limited to --n-max " + std::to_string(kMaxEnumerationOrder));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (check->parsed())
            return cmd_check(cfg, in, out, err);
        if (copnum->parsed())
            return cmd_cop_number(cfg, in, out, err);
        if (verify->parsed())
            return cmd_verify(cfg, in, out, err);
        if (sw->parsed())
            return cmd_sweep(cfg, in, out, err);
        return cmd_gen(cfg, out);
    } catch (const IoFailure& e) {
        err << "pursuit: " << e.message << '\n';
        return kIo;
    } catch (const Error& e) {
        err << "pursuit: " << e.what() << '\n';
        return kFailure;
    }
}

} // namespace pursuit::cli
