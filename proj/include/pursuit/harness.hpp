#pragma once

#include "pursuit/graph.hpp"
#include "pursuit/solver.hpp"
#include "pursuit/strategies.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pursuit {

// ---- enumeration -----------------------------------------------------------

inline constexpr int kMaxEnumerationOrder = 8;

// Vertex order (position -> vertex) that yields the canonical relabelling.
// Individualisation-refinement over equitable partitions; exact for any n,
// intended for n <= 11 (the certificate must fit in 64 bits).
std::vector<Vertex> canonical_order(const Graph& g);
// Upper-triangle bits of the canonical relabelling, column by column.
std::uint64_t canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);

// One representative per isomorphism class of connected graphs on n vertices,
// in canonical form, sorted by canonical code. ArgumentError outside 1..8.
std::vector<Graph> enumerate_connected(int n);

// Connected 2K2-free graph, deterministic in (n, seed). Mixes rejection
// sampling over G(n, p) (p raised after each rejection) with a split-graph
// sampler. ResourceError once `max_attempts` samples are rejected.
Graph random_2k2free(int n, std::uint64_t seed, int max_attempts = 100000);

// ---- adversarial verification ---------------------------------------------

enum class Mover { Placement, Cops, Robber };

struct Snapshot {
    int phase = 0; // cop phases played so far
    Mover mover = Mover::Placement;
    std::vector<Vertex> cops;
    Vertex robber = 0;
    std::string branch;
};

struct StrategyTrace {
    std::vector<Snapshot> rounds;
    bool captured = false;
    int cop_phases = 0;
};

// Robber evades: either a position repeated (rounds[cycle_start] is the first
// occurrence of the repeated cop-to-move position) or the phase cap ran out.
struct EscapeWitness {
    std::vector<Snapshot> rounds;
    std::optional<std::size_t> cycle_start;
    std::string reason;
};

using Verdict = std::variant<StrategyTrace, EscapeWitness>;

// Plays s against the exact solver's best robber (placement and moves).
// phase_cap <= 0 means n*n. Throws IllegalMoveError if the policy cheats.
Verdict verify_adversarial(const Graph& g, const Strategy& s, int phase_cap = 0, const SolveOptions& options = {});

// Explores every robber behaviour against the deterministic policy and returns
// the longest capture line, or an escaping line if any exists.
Verdict verify_exhaustive(const Graph& g, const Strategy& s, int phase_cap = 0);

nlohmann::ordered_json to_json(const Snapshot& snap);
// One JSON object per snapshot, newline separated.
std::string trace_to_json_lines(const std::vector<Snapshot>& rounds);

// ---- sweeps ----------------------------------------------------------------

enum class SweepMode { Conj1TwoK2, Conj2P5, Diam2Report, Mk2 };

struct SweepOptions {
    SweepMode mode = SweepMode::Conj1TwoK2;
    int m = 2;         // Mk2 only
    int phase_cap = 0; // <= 0 means n*n
    int jobs = 1;
    SolveOptions solve;
};

struct GraphRecord {
    std::size_t line = 0; // 1-based position in the input stream
    std::string graph6;
    int n = 0;
    bool two_k2_free = false;
    bool p5_free = false;
    int diameter = 0;
    bool c3_free = false;
    bool c4_free = false;
    bool c5_free = false;
    int mk2_free_level = 1;
    std::optional<int> cop_number; // empty when it exceeds the k bound
    int cop_bound = 0;
    std::optional<std::string> provenance;
    std::optional<int> strategy_cops;
    std::optional<int> capture_phases; // worst case over all robbers
    std::optional<int> phase_bound;
    bool strategy_captured = true;
    bool bound_satisfied = true;
    std::string note;
};

struct InputError {
    std::size_t line = 0;
    std::string message;
};

struct SweepReport {
    SweepMode mode = SweepMode::Conj1TwoK2;
    int m = 2;
    std::size_t graphs_read = 0;
    std::vector<GraphRecord> records; // graphs in the mode's class, input order
    std::vector<InputError> input_errors;

    std::vector<const GraphRecord*> violations() const;
    // Over records whose cop number was resolved within the k bound.
    int max_cop_number() const;
    int max_capture_phases() const;
};

// Graphs outside the mode's class are skipped. A violation is a graph whose
// cop number exceeds the bound (2, or 2m-1 for Mk2) or whose selected strategy
// fails; it is reported, never thrown.
SweepReport sweep(const std::vector<std::string>& graph6_lines, const SweepOptions& options);

SweepReport sweep_conjecture(const std::vector<std::string>& graph6_lines, SweepMode mode, const SweepOptions& options = {});
SweepReport sweep_mk2(const std::vector<std::string>& graph6_lines, int m, const SweepOptions& options = {});

std::string_view to_string(SweepMode mode);
nlohmann::ordered_json to_json(const GraphRecord& r);
nlohmann::ordered_json summary_json(const SweepReport& report);

// graph6 lines for all connected graphs with lo <= n <= hi.
std::vector<std::string> enumerated_graph6(int lo, int hi);

} // namespace pursuit
