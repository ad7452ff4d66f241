#pragma once

#include "pursuit/graph.hpp"

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace pursuit {

using CaptureTime = std::uint32_t;

// Label of a position from which the robber evades forever.
inline constexpr CaptureTime kRobberEscapes = std::numeric_limits<CaptureTime>::max();

enum class Turn { CopMove, RobberMove };

struct GameState {
    std::vector<Vertex> cops; // sorted ascending; cops may share a vertex
    Vertex robber = 0;
    Turn turn = Turn::CopMove;

    static GameState cop_to_move(std::vector<Vertex> cops, Vertex robber);
    static GameState robber_to_move(std::vector<Vertex> cops, Vertex robber);
};

struct SolveOptions {
    // Upper limit on n^(k+1), the size of the raw state space.
    std::uint64_t state_budget = std::uint64_t{1} << 27;
};

struct SolveTables;

// Exact outcome of the k-cop game on one graph. Capture times count cop phases.
class SolveResult {
public:
    int k() const;
    const Graph& graph() const;
    bool cop_win() const;
    // Placement minimising the worst capture time over robber placements,
    // lexicographically smallest among ties; empty when the robber wins.
    const std::optional<std::vector<Vertex>>& best_initial() const;
    // Worst-case capture time from best_initial (kRobberEscapes if none).
    CaptureTime value() const;

    // Cop-to-move label. Cops need not be sorted.
    CaptureTime label(std::span<const Vertex> cops, Vertex robber) const;
    // Robber-to-move value after the cops moved to `cops`; 0 if already captured.
    CaptureTime robber_label(std::span<const Vertex> cops, Vertex robber) const;
    // Worst robber placement against `placement` (its label).
    CaptureTime placement_value(std::span<const Vertex> placement) const;

    // Sorted cop tuples reachable in one cop phase from `cops`, in lexicographic order.
    std::vector<std::vector<Vertex>> cop_successors(std::span<const Vertex> cops) const;

    // Number of cop-to-move states in the table.
    std::uint64_t state_count() const;

private:
    friend SolveResult solve(const Graph& g, int k, const SolveOptions& options);
    std::shared_ptr<const SolveTables> tables_;
};

// Backward induction over all positions. Throws ResourceError past the budget,
// DisconnectedError for disconnected graphs, ArgumentError for k < 1.
SolveResult solve(const Graph& g, int k, const SolveOptions& options = {});

// Least k <= k_max for which the cops win; BoundExceededError when none does.
int cop_number(const Graph& g, int k_max = 3, const SolveOptions& options = {});

// Successor achieving the label of a cop-to-move state; ties go to the
// lexicographically smallest sorted tuple. Throws NoWinningMoveError on a
// robber-win state.
std::vector<Vertex> optimal_cop_move(const SolveResult& res, const GameState& s);

// Robber move in N[r] maximising the remaining capture time (escape preferred,
// smallest index on ties).
Vertex best_robber_response(const SolveResult& res, const GameState& s);

// Corner elimination: u is a corner if N[u] is contained in N[v] for some v != u.
bool is_dismantlable(const Graph& g);

} // namespace pursuit
