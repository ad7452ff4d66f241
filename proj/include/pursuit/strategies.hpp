#pragma once

#include "pursuit/decompositions.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/solver.hpp"

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pursuit {

enum class Provenance { Prop1, Thm1Diam3, Thm2C4Free, Thm2C5Free, Thm2Blowup5, SolverFallback };

std::string_view to_string(Provenance p);

// Branch chosen when the robber places; fixed for the rest of the pursuit.
struct Latch {
    int branch = -1; // -1 until the first cop phase
    bool swapped = false;

    auto operator<=>(const Latch&) const = default;
};

struct CopMove {
    std::vector<Vertex> cops; // same cop order as the input tuple
    Latch latch;
};

// Deterministic pursuit rule. next() is a pure function of the observable
// position and the latch; cop i of the result is cop i of the input moved by
// at most one edge.
class Policy {
public:
    virtual ~Policy() = default;
    virtual CopMove next(std::span<const Vertex> cops, Vertex robber, const Latch& latch) const = 0;
    virtual std::string branch_label(const Latch& latch) const = 0;
};

struct Strategy {
    int k = 0;
    std::vector<Vertex> placement;
    Provenance provenance = Provenance::SolverFallback;
    std::shared_ptr<const Policy> policy;
    // Largest number of cop phases the strategy may take against any robber.
    int phase_bound = 0;

    CopMove next(std::span<const Vertex> cops, Vertex robber, const Latch& latch) const {
        return policy->next(cops, robber, latch);
    }
};

// Each cop stays or moves along one edge.
bool legal_cop_move(const Graph& g, std::span<const Vertex> from, std::span<const Vertex> to);

// Three cops: two guard the least edge uv, the third walks to the frozen robber.
Strategy strategy_prop1(const Graph& g);

// Two cops on v1, v2 of the certified diameter-3 layering.
Strategy strategy_thm1(const Graph& g, const Diam3Layers& d);

// A stationary cop on the smallest B vertex plus a walker; delegates to the
// blow-up strategy when B is empty (g is C5).
Strategy strategy_c4free(const Graph& g, const C4FreeStructure& s);

// Two cops on the least edge uv with the edge partition trap.
Strategy strategy_c5free(const Graph& g);

// Cops on the smallest vertices of parts V1 and V3.
Strategy strategy_blowup_c5(const Graph& g, const Blowup5& b);

// Optimal play extracted from the exact solver with the least winning cop count <= k_max.
Strategy strategy_from_solver(const Graph& g, int k_max = 3, const SolveOptions& options = {});

// First applicable of: diameter 3, C4-free, C5-free, triangle-free; otherwise
// the solver. ClassError if g is disconnected or contains an induced 2K2.
Strategy select_strategy(const Graph& g, const SolveOptions& options = {});

} // namespace pursuit
