#include "pursuit/strategies.hpp"

#include "pursuit/algorithms.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace pursuit {

namespace {

// Branch numbers shared by the structural policies.
enum Branch : int {
    kDominated = 0, // robber placed inside a cop's closed neighbourhood
    kFrozen = 1,    // robber cannot move safely; one cop guards, one walks
    kTrap = 2,      // two-move trap
    kFallback = 3,  // outside every case the proof covers
};

// Smallest-index cop that can step onto the robber does so; the rest stay.
std::optional<std::vector<Vertex>> capture_move(const Graph& g, std::span<const Vertex> cops, Vertex robber) {
    for (std::size_t i = 0; i < cops.size(); ++i) {
        if (cops[i] == robber || g.adjacent(cops[i], robber)) {
            std::vector<Vertex> out(cops.begin(), cops.end());
            out[i] = robber;
            return out;
        }
    }
    return std::nullopt;
}

bool dominated(const Graph& g, std::span<const Vertex> cops, Vertex robber) {
    return capture_move(g, cops, robber).has_value();
}

std::vector<Vertex> chase_all(const Graph& g, std::span<const Vertex> cops, Vertex robber) {
    std::vector<Vertex> out;
    for (auto c : cops)
        out.push_back(step_toward(g, c, robber));
    return out;
}

// Cop `walker` steps toward the robber, everyone else stays.
std::vector<Vertex> walk_one(const Graph& g, std::span<const Vertex> cops, Vertex robber, std::size_t walker) {
    std::vector<Vertex> out(cops.begin(), cops.end());
    out[walker] = step_toward(g, cops[walker], robber);
    return out;
}

std::string common_label(const Latch& latch) {
    switch (latch.branch) {
    case -1: return "unlatched";
    case kDominated: return "dominated";
    case kFallback: return "fallback";
    default: return "branch" + std::to_string(latch.branch);
    }
}

void require_2k2_free(const Graph& g, const char* who) {
    if (g.n() < 1 || !is_connected(g))
        throw ClassError(std::string(who) + " needs a connected graph");
    if (has_induced_mk2(g, 2))
        throw ClassError(std::string(who) + " needs a 2K2-free graph");
}

std::pair<Vertex, Vertex> least_edge(const Graph& g) {
    auto edges = g.edges();
    if (edges.empty())
        return {0, 0};
    return edges.front();
}

class Prop1Policy final : public Policy {
public:
    explicit Prop1Policy(Graph g) : g_(std::move(g)) {}

    CopMove next(std::span<const Vertex> cops, Vertex robber, const Latch& latch) const override {
        Latch out = latch;
        if (out.branch < 0)
            out.branch = dominated(g_, cops, robber) ? kDominated : kFrozen;
        if (auto hit = capture_move(g_, cops, robber))
            return {*hit, out};
        return {walk_one(g_, cops, robber, 2), out};
    }

    std::string branch_label(const Latch& latch) const override {
        return latch.branch == kFrozen ? "stable_set_walk" : common_label(latch);
    }

private:
    Graph g_;
};

class Thm1Policy final : public Policy {
public:
    Thm1Policy(Graph g, Diam3Layers d) : g_(std::move(g)), d_(std::move(d)) {}

    CopMove next(std::span<const Vertex> cops, Vertex robber, const Latch& latch) const override {
        Latch out = latch;
        if (out.branch < 0) {
            if (dominated(g_, cops, robber))
                out.branch = kDominated;
            else if (d_.L[3].contains(robber))
                out.branch = kFrozen;
            else if (d_.A2.contains(robber))
                out.branch = kTrap;
            else
                out.branch = kFallback;
        }
        if (auto hit = capture_move(g_, cops, robber))
            return {*hit, out};
        if (out.branch == kFrozen)
            return {walk_one(g_, cops, robber, 1), out};
        if (out.branch == kTrap && cops[0] == d_.v1 && cops[1] == d_.v2) {
            // y in L1 is adjacent to v2 because B is complete to L1.
            const Vertex y = (g_.neighbors(robber) & d_.L[1]).first();
            return {{d_.v2, y}, out};
        }
        return {chase_all(g_, cops, robber), out};
    }

    std::string branch_label(const Latch& latch) const override {
        switch (latch.branch) {
        case kFrozen: return "L3_block_and_walk";
        case kTrap: return "A2_trap";
        default: return common_label(latch);
        }
    }

private:
    Graph g_;
    Diam3Layers d_;
};

class C4FreePolicy final : public Policy {
public:
    explicit C4FreePolicy(Graph g) : g_(std::move(g)) {}

    CopMove next(std::span<const Vertex> cops, Vertex robber, const Latch& latch) const override {
        Latch out = latch;
        if (out.branch < 0)
            out.branch = dominated(g_, cops, robber) ? kDominated : kFrozen;
        if (auto hit = capture_move(g_, cops, robber))
            return {*hit, out};
        return {walk_one(g_, cops, robber, 1), out};
    }

    std::string branch_label(const Latch& latch) const override {
        return latch.branch == kFrozen ? "C_walk" : common_label(latch);
    }

private:
    Graph g_;
};

class C5FreePolicy final : public Policy {
public:
    C5FreePolicy(Graph g, EdgePartition p) : g_(std::move(g)), p_(std::move(p)) {}

    CopMove next(std::span<const Vertex> cops, Vertex robber, const Latch& latch) const override {
        Latch out = latch;
        if (out.branch < 0) {
            if (dominated(g_, cops, robber)) {
                out.branch = kDominated;
            } else if (!p_.D.contains(robber)) {
                out.branch = kFallback;
            } else if (auto y = trap_vertex(robber); y >= 0) {
                out.branch = kTrap;
                out.swapped = p_.A.contains(y);
            } else {
                out.branch = kFrozen;
            }
        }
        if (auto hit = capture_move(g_, cops, robber))
            return {*hit, out};
        if (out.branch == kFrozen)
            return {walk_one(g_, cops, robber, 1), out};
        if (out.branch == kTrap && cops[0] == p_.u && cops[1] == p_.v) {
            const Vertex y = trap_vertex(robber);
            if (y >= 0) {
                // With y in B the v-cop takes y and the u-cop takes v; mirrored for y in A.
                if (p_.B.contains(y))
                    return {{p_.v, y}, out};
                return {{y, p_.u}, out};
            }
        }
        return {chase_all(g_, cops, robber), out};
    }

    std::string branch_label(const Latch& latch) const override {
        switch (latch.branch) {
        case kFrozen: return "D_walk";
        case kTrap: return latch.swapped ? "D_trap_via_A" : "D_trap_via_B";
        default: return common_label(latch);
        }
    }

private:
    Vertex trap_vertex(Vertex z) const { return (g_.neighbors(z) & (p_.A | p_.B)).first(); }

    Graph g_;
    EdgePartition p_;
};

class Blowup5Policy final : public Policy {
public:
    Blowup5Policy(Graph g, Blowup5 b) : g_(std::move(g)), b_(std::move(b)) {}

    Vertex x() const { return b_.parts[0].first(); }
    Vertex y() const { return b_.parts[2].first(); }

    CopMove next(std::span<const Vertex> cops, Vertex robber, const Latch& latch) const override {
        Latch out = latch;
        if (out.branch < 0) {
            if (dominated(g_, cops, robber)) {
                out.branch = kDominated;
            } else if (b_.parts[0].contains(robber) || b_.parts[2].contains(robber)) {
                out.branch = kTrap;
                out.swapped = b_.parts[2].contains(robber);
            } else {
                out.branch = kFallback;
            }
        }
        if (auto hit = capture_move(g_, cops, robber))
            return {*hit, out};
        if (out.branch == kTrap && cops[0] == x() && cops[1] == y()) {
            const Vertex w = b_.parts[1].first();
            if (out.swapped)
                return {{w, y()}, out};
            return {{x(), w}, out};
        }
        return {chase_all(g_, cops, robber), out};
    }

    std::string branch_label(const Latch& latch) const override {
        if (latch.branch == kTrap)
            return latch.swapped ? "V3_trap" : "V1_trap";
        return common_label(latch);
    }

private:
    Graph g_;
    Blowup5 b_;
};

class SolverPolicy final : public Policy {
public:
    explicit SolverPolicy(SolveResult res) : res_(std::move(res)) {}

    CopMove next(std::span<const Vertex> cops, Vertex robber, const Latch& latch) const override {
        Latch out = latch;
        out.branch = 0;
        const auto& g = res_.graph();
        if (res_.label(cops, robber) == kRobberEscapes)
            return {chase_all(g, cops, robber), out};
        const auto target = optimal_cop_move(res_, GameState::cop_to_move({cops.begin(), cops.end()}, robber));
        // Give each cop a target vertex within its closed neighbourhood.
        std::vector<std::size_t> perm(target.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool ok = true;
            for (std::size_t i = 0; i < cops.size() && ok; ++i)
                ok = target[perm[i]] == cops[i] || g.adjacent(cops[i], target[perm[i]]);
            if (ok) {
                std::vector<Vertex> moved;
                for (std::size_t i = 0; i < cops.size(); ++i)
                    moved.push_back(target[perm[i]]);
                return {moved, out};
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return {chase_all(g, cops, robber), out};
    }

    std::string branch_label(const Latch& latch) const override {
        return latch.branch < 0 ? "unlatched" : "solver_optimal";
    }

private:
    SolveResult res_;
};

} // namespace

std::string_view to_string(Provenance p) {
    switch (p) {
    case Provenance::Prop1: return "PROP1";
    case Provenance::Thm1Diam3: return "THM1_DIAM3";
    case Provenance::Thm2C4Free: return "THM2_C4FREE";
    case Provenance::Thm2C5Free: return "THM2_C5FREE";
    case Provenance::Thm2Blowup5: return "THM2_BLOWUP5";
    case Provenance::SolverFallback: return "SOLVER_FALLBACK";
    }
    return "UNKNOWN";
}

bool legal_cop_move(const Graph& g, std::span<const Vertex> from, std::span<const Vertex> to) {
    if (from.size() != to.size())
        return false;
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (to[i] < 0 || to[i] >= g.n())
            return false;
        if (from[i] != to[i] && !g.adjacent(from[i], to[i]))
            return false;
    }
    return true;
}

Strategy strategy_prop1(const Graph& g) {
    require_2k2_free(g, "strategy_prop1");
    auto [u, v] = least_edge(g);
    return {3, {u, v, u}, Provenance::Prop1, std::make_shared<Prop1Policy>(g), 4};
}

Strategy strategy_thm1(const Graph& g, const Diam3Layers& d) {
    if (auto failure = check_invariants(g, d))
        throw InvalidInputError("layering is not certified: " + *failure);
    return {2, {d.v1, d.v2}, Provenance::Thm1Diam3, std::make_shared<Thm1Policy>(g, d), 4};
}

Strategy strategy_blowup_c5(const Graph& g, const Blowup5& b) {
    if (auto failure = check_invariants(g, b))
        throw InvalidInputError("blow-up is not certified: " + *failure);
    auto policy = std::make_shared<Blowup5Policy>(g, b);
    return {2, {policy->x(), policy->y()}, Provenance::Thm2Blowup5, policy, 3};
}

Strategy strategy_c4free(const Graph& g, const C4FreeStructure& s) {
    if (auto failure = check_invariants(g, s))
        throw InvalidInputError("structure is not certified: " + *failure);
    const int bound = 2 + diameter(g);
    if (s.B.empty()) {
        auto b = recognize_blowup_c5(g);
        if (!b)
            throw InvalidInputError("empty B but the graph is not C5");
        auto delegated = strategy_blowup_c5(g, *b);
        delegated.provenance = Provenance::Thm2C4Free;
        delegated.phase_bound = bound;
        return delegated;
    }
    const Vertex b = s.B.first();
    return {2, {b, b}, Provenance::Thm2C4Free, std::make_shared<C4FreePolicy>(g), bound};
}

Strategy strategy_c5free(const Graph& g) {
    require_2k2_free(g, "strategy_c5free");
    if (has_induced_cycle(g, 5))
        throw ClassError("strategy_c5free needs a graph without induced C5");
    auto [u, v] = least_edge(g);
    if (u == v) // K1
        return {2, {0, 0}, Provenance::Thm2C5Free, std::make_shared<C4FreePolicy>(g), 4};
    auto p = edge_partition(g, u, v);
    return {2, {u, v}, Provenance::Thm2C5Free, std::make_shared<C5FreePolicy>(g, std::move(p)), 4};
}

Strategy strategy_from_solver(const Graph& g, int k_max, const SolveOptions& options) {
    const int k = cop_number(g, k_max, options);
    auto res = solve(g, k, options);
    const auto bound = static_cast<int>(res.value());
    auto placement = *res.best_initial();
    return {k, std::move(placement), Provenance::SolverFallback, std::make_shared<SolverPolicy>(std::move(res)), bound};
}

Strategy select_strategy(const Graph& g, const SolveOptions& options) {
    require_2k2_free(g, "select_strategy");
    if (diameter(g) == 3)
        return strategy_thm1(g, diam3_decompose(g));
    if (!has_induced_cycle(g, 4))
        return strategy_c4free(g, c4free_decompose(g));
    if (!has_induced_cycle(g, 5))
        return strategy_c5free(g);
    if (!has_induced_cycle(g, 3)) {
        auto b = recognize_blowup_c5(g);
        if (!b)
            throw InvalidInputError("triangle-free 2K2-free graph with C5 is not a blow-up of C5");
        return strategy_blowup_c5(g, *b);
    }
    return strategy_from_solver(g, 3, options);
}

} // namespace pursuit
