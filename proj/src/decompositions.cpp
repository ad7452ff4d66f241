#include "pursuit/decompositions.hpp"

#include "pursuit/algorithms.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pursuit {

namespace {

bool edges_inside_touch(const Graph& g, const VertexSet& inside, Vertex hub) {
    for (auto a : inside)
        for (auto b : g.neighbors(a) & inside)
            if (!g.adjacent(a, hub) && !g.adjacent(b, hub))
                return false;
    return true;
}

// Hammer-Simeone: the top-m vertices by degree form the clique side of any
// split partition. Afterwards clique vertices with no stable-side neighbour
// are moved across, keeping at least one clique vertex.
std::pair<VertexSet, VertexSet> split_partition(const Graph& g) {
    std::vector<Vertex> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    int m = 0;
    for (int i = 0; i < g.n(); ++i)
        if (g.degree(order[i]) >= i)
            m = i + 1;
    VertexSet clique(g.n()), stable(g.n());
    for (int i = 0; i < g.n(); ++i)
        (i < m ? clique : stable).insert(order[i]);

    std::vector<Vertex> movable(order.begin(), order.begin() + m);
    std::stable_sort(movable.begin(), movable.end(), [&](Vertex a, Vertex b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a > b;
    });
    for (auto v : movable) {
        if (clique.size() <= 1)
            break;
        if (!g.neighbors(v).intersects(stable)) {
            clique.erase(v);
            stable.insert(v);
        }
    }
    return {clique, stable};
}

} // namespace

std::optional<std::string> check_invariants(const Graph& g, const Diam3Layers& d) {
    const auto dist = distances_from(g, d.v0);
    if (dist[d.v3] != 3)
        return "dist(v0, v3) is not 3";
    if (!g.adjacent(d.v0, d.v1) || !g.adjacent(d.v1, d.v2) || !g.adjacent(d.v2, d.v3))
        return "v0-v1-v2-v3 is not a path";
    auto layers = bfs_layers(g, d.v0);
    if (layers.size() > 4)
        return "L4 is not empty";
    for (std::size_t i = 0; i < 4; ++i)
        if (!(d.L[i] == layers[i]))
            return "layer L" + std::to_string(i) + " does not match the distances from v0";
    const auto expected_b = d.L[2] & neighborhood_of(g, d.L[3]);
    if (!(d.B == expected_b))
        return "B is not the set of L2 vertices with a neighbour in L3";
    if (!d.B.contains(d.v2))
        return "v2 is not in B";
    if (!(d.A == d.L[2] - d.B) || !(d.A1 == (d.A & g.neighbors(d.v1))) || !(d.A2 == d.A - d.A1))
        return "A, A1, A2 are not derived from L2, B and v1";
    if (!is_stable(g, d.L[3]))
        return "claim (1): L3 is not stable";
    if (!complete_between(g, d.B, d.L[1]))
        return "claim (2): B is not complete to L1";
    if (!is_stable(g, d.A2))
        return "claim (3): A2 is not stable";
    if (!edges_inside_touch(g, d.A, d.v2))
        return "claim (4): an edge inside A has no endpoint adjacent to v2";
    return std::nullopt;
}

Diam3Layers diam3_decompose(const Graph& g) {
    if (!is_connected(g))
        throw PreconditionError("diam3_decompose needs a connected graph");
    const int n = g.n();
    const auto dist = all_pairs_distances(g);
    auto at = [&](Vertex a, Vertex b) { return dist[static_cast<std::size_t>(a) * n + b]; };
    const int diam = *std::max_element(dist.begin(), dist.end());
    if (diam != 3)
        throw PreconditionError("diam3_decompose needs diameter 3, got " + std::to_string(diam));

    Diam3Layers d;
    bool found = false;
    for (Vertex a = 0; a < n && !found; ++a)
        for (Vertex b = a + 1; b < n && !found; ++b)
            if (at(a, b) == 3) {
                d.v0 = a;
                d.v3 = b;
                found = true;
            }
    for (auto w : g.neighbors(d.v0))
        if (at(w, d.v3) == 2) {
            d.v1 = w;
            break;
        }
    for (auto w : g.neighbors(d.v1))
        if (at(w, d.v3) == 1) {
            d.v2 = w;
            break;
        }

    auto layers = bfs_layers(g, d.v0);
    for (std::size_t i = 0; i < 4; ++i)
        d.L[i] = i < layers.size() ? layers[i] : VertexSet(n);
    d.B = d.L[2] & neighborhood_of(g, d.L[3]);
    d.A = d.L[2] - d.B;
    d.A1 = d.A & g.neighbors(d.v1);
    d.A2 = d.A - d.A1;

    if (auto failure = check_invariants(g, d))
        throw InvalidInputError("diameter-3 layering rejected: " + *failure);
    return d;
}

std::optional<std::string> check_invariants(const Graph& g, const C4FreeStructure& s) {
    if (s.A.intersects(s.B) || s.A.intersects(s.C) || s.B.intersects(s.C))
        return "parts overlap";
    if (!((s.A | s.B | s.C) == g.vertices()))
        return "parts do not cover V(G)";
    if (!s.A.empty()) {
        const auto ring = g.induced(s.A);
        if (ring.n() != 5 || ring.edge_count() != 5 || !has_induced_cycle(ring, 5))
            return "A is neither empty nor an induced C5";
    }
    if (!is_clique(g, s.B))
        return "B is not a clique";
    if (!is_stable(g, s.C))
        return "C is not stable";
    if (!complete_between(g, s.A, s.B))
        return "A is not complete to B";
    if (!anticomplete_between(g, s.A, s.C))
        return "A is not anticomplete to C";
    return std::nullopt;
}

C4FreeStructure c4free_decompose(const Graph& g) {
    if (!is_connected(g))
        throw PreconditionError("c4free_decompose needs a connected graph");
    C4FreeStructure s{g.empty_set(), g.empty_set(), g.empty_set()};
    if (auto ring = find_induced_cycle(g, 5)) {
        for (auto v : *ring)
            s.A.insert(v);
        for (auto v : g.vertices() - s.A)
            (s.A.is_subset_of(g.neighbors(v)) ? s.B : s.C).insert(v);
    } else {
        std::tie(s.B, s.C) = split_partition(g);
    }
    if (auto failure = check_invariants(g, s))
        throw InvalidInputError("(2K2, C4)-free structure rejected: " + *failure);
    return s;
}

EdgePartition edge_partition(const Graph& g, Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n())
        throw IndexError("edge endpoint out of range");
    if (!g.adjacent(u, v))
        throw ArgumentError(std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
    EdgePartition p;
    p.u = u;
    p.v = v;
    const auto nu = g.closed_neighbors(u);
    const auto nv = g.closed_neighbors(v);
    p.A = g.neighbors(u) - nv;
    p.B = g.neighbors(v) - nu;
    p.C = g.neighbors(u) & g.neighbors(v);
    p.D = g.vertices() - nu - nv;
    p.d_stable = is_stable(g, p.D);
    return p;
}

std::optional<std::string> check_invariants(const Graph& g, const Blowup5& b) {
    auto covered = g.empty_set();
    for (const auto& part : b.parts) {
        if (part.empty())
            return "empty part";
        if (part.intersects(covered))
            return "parts overlap";
        covered |= part;
        if (!is_stable(g, part))
            return "part is not stable";
    }
    if (!(covered == g.vertices()))
        return "parts do not cover V(G)";
    for (int i = 0; i < 5; ++i) {
        if (!complete_between(g, b.parts[i], b.parts[(i + 1) % 5]))
            return "consecutive parts " + std::to_string(i + 1) + " and " + std::to_string((i + 1) % 5 + 1) + " are not complete";
        if (!anticomplete_between(g, b.parts[i], b.parts[(i + 2) % 5]))
            return "parts " + std::to_string(i + 1) + " and " + std::to_string((i + 2) % 5 + 1) + " are not anticomplete";
    }
    return std::nullopt;
}

std::optional<Blowup5> recognize_blowup_c5(const Graph& g) {
    // False-twin classes, numbered by smallest member.
    std::vector<int> cls(g.n(), -1);
    std::vector<VertexSet> classes;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (cls[v] >= 0)
            continue;
        VertexSet members(g.n());
        for (Vertex w = v; w < g.n(); ++w)
            if (cls[w] < 0 && g.neighbors(w) == g.neighbors(v)) {
                cls[w] = static_cast<int>(classes.size());
                members.insert(w);
            }
        classes.push_back(std::move(members));
    }
    if (classes.size() != 5)
        return std::nullopt;

    // Neighbouring classes of each class.
    std::vector<std::vector<int>> next(5);
    for (int c = 0; c < 5; ++c)
        for (auto w : g.neighbors(classes[c].first()))
            if (std::find(next[c].begin(), next[c].end(), cls[w]) == next[c].end())
                next[c].push_back(cls[w]);
    for (auto& adj : next) {
        if (adj.size() != 2)
            return std::nullopt;
        std::sort(adj.begin(), adj.end());
    }

    Blowup5 b;
    int prev = -1;
    int cur = cls[0];
    for (int i = 0; i < 5; ++i) {
        b.parts[i] = classes[cur];
        const int step = next[cur][0] != prev ? next[cur][0] : next[cur][1];
        prev = cur;
        cur = step;
    }
    if (check_invariants(g, b))
        return std::nullopt;
    return b;
}

nlohmann::json to_json(const VertexSet& s) { return s.to_vector(); }

nlohmann::json to_json(const Diam3Layers& d) {
    return {{"v0", d.v0}, {"v1", d.v1}, {"v2", d.v2}, {"v3", d.v3},
            {"L0", to_json(d.L[0])}, {"L1", to_json(d.L[1])}, {"L2", to_json(d.L[2])}, {"L3", to_json(d.L[3])},
            {"B", to_json(d.B)}, {"A", to_json(d.A)}, {"A1", to_json(d.A1)}, {"A2", to_json(d.A2)}};
}

nlohmann::json to_json(const C4FreeStructure& s) {
    return {{"A", to_json(s.A)}, {"B", to_json(s.B)}, {"C", to_json(s.C)}};
}

nlohmann::json to_json(const EdgePartition& p) {
    return {{"u", p.u}, {"v", p.v}, {"A", to_json(p.A)}, {"B", to_json(p.B)},
            {"C", to_json(p.C)}, {"D", to_json(p.D)}, {"D_stable", p.d_stable}};
}

nlohmann::json to_json(const Blowup5& b) {
    return {{"V1", to_json(b.parts[0])}, {"V2", to_json(b.parts[1])}, {"V3", to_json(b.parts[2])},
            {"V4", to_json(b.parts[3])}, {"V5", to_json(b.parts[4])}};
}

} // namespace pursuit
