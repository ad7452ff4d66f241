#include "pursuit/patterns.hpp"

#include "pursuit/errors.hpp"

#include <string>

namespace pursuit {

namespace {

// Chooses `remaining` more induced edges among `candidates`. Every edge is
// branched on from its smallest endpoint; a vertex that starts no edge is dropped.
bool pick_induced_edges(const Graph& g, VertexSet candidates, int remaining) {
    if (remaining == 0)
        return true;
    while (candidates.size() >= 2 * remaining) {
        const Vertex a = candidates.first();
        candidates.erase(a);
        for (auto b : g.neighbors(a) & candidates) {
            auto rest = candidates - g.neighbors(a) - g.closed_neighbors(b);
            if (pick_induced_edges(g, std::move(rest), remaining - 1))
                return true;
        }
    }
    return false;
}

struct CycleSearch {
    const Graph& g;
    int k;
    VertexSet allowed;
    std::vector<Vertex> path;
    // Union of closed neighbourhoods of path[0..size-2].
    std::vector<VertexSet> blocked;

    bool extend() {
        const int i = static_cast<int>(path.size());
        const Vertex last = path.back();
        if (i == k - 1) {
            auto closing = g.neighbors(last) & g.neighbors(path[0]) & allowed;
            closing -= blocked_without_root();
            for (auto w : closing)
                if (w > path[1]) {
                    path.push_back(w);
                    return true;
                }
            return false;
        }
        auto next = g.neighbors(last) & allowed;
        if (i >= 2)
            next -= blocked.back();
        for (auto w : next) {
            auto grown = blocked.empty() ? g.closed_neighbors(last) : blocked.back() | g.closed_neighbors(last);
            path.push_back(w);
            blocked.push_back(std::move(grown));
            if (extend())
                return true;
            path.pop_back();
            blocked.pop_back();
        }
        return false;
    }

    // N[path[1]] ∪ ... ∪ N[path[k-3]] plus the path vertices themselves.
    VertexSet blocked_without_root() const {
        VertexSet out(g.n());
        for (std::size_t j = 1; j + 1 < path.size(); ++j)
            out |= g.closed_neighbors(path[j]);
        for (auto p : path)
            out.insert(p);
        return out;
    }
};

bool extend_induced_path(const Graph& g, std::vector<Vertex>& path, const VertexSet& blocked, int t) {
    if (static_cast<int>(path.size()) == t)
        return true;
    const Vertex last = path.back();
    auto next = g.neighbors(last) - blocked;
    auto grown = blocked | g.closed_neighbors(last);
    for (auto w : next) {
        path.push_back(w);
        if (extend_induced_path(g, path, grown, t))
            return true;
        path.pop_back();
    }
    return false;
}

} // namespace

bool has_induced_mk2(const Graph& g, int m) {
    if (m < 1)
        throw ArgumentError("m must be positive, got " + std::to_string(m));
    return pick_induced_edges(g, g.vertices(), m);
}

int mk2_free_level(const Graph& g) {
    int m = 1;
    while (has_induced_mk2(g, m))
        ++m;
    return m;
}

std::optional<std::vector<Vertex>> find_induced_cycle(const Graph& g, int k) {
    if (k < 3 || k > 5)
        throw ArgumentError("induced cycle length must be 3, 4 or 5, got " + std::to_string(k));
    for (Vertex a = 0; a < g.n(); ++a) {
        VertexSet allowed(g.n());
        for (Vertex v = a + 1; v < g.n(); ++v)
            allowed.insert(v);
        CycleSearch search{g, k, std::move(allowed), {a}, {}};
        if (search.extend())
            return search.path;
    }
    return std::nullopt;
}

bool has_induced_cycle(const Graph& g, int k) { return find_induced_cycle(g, k).has_value(); }

bool has_induced_path(const Graph& g, int t) {
    if (t < 1)
        throw ArgumentError("path order must be positive");
    for (Vertex a = 0; a < g.n(); ++a) {
        std::vector<Vertex> path{a};
        if (extend_induced_path(g, path, VertexSet(g.n()), t))
            return true;
    }
    return false;
}

} // namespace pursuit
