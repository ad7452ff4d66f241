#include "pursuit/algorithms.hpp"

#include "pursuit/errors.hpp"

#include <algorithm>
#include <string>

namespace pursuit {

namespace {

void check_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.n())
        throw IndexError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(g.n()));
}

void check_disjoint(const VertexSet& a, const VertexSet& b) {
    if (a.intersects(b))
        throw ArgumentError("sets must be disjoint");
}

} // namespace

std::vector<VertexSet> bfs_layers(const Graph& g, Vertex root) {
    check_vertex(g, root);
    std::vector<VertexSet> layers;
    VertexSet seen(g.n(), {root});
    VertexSet frontier(g.n(), {root});
    while (!frontier.empty()) {
        layers.push_back(frontier);
        auto next = neighborhood_of(g, frontier) - seen;
        seen |= next;
        frontier = std::move(next);
    }
    return layers;
}

std::vector<int> distances_from(const Graph& g, Vertex root) {
    std::vector<int> dist(g.n(), -1);
    auto layers = bfs_layers(g, root);
    for (std::size_t i = 0; i < layers.size(); ++i)
        for (auto v : layers[i])
            dist[v] = static_cast<int>(i);
    return dist;
}

std::vector<int> all_pairs_distances(const Graph& g) {
    const int n = g.n();
    std::vector<int> out(static_cast<std::size_t>(n) * n);
    for (Vertex v = 0; v < n; ++v) {
        auto row = distances_from(g, v);
        std::copy(row.begin(), row.end(), out.begin() + static_cast<std::ptrdiff_t>(v) * n);
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0)
        return true;
    VertexSet seen(g.n(), {0});
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        auto next = neighborhood_of(g, frontier) - seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen.size() == g.n();
}

int diameter(const Graph& g) {
    int best = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        auto layers = bfs_layers(g, v);
        int reached = 0;
        for (const auto& layer : layers)
            reached += layer.size();
        if (reached != g.n())
            throw DisconnectedError("diameter of a disconnected graph");
        best = std::max(best, static_cast<int>(layers.size()) - 1);
    }
    return best;
}

Graph complement(const Graph& g) {
    std::vector<VertexSet> rows;
    rows.reserve(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
        auto row = ~g.neighbors(v);
        row.erase(v);
        rows.push_back(std::move(row));
    }
    return Graph::from_adjacency(std::move(rows));
}

bool is_stable(const Graph& g, const VertexSet& a) {
    for (auto v : a)
        if (g.neighbors(v).intersects(a))
            return false;
    return true;
}

bool is_clique(const Graph& g, const VertexSet& a) {
    for (auto v : a) {
        auto others = a;
        others.erase(v);
        if (!others.is_subset_of(g.neighbors(v)))
            return false;
    }
    return true;
}

bool complete_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
    check_disjoint(a, b);
    for (auto v : a)
        if (!b.is_subset_of(g.neighbors(v)))
            return false;
    return true;
}

bool anticomplete_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
    check_disjoint(a, b);
    for (auto v : a)
        if (g.neighbors(v).intersects(b))
            return false;
    return true;
}

VertexSet neighborhood_of(const Graph& g, const VertexSet& a) {
    VertexSet out(g.n());
    for (auto v : a)
        out |= g.neighbors(v);
    return out;
}

Vertex step_toward(const Graph& g, Vertex from, Vertex to) {
    check_vertex(g, from);
    check_vertex(g, to);
    if (from == to)
        return from;
    auto dist = distances_from(g, to);
    if (dist[from] < 0)
        return from;
    for (auto w : g.neighbors(from))
        if (dist[w] == dist[from] - 1)
            return w;
    return from;
}

} // namespace pursuit
