#include "pursuit/graph.hpp"

#include "pursuit/errors.hpp"

#include <string>

namespace pursuit {

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n < 0)
        throw ArgumentError("negative vertex count");
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ArgumentError("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
        if (u == v)
            throw ArgumentError("loop at vertex " + std::to_string(u));
        rows[u].insert(v);
        rows[v].insert(u);
    }
    Graph g;
    g.adj_ = std::move(rows);
    return g;
}

Graph Graph::from_adjacency(std::vector<VertexSet> rows) {
    const int n = static_cast<int>(rows.size());
    for (Vertex u = 0; u < n; ++u) {
        if (rows[u].universe() != n)
            throw ArgumentError("adjacency row " + std::to_string(u) + " has the wrong universe");
        if (rows[u].contains(u))
            throw ArgumentError("loop at vertex " + std::to_string(u));
        for (auto v : rows[u])
            if (!rows[v].contains(u))
                throw ArgumentError("asymmetric adjacency between " + std::to_string(u) + " and " + std::to_string(v));
    }
    Graph g;
    g.adj_ = std::move(rows);
    return g;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n(); ++u)
        for (auto v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

int Graph::edge_count() const {
    int twice = 0;
    for (const auto& row : adj_)
        twice += row.size();
    return twice / 2;
}

Graph Graph::induced(const VertexSet& keep) const {
    return relabel(keep.to_vector());
}

Graph Graph::relabel(const std::vector<Vertex>& order) const {
    const int m = static_cast<int>(order.size());
    std::vector<VertexSet> rows(m, VertexSet(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (adjacent(order[i], order[j])) {
                rows[i].insert(j);
                rows[j].insert(i);
            }
    Graph g;
    g.adj_ = std::move(rows);
    return g;
}

Graph path_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw ArgumentError("a cycle needs at least 3 vertices");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph complete_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 1; i <= leaves; ++i)
        e.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, e);
}

Graph empty_graph(int n) { return Graph::from_edges(n, {}); }

Graph petersen_graph() {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);         // outer cycle
        e.emplace_back(i, i + 5);               // spokes
        e.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return Graph::from_edges(10, e);
}

} // namespace pursuit
