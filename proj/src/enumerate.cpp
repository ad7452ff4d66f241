#include "pursuit/algorithms.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/graph6.hpp"
#include "pursuit/harness.hpp"

#include <algorithm>
#include <map>

namespace pursuit {

namespace {

using Partition = std::vector<std::vector<Vertex>>;

// Splits cells by neighbour counts into earlier cells until the ordered
// partition is equitable. Cell order depends only on the counts, so the
// result is invariant under relabelling.
void refine(const Graph& g, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < p.size() && !changed; ++s) {
            VertexSet splitter(g.n());
            for (auto v : p[s])
                splitter.insert(v);
            for (std::size_t x = 0; x < p.size(); ++x) {
                if (p[x].size() == 1)
                    continue;
                std::vector<std::pair<int, Vertex>> keyed;
                for (auto v : p[x])
                    keyed.emplace_back((g.neighbors(v) & splitter).size(), v);
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                if (keyed.front().first == keyed.back().first)
                    continue;
                Partition pieces;
                for (std::size_t i = 0; i < keyed.size(); ++i) {
                    if (i == 0 || keyed[i].first != keyed[i - 1].first)
                        pieces.emplace_back();
                    pieces.back().push_back(keyed[i].second);
                }
                p.erase(p.begin() + static_cast<std::ptrdiff_t>(x));
                p.insert(p.begin() + static_cast<std::ptrdiff_t>(x), pieces.begin(), pieces.end());
                changed = true;
                break;
            }
        }
    }
}

std::uint64_t code_of(const Graph& g, const std::vector<Vertex>& order) {
    std::uint64_t code = 0;
    for (std::size_t j = 1; j < order.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1U : 0U);
    return code;
}

struct Best {
    bool found = false;
    std::uint64_t code = 0;
    std::vector<Vertex> order;
};

void search(const Graph& g, Partition p, Best& best) {
    refine(g, p);
    auto target = std::find_if(p.begin(), p.end(), [](const auto& cell) { return cell.size() > 1; });
    if (target == p.end()) {
        std::vector<Vertex> order;
        for (const auto& cell : p)
            order.push_back(cell.front());
        const auto code = code_of(g, order);
        if (!best.found || code < best.code) {
            best.found = true;
            best.code = code;
            best.order = std::move(order);
        }
        return;
    }
    const auto at = static_cast<std::size_t>(target - p.begin());
    const auto cell = p[at];
    for (auto v : cell) {
        Partition q = p;
        std::vector<Vertex> rest;
        for (auto w : cell)
            if (w != v)
                rest.push_back(w);
        q[at] = {v};
        q.insert(q.begin() + static_cast<std::ptrdiff_t>(at) + 1, rest);
        search(g, std::move(q), best);
    }
}

Best canonical_search(const Graph& g) {
    if (g.n() > 11)
        throw UnsupportedSizeError("canonical codes are limited to 11 vertices");
    Partition p(1);
    for (Vertex v = 0; v < g.n(); ++v)
        p[0].push_back(v);
    Best best;
    if (g.n() == 0)
        return best;
    search(g, std::move(p), best);
    return best;
}

Graph graph_from_code(int n, std::uint64_t code) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    int bit = n * (n - 1) / 2;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i)
            if ((code >> --bit) & 1U)
                edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

} // namespace

std::vector<Vertex> canonical_order(const Graph& g) { return canonical_search(g).order; }

std::uint64_t canonical_code(const Graph& g) { return canonical_search(g).code; }

Graph canonical_form(const Graph& g) { return g.relabel(canonical_order(g)); }

namespace {

// levels[i] holds the connected graphs on i + 1 vertices.
std::vector<std::vector<Graph>> connected_levels(int n) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw ArgumentError("built-in enumeration covers 1 <= n <= " + std::to_string(kMaxEnumerationOrder) +
                            ", got " + std::to_string(n));
    // Every connected graph has a vertex whose removal leaves it connected, so
    // extending connected graphs by one vertex with a nonempty neighbourhood
    // reaches every connected graph on one more vertex.
    std::vector<std::vector<Graph>> levels{{Graph::from_edges(1, {})}};
    for (int order = 2; order <= n; ++order) {
        std::map<std::uint64_t, Graph> seen;
        for (const auto& parent : levels.back()) {
            const int m = parent.n();
            const auto edges = parent.edges();
            for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
                auto grown = edges;
                for (Vertex v = 0; v < m; ++v)
                    if ((mask >> v) & 1U)
                        grown.emplace_back(v, m);
                const auto child = Graph::from_edges(order, grown);
                const auto code = canonical_code(child);
                if (!seen.contains(code))
                    seen.emplace(code, graph_from_code(order, code));
            }
        }
        auto& level = levels.emplace_back();
        for (auto& [code, graph] : seen)
            level.push_back(std::move(graph));
    }
    return levels;
}

} // namespace

std::vector<Graph> enumerate_connected(int n) { return std::move(connected_levels(n).back()); }

std::vector<std::string> enumerated_graph6(int lo, int hi) {
    std::vector<std::string> out;
    if (hi < lo)
        return out;
    if (lo < 1)
        throw ArgumentError("orders start at 1");
    const auto levels = connected_levels(hi);
    for (int n = lo; n <= hi; ++n)
        for (const auto& g : levels[n - 1])
            out.push_back(write_graph6(g));
    return out;
}

} // namespace pursuit
