#pragma once

// Slow reference implementations used only by the tests. They deliberately
// share nothing with the library beyond Graph::adjacent / Graph::n.

#include "pursuit/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using pursuit::Graph;
using pursuit::Vertex;

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const Graph& g) {
    Matrix m(g.n(), std::vector<bool>(g.n(), false));
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j)
            m[i][j] = g.adjacent(i, j);
    return m;
}

// graph6 written straight from the format description: N(n) then the bits
// x(0,1) x(0,2) x(1,2) x(0,3) ... padded with zeros to a multiple of six,
// each group of six plus 63.
inline std::string graph6(const Graph& g) {
    const int n = g.n();
    std::string out(1, static_cast<char>(63 + n));
    std::vector<int> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            bits.push_back(g.adjacent(i, j) ? 1 : 0);
    while (bits.size() % 6 != 0)
        bits.push_back(0);
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (int b = 0; b < 6; ++b)
            value = value * 2 + bits[i + b];
        out.push_back(static_cast<char>(63 + value));
    }
    return out;
}

inline std::vector<int> bfs_distances(const Matrix& m, int root) {
    const int n = static_cast<int>(m.size());
    std::vector<int> dist(n, -1);
    std::vector<int> queue{root};
    dist[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (int w = 0; w < n; ++w)
            if (m[v][w] && dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

inline bool connected(const Graph& g) {
    auto d = bfs_distances(matrix_of(g), 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

// Floyd-Warshall.
inline int diameter(const Graph& g) {
    const int n = g.n();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            d[i][j] = i == j ? 0 : g.adjacent(i, j) ? 1 : inf;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    int best = 0;
    for (auto& row : d)
        for (int x : row)
            best = std::max(best, x);
    return best;
}

// Does some |pattern|-subset of g induce exactly `pattern`? All subsets, all bijections.
inline bool has_induced(const Graph& g, const Graph& pattern) {
    const int n = g.n();
    const int p = pattern.n();
    if (p > n)
        return false;
    std::vector<int> select(n, 0);
    std::fill(select.end() - p, select.end(), 1);
    do {
        std::vector<int> chosen;
        for (int i = 0; i < n; ++i)
            if (select[i])
                chosen.push_back(i);
        do {
            bool same = true;
            for (int a = 0; a < p && same; ++a)
                for (int b = a + 1; b < p && same; ++b)
                    same = g.adjacent(chosen[a], chosen[b]) == pattern.adjacent(a, b);
            if (same)
                return true;
        } while (std::next_permutation(chosen.begin(), chosen.end()));
    } while (std::next_permutation(select.begin(), select.end()));
    return false;
}

inline Graph disjoint_edges(int m) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < m; ++i)
        e.emplace_back(2 * i, 2 * i + 1);
    return Graph::from_edges(2 * m, e);
}

// Minimum over all n! relabellings of the upper-triangle code.
inline std::uint64_t brute_canonical(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                code = (code << 1) | (m[perm[i]][perm[j]] ? 1U : 0U);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Number of isomorphism classes of connected graphs on n vertices, by
// canonicalising every labelled graph.
inline std::size_t brute_connected_classes(int n) {
    const int pairs = n * (n - 1) / 2;
    std::set<std::uint64_t> classes;
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
        Matrix m(n, std::vector<bool>(n, false));
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if ((mask >> bit) & 1U)
                    m[i][j] = m[j][i] = true;
        auto d = bfs_distances(m, 0);
        if (std::any_of(d.begin(), d.end(), [](int x) { return x < 0; }))
            continue;
        classes.insert(brute_canonical(m));
    }
    return classes.size();
}

// Game search over ordered cop tuples. win[d] is the set of cop-to-move
// positions from which the cops capture within d phases; iterate d until the
// set stops growing.
class Minimax {
public:
    Minimax(const Graph& g, int k) : g_(g), k_(k), n_(g.n()) {
        std::vector<Vertex> t(k, 0);
        while (true) {
            tuples_.push_back(t);
            int i = k - 1;
            while (i >= 0 && t[i] == n_ - 1)
                t[i--] = 0;
            if (i < 0)
                break;
            ++t[i];
        }
        for (std::size_t i = 0; i < tuples_.size(); ++i)
            id_[tuples_[i]] = i;
        for (const auto& t0 : tuples_)
            moves_.push_back(moves_from(t0));
    }

    // Smallest d such that the cops force capture within d phases from the
    // best placement, or -1 if the robber survives forever.
    int solve() {
        std::vector<char> win(tuples_.size() * n_, 0);
        for (int d = 0;; ++d) {
            if (cops_win_from_placement(win))
                return d;
            std::vector<char> next(win.size(), 0);
            for (std::size_t c = 0; c < tuples_.size(); ++c)
                for (int r = 0; r < n_; ++r)
                    next[c * n_ + r] = wins_in_one_more(c, r, win);
            if (next == win)
                return -1;
            win = std::move(next);
        }
    }

private:
    bool on(const std::vector<Vertex>& t, int r) const { return std::find(t.begin(), t.end(), r) != t.end(); }

    std::vector<std::size_t> moves_from(const std::vector<Vertex>& t) const {
        std::vector<std::size_t> out;
        std::vector<Vertex> cur(t);
        collect(t, 0, cur, out);
        return out;
    }

    void collect(const std::vector<Vertex>& t, int i, std::vector<Vertex>& cur, std::vector<std::size_t>& out) const {
        if (i == k_) {
            out.push_back(id_.at(cur));
            return;
        }
        for (int w = 0; w < n_; ++w)
            if (w == t[i] || g_.adjacent(t[i], w)) {
                cur[i] = w;
                collect(t, i + 1, cur, out);
            }
    }

    // Capture already, or some cop move after which every robber reply is
    // either onto a cop or into a winning position.
    char wins_in_one_more(std::size_t c, int r, const std::vector<char>& win) const {
        if (on(tuples_[c], r))
            return 1;
        for (auto next : moves_[c]) {
            const auto& t = tuples_[next];
            if (on(t, r))
                return 1;
            bool all = true;
            for (int w = 0; w < n_ && all; ++w)
                if ((w == r || g_.adjacent(r, w)) && !on(t, w))
                    all = win[next * n_ + w] != 0;
            if (all)
                return 1;
        }
        return 0;
    }

    bool cops_win_from_placement(const std::vector<char>& win) const {
        for (std::size_t c = 0; c < tuples_.size(); ++c) {
            bool all = true;
            for (int r = 0; r < n_ && all; ++r)
                all = on(tuples_[c], r) || win[c * n_ + r];
            if (all)
                return true;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    int n_;
    std::vector<std::vector<Vertex>> tuples_;
    std::map<std::vector<Vertex>, std::size_t> id_;
    std::vector<std::vector<std::size_t>> moves_;
};

inline bool cops_win(const Graph& g, int k) { return Minimax(g, k).solve() >= 0; }

inline int cop_number(const Graph& g, int k_max) {
    for (int k = 1; k <= k_max; ++k)
        if (cops_win(g, k))
            return k;
    return -1;
}

} // namespace oracle
