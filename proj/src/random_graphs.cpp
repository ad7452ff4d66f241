#include "pursuit/algorithms.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/harness.hpp"
#include "pursuit/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace pursuit {

namespace {

// Clique of random size; every other vertex joins a random nonempty subset of
// it. Split graphs are (2K2, C4, C5)-free and this one is connected.
Graph sample_split(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> clique_size(1, n);
    const int s = clique_size(rng);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < s; ++i)
        for (Vertex j = i + 1; j < s; ++j)
            edges.emplace_back(i, j);
    std::bernoulli_distribution coin(0.5);
    std::uniform_int_distribution<Vertex> any_clique(0, s - 1);
    for (Vertex v = s; v < n; ++v) {
        bool attached = false;
        for (Vertex c = 0; c < s; ++c)
            if (coin(rng)) {
                edges.emplace_back(c, v);
                attached = true;
            }
        if (!attached)
            edges.emplace_back(any_clique(rng), v);
    }
    std::vector<Vertex> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    std::shuffle(labels.begin(), labels.end(), rng);
    for (auto& [a, b] : edges) {
        a = labels[a];
        b = labels[b];
    }
    return Graph::from_edges(n, edges);
}

} // namespace

Graph random_2k2free(int n, std::uint64_t seed, int max_attempts) {
    if (n < 1)
        throw ArgumentError("n must be positive");
    std::mt19937_64 rng(seed);
    if (std::bernoulli_distribution(0.5)(rng))
        return sample_split(n, rng);

    double p = 0.5;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j)
                if (unit(rng) < p)
                    edges.emplace_back(i, j);
        auto g = Graph::from_edges(n, edges);
        if (is_connected(g) && !has_induced_mk2(g, 2))
            return g;
        p = std::min(0.98, p + 0.005);
    }
    throw ResourceError("no connected 2K2-free sample after " + std::to_string(max_attempts) + " attempts",
                        static_cast<std::uint64_t>(max_attempts));
}

} // namespace pursuit
