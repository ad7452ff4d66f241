#pragma once

#include "pursuit/graph.hpp"

#include <optional>
#include <vector>

namespace pursuit {

// True iff some 2m vertices induce m pairwise disjoint, pairwise non-adjacent
// edges. Exact backtracking; ArgumentError for m < 1.
bool has_induced_mk2(const Graph& g, int m);

// Smallest m >= 1 for which g is mK2-free (g has no induced mK2).
int mk2_free_level(const Graph& g);

// k must be 3, 4 or 5 (ArgumentError otherwise).
bool has_induced_cycle(const Graph& g, int k);

// Lexicographically least induced k-cycle written as c0-c1-...-c(k-1)-c0 with
// c0 its smallest vertex and c1 < c(k-1).
std::optional<std::vector<Vertex>> find_induced_cycle(const Graph& g, int k);

// True iff g contains an induced path on t >= 1 vertices.
bool has_induced_path(const Graph& g, int t);

} // namespace pursuit
