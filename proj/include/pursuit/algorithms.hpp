#pragma once

#include "pursuit/graph.hpp"

#include <vector>

namespace pursuit {

// Distance layers from root: layer i holds the vertices at distance exactly i.
// Vertices unreachable from root appear in no layer.
std::vector<VertexSet> bfs_layers(const Graph& g, Vertex root);

// Distances from root; -1 for unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex root);

// All-pairs distance matrix (row-major, n*n), -1 for unreachable pairs.
std::vector<int> all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

// Throws DisconnectedError on disconnected input.
int diameter(const Graph& g);

Graph complement(const Graph& g);

bool is_stable(const Graph& g, const VertexSet& a);
bool is_clique(const Graph& g, const VertexSet& a);
// Between-predicates require disjoint sets (ArgumentError otherwise).
bool complete_between(const Graph& g, const VertexSet& a, const VertexSet& b);
bool anticomplete_between(const Graph& g, const VertexSet& a, const VertexSet& b);

// Vertices with at least one neighbour in `a`.
VertexSet neighborhood_of(const Graph& g, const VertexSet& a);

// Next vertex on a shortest path from `from` to `to` (smallest index among
// tied choices); returns `from` when from == to or `to` is unreachable.
Vertex step_toward(const Graph& g, Vertex from, Vertex to);

} // namespace pursuit
