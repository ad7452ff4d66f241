#pragma once

#include "pursuit/graph.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <vector>

namespace pursuit {

// Layering of a 2K2-free graph of diameter 3 from one end of a diametral path
// v0-v1-v2-v3. L[i] is the set at distance i from v0.
struct Diam3Layers {
    Vertex v0 = 0, v1 = 0, v2 = 0, v3 = 0;
    std::array<VertexSet, 4> L;
    VertexSet B;  // vertices of L2 with a neighbour in L3
    VertexSet A;  // L2 \ B
    VertexSet A1; // A ∩ N(v1)
    VertexSet A2; // A \ A1
};

// A is empty or induces C5, B is a clique complete to A, C is stable and
// anticomplete to A.
struct C4FreeStructure {
    VertexSet A;
    VertexSet B;
    VertexSet C;
};

// Partition of V \ {u, v} around the edge uv.
struct EdgePartition {
    Vertex u = 0, v = 0;
    VertexSet A; // N(u) \ N[v]
    VertexSet B; // N(v) \ N[u]
    VertexSet C; // N(u) ∩ N(v)
    VertexSet D; // non-neighbours of both
    bool d_stable = true;
};

// Five stable parts in cyclic order; consecutive parts complete, others anticomplete.
struct Blowup5 {
    std::array<VertexSet, 5> parts;
};

// Requires a connected graph of diameter exactly 3 (PreconditionError otherwise).
// Each structural claim is checked; a failure raises InvalidInputError naming it.
Diam3Layers diam3_decompose(const Graph& g);

// Requires a connected graph; InvalidInputError if the A/B/C structure cannot be certified.
C4FreeStructure c4free_decompose(const Graph& g);

// ArgumentError unless uv is an edge.
EdgePartition edge_partition(const Graph& g, Vertex u, Vertex v);

// Empty result means g is not a blow-up of C5.
std::optional<Blowup5> recognize_blowup_c5(const Graph& g);

// Independent checks of every documented invariant; return the first failure or empty.
std::optional<std::string> check_invariants(const Graph& g, const Diam3Layers& d);
std::optional<std::string> check_invariants(const Graph& g, const C4FreeStructure& s);
std::optional<std::string> check_invariants(const Graph& g, const Blowup5& b);

nlohmann::json to_json(const VertexSet& s);
nlohmann::json to_json(const Diam3Layers& d);
nlohmann::json to_json(const C4FreeStructure& s);
nlohmann::json to_json(const EdgePartition& p);
nlohmann::json to_json(const Blowup5& b);

} // namespace pursuit
