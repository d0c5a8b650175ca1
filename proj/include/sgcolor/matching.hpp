#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sgcolor/graph.hpp"

namespace sgcolor {

/// Sorted edge ids; no two share a vertex, never a loop.
using Matching = std::vector<EdgeId>;

/// Exact search for a matching maximising the number of covered vertices
/// of `targets`; ties go to the lexicographically smallest id set. Only edges
/// touching a target are considered. Branch-and-bound, meant for graphs of a
/// few dozen edges.
Matching matching_max_cover(const SignedGraph& g, std::span<const VertexId> targets);

/// A matching covering every vertex of `targets`, or nullopt if none exists.
std::optional<Matching> matching_covering(const SignedGraph& g, std::span<const VertexId> targets);

/// A maximum-cardinality matching.
Matching maximum_matching(const SignedGraph& g);

/// True iff `m` is a loop-free matching of `g`.
bool is_matching(const SignedGraph& g, std::span<const EdgeId> m);

/// Vertices covered by `m`, ascending.
std::vector<VertexId> covered_vertices(const SignedGraph& g, std::span<const EdgeId> m);

}  // namespace sgcolor
