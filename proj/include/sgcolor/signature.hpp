#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sgcolor/graph.hpp"

namespace sgcolor {

/// Flips the sign of every edge with exactly one endpoint in `at`.
/// Loops keep their sign. Throws DomainError for unknown vertices.
Signature resign(const SignedGraph& g, const Signature& sigma, std::span<const VertexId> at);

/// Certificate for (im)balance: a vertex potential with
/// sigma(uv) = potential[u] * potential[v] on every non-loop edge, or a
/// negative circuit.
struct BalanceResult {
  bool balanced = false;
  std::vector<Sign> potential;
  std::optional<Circuit> negative_circuit;
};

/// Spanning-forest potential propagation. A negative loop is a negative
/// circuit of length one.
BalanceResult is_balanced(const SignedGraph& g, const Signature& sigma);
inline BalanceResult is_balanced(const SignedGraph& g) { return is_balanced(g, g.signature()); }

bool is_antibalanced(const SignedGraph& g, const Signature& sigma);

/// True iff the two signatures differ by a resigning.
bool signatures_equivalent(const SignedGraph& g, const Signature& a, const Signature& b);

/// A vertex set X such that resign(g, sigma, X) makes every edge of
/// `forest_edges` negative. Components are 2-coloured from their lowest
/// vertex. Throws DomainError if the edges contain a circuit or a loop.
std::vector<VertexId> resigning_set_for_negative(const SignedGraph& g, const Signature& sigma,
                                                 std::span<const EdgeId> forest_edges);

Signature make_edges_negative(const SignedGraph& g, const Signature& sigma,
                              std::span<const EdgeId> forest_edges);

/// Symmetric difference of two resigning sets (resigning at both in turn).
std::vector<VertexId> compose_resignings(std::span<const VertexId> first,
                                         std::span<const VertexId> second);

}  // namespace sgcolor
