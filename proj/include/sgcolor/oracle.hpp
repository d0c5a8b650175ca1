#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "sgcolor/coloring.hpp"
#include "sgcolor/graph.hpp"

namespace sgcolor {

/// Size guard for the exhaustive searches. Vertices are counted only when
/// they carry at least one edge.
struct OracleLimits {
  std::size_t max_edges = 16;
  std::size_t max_vertices = 10;
};

struct Feasibility {
  bool feasible = false;
  std::optional<HalfEdgeColoring> witness;
  std::string reason;  // set when infeasible without search (negative loop)
};

/// Decides whether (g, sigma) has an S^t_{2k} colouring by backtracking over
/// edges (descending endpoint degree sum), assigning half-colour pairs
/// directly. Colour symmetries are broken by introducing self-inverse
/// colours and pairs in index order, each new pair with a fixed orientation.
Feasibility feasible(const SignedGraph& g, const Signature& sigma, unsigned t, unsigned k,
                     const OracleLimits& limits = {});

struct ChromaticReport {
  int chi0 = 0;  // least 2k with an S^0_{2k} colouring
  int chi1 = 1;  // least 2k + 1 with an S^1_{2k} colouring
  int chi = 0;
  int max_degree = 0;
  HalfEdgeColoring witness;  // colouring attaining chi
};

/// Exact chromatic index. Throws DomainError("uncolorable ...") on a
/// negative loop and SizeLimitError above the guard.
ChromaticReport chromatic_index(const SignedGraph& g, const Signature& sigma,
                                const OracleLimits& limits = {});

}  // namespace sgcolor
