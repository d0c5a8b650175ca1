#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgcolor/coloring.hpp"
#include "sgcolor/errors.hpp"
#include "sgcolor/graph.hpp"
#include "sgcolor/matching.hpp"
#include "sgcolor/oracle.hpp"

namespace sgcolor {

/// Output of the König and Shannon pipelines. The colouring is valid for
/// `signature`, which equals the input signature resigned at `resigned_at`.
struct ColoringResult {
  std::string method;
  HalfEdgeColoring coloring;
  /// The colouring before self-inverse classes were paired (Shannon only;
  /// equal to `coloring` for König).
  HalfEdgeColoring intermediate;
  Signature signature;
  std::vector<VertexId> resigned_at;
  std::vector<std::string> trace;
};

/// Colouring of a graph with a resigning that produced its signature.
struct IntermediateColoring {
  HalfEdgeColoring coloring;
  Signature signature;
  std::vector<VertexId> resigned_at;
  std::vector<std::string> trace;
};

struct KoenigCheck {
  bool is_delta = false;
  /// Witness matching M with Delta(G - M) even (empty when Delta is even).
  std::optional<Matching> matching;
};

/// Whether a balanced signature on `g` has chromatic index exactly Delta.
KoenigCheck koenig_is_delta(const SignedGraph& g);

/// Delta colours when koenig_is_delta holds, Delta + 1 otherwise. Requires a
/// balanced signature. An edgeless graph gets the empty colouring.
ColoringResult koenig_color(const SignedGraph& g, const Signature& sigma);

/// At most floor(3 Delta / 2) colours for any signature without negative
/// loops. Dispatches on the parity of Delta and the structure of the
/// maximum-degree vertices, then pairs the self-inverse classes.
ColoringResult shannon_color(const SignedGraph& g, const Signature& sigma,
                             const OracleLimits& fallback_limits = {});

/// Delta(g) == 2t: S^t_{2t} colouring whose self-inverse classes are negative.
HalfEdgeColoring claim1_color(const SignedGraph& g, const Signature& sigma, unsigned t);

/// Delta(g) == 2t + 1, t >= 1, maximum-degree vertices independent: resigns
/// a covering matching negative and returns an S^t_{2t} colouring.
IntermediateColoring claim2_color(const SignedGraph& g, const Signature& sigma, unsigned t);

/// Delta(g) == 2t + 1: S^{t+1}_{2t} colouring with negative self-inverse
/// classes, built from one or two matchings.
IntermediateColoring claim3_color(const SignedGraph& g, const Signature& sigma, unsigned t);

/// floor(3 Delta / 2).
int chromatic_upper_bound(const SignedGraph& g);

/// Thrown when a matching that the construction needs does not exist. This
/// happens only when a maximum-degree vertex carries a loop.
class ConstructionBlocked : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace sgcolor
