#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sgcolor/graph.hpp"

namespace sgcolor {

/// Element of a symmetric colour set: a self-inverse colour 0_i (equal to
/// its own negation) or one of the two members +s_i / -s_i of an inverse
/// pair. Indices start at 1.
struct SymmetricColor {
  enum class Kind : std::uint8_t { kSelfInverse, kPair };

  Kind kind = Kind::kSelfInverse;
  std::uint32_t index = 1;
  Sign sign = Sign::kPositive;  // always positive for self-inverse colours

  static constexpr SymmetricColor zero(std::uint32_t i) { return {Kind::kSelfInverse, i, Sign::kPositive}; }
  static constexpr SymmetricColor pair(std::uint32_t i, Sign s) { return {Kind::kPair, i, s}; }

  constexpr bool is_self_inverse() const { return kind == Kind::kSelfInverse; }
  constexpr SymmetricColor operator-() const {
    return is_self_inverse() ? *this : pair(index, -sign);
  }

  /// `0_i`, `+s_i` or `-s_i`.
  std::string token() const;
  /// Inverse of token(); throws ParseError.
  static SymmetricColor parse(std::string_view token);

  friend constexpr auto operator<=>(const SymmetricColor&, const SymmetricColor&) = default;
};

/// The symmetric set S^t_{2k}: t self-inverse colours and k inverse pairs.
struct Palette {
  std::uint32_t self_inverse = 0;  // t
  std::uint32_t pairs = 0;         // k

  std::uint32_t size() const { return self_inverse + 2 * pairs; }
  bool contains(const SymmetricColor& c) const;
  std::vector<SymmetricColor> colors() const;

  friend bool operator==(const Palette&, const Palette&) = default;
};

/// Colours of the (first, second) half-edges of one edge.
using HalfColors = std::array<SymmetricColor, 2>;

/// Half-edge colouring: for an edge e = uw it stores the values
/// tau(h_e(u)) c(e) and tau(h_e(w)) c(e) directly, so no bidirection is kept.
/// Consistency with the signature is checked by verify_coloring.
struct HalfEdgeColoring {
  Palette palette;
  std::map<EdgeId, HalfColors> colors;

  const SymmetricColor& at(HalfEdge h) const {
    return colors.at(h.edge)[static_cast<std::size_t>(h.slot)];
  }
  /// Underlying edge colour, up to negation (the first half's colour).
  const SymmetricColor& edge_color(EdgeId e) const { return colors.at(e)[0]; }
  std::vector<EdgeId> edges() const;
  /// Edges whose colour is 0_i (self-inverse) or +-s_i (pair).
  std::vector<EdgeId> color_class(SymmetricColor::Kind kind, std::uint32_t index) const;

  friend bool operator==(const HalfEdgeColoring&, const HalfEdgeColoring&) = default;
};

struct Violation {
  enum class Kind : std::uint8_t { kUncolored, kInconsistent, kConflict };
  Kind kind;
  VertexId vertex = 0;  // meaningful for kConflict
  EdgeId edge = 0;
  EdgeId other_edge = 0;  // meaningful for kConflict
  std::string message;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

/// Checks edge consistency (positive edge: halves (a, -a); negative edge:
/// (a, a)) and properness (distinct half colours at every vertex). Throws
/// DomainError for colours outside the palette or coloured edges missing
/// from `g`.
VerificationReport verify_coloring(const SignedGraph& g, const Signature& sigma,
                                   const HalfEdgeColoring& col);

/// S^0_2 colouring of a path; the first half-edge at the walk start is +s_1.
HalfEdgeColoring color_path(const SignedGraph& g, const Signature& sigma,
                            std::span<const EdgeId> path);

/// Positive circuit: S^0_2. Negative circuit: S^1_2 with the lowest-id
/// negative edge on 0_1 and every other edge on +-s_1. Negative loops are
/// rejected with DomainError.
HalfEdgeColoring color_circuit(const SignedGraph& g, const Signature& sigma,
                               std::span<const EdgeId> circuit);

/// S^1_2 colouring of a layer, component by component: exactly one
/// negative 0_1 edge per negative circuit, +-s_1 everywhere else.
HalfEdgeColoring color_layer(const SignedGraph& g, const Signature& sigma,
                             std::span<const EdgeId> layer);

/// Component of the colour class of `edge` that contains `edge`.
std::vector<EdgeId> class_component(const SignedGraph& g, const HalfEdgeColoring& col,
                                    EdgeId edge);

/// Negates every half colour on `component`, which must be a full component
/// of one colour class (DomainError otherwise).
HalfEdgeColoring kempe_resign(const SignedGraph& g, const HalfEdgeColoring& col,
                              std::span<const EdgeId> component);

/// Palette colours that appear on no half-edge at `v`.
std::vector<SymmetricColor> missing_colors(const SignedGraph& g, const HalfEdgeColoring& col,
                                           VertexId v);

/// Union of colourings of edge-disjoint subgraphs; part j's colour indices
/// are shifted past those of parts 0..j-1.
HalfEdgeColoring combine_colorings(std::span<const HalfEdgeColoring> parts);

/// Recolours self-inverse classes 0_1/0_2, 0_3/0_4, ... with one fresh pair
/// each. Every self-inverse class must consist of negative edges.
/// Result palette: S^{t mod 2}_{2k + 2 floor(t/2)}.
HalfEdgeColoring pair_self_inverse_classes(const SignedGraph& g, const Signature& sigma,
                                           const HalfEdgeColoring& col);

}  // namespace sgcolor
