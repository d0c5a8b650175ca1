#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sgcolor/bounds.hpp"
#include "sgcolor/coloring.hpp"
#include "sgcolor/graph.hpp"
#include "sgcolor/layers.hpp"
#include "sgcolor/oracle.hpp"

namespace sgcolor {

/// Coloring document read back by `verify`.
struct ColoringDocument {
  HalfEdgeColoring coloring;
  std::vector<VertexId> resigned_at;
  /// Edge signs recorded in the document (id -> sign), if any.
  std::vector<std::pair<EdgeId, Sign>> recorded_signs;
};

/// JSON with the palette header {t, k}, one record per edge
/// {id, u, v, sign, colors: [first, second]}, the method, its trace and the
/// resigning set. Signs are those of `result.signature`. Key order is fixed.
std::string coloring_to_json(const SignedGraph& g, const ColoringResult& result);

/// Same layout for a bare colouring (no method, empty trace).
std::string coloring_to_json(const SignedGraph& g, const Signature& sigma,
                             const HalfEdgeColoring& col);

/// Reads a coloring document against `g`; vertex names are resolved in `g`.
/// Throws ParseError on malformed JSON or tokens.
ColoringDocument parse_coloring_json(const SignedGraph& g, std::string_view text);

std::string report_to_json(const SignedGraph& g, const ChromaticReport& report);

std::string layers_to_json(const LayerDecomposition& dec);

/// Graphviz rendering: negative edges dashed, half colours as labels.
std::string coloring_to_dot(const SignedGraph& g, const Signature& sigma,
                            const HalfEdgeColoring& col);

}  // namespace sgcolor
