#pragma once

#include <string>
#include <vector>

#include "sgcolor/graph.hpp"

namespace sgcolor {

/// Edge set of a spanning subgraph with maximum degree <= 2.
using Layer = std::vector<EdgeId>;

struct LayerDecomposition {
  std::vector<Layer> layers;
};

struct Eulerization {
  SignedGraph graph;
  std::vector<EdgeId> dummy_edges;
};

/// Pairs odd-degree vertices in ascending id order with positive dummy edges
/// (ids from g.id_bound() upward), making every degree even.
Eulerization eulerize(const SignedGraph& g);

/// Splits E(g) into ceil(Delta/2) layers: Euler orientation of the
/// eulerized graph, bipartite out/in split, and a König edge colouring of
/// that bipartite multigraph. Deterministic.
LayerDecomposition decompose_layers(const SignedGraph& g);

/// Lists every way `dec` fails to be a layer decomposition of `g`
/// (partition, degree bound, layer count). Empty means valid.
std::vector<std::string> layer_violations(const SignedGraph& g, const LayerDecomposition& dec);

/// Proper edge colouring of a bipartite multigraph with `colors` colours by
/// alternating-path recolouring. `edges[i]` joins left vertex `.first` to
/// right vertex `.second`; returns a colour per edge. Requires `colors` to be
/// at least the maximum degree.
std::vector<int> color_bipartite_edges(std::size_t left_count, std::size_t right_count,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                       int colors);

}  // namespace sgcolor
