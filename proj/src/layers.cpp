#include "sgcolor/layers.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sgcolor {

Eulerization eulerize(const SignedGraph& g) {
  Eulerization out{g, {}};
  std::vector<VertexId> odd;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 != 0) odd.push_back(v);
  }
  for (std::size_t i = 0; i + 1 < odd.size(); i += 2) {
    out.dummy_edges.push_back(out.graph.add_edge(odd[i], odd[i + 1], Sign::kPositive));
  }
  return out;
}

namespace {

struct Arc {
  EdgeId id;
  VertexId tail;
  VertexId head;
};

// Every degree of `g` must be even. Walks closed trails from the lowest
// vertex that still has unused edges; each trail balances in/out degrees.
std::vector<Arc> euler_orientation(const SignedGraph& g) {
  std::vector<bool> used(g.id_bound(), false);
  std::vector<std::vector<EdgeId>> sorted(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (const HalfEdge& h : g.half_edges_at(v)) sorted[v].push_back(h.edge);
    std::sort(sorted[v].begin(), sorted[v].end());
  }
  std::vector<std::size_t> cursor(g.vertex_count(), 0);
  auto next_unused = [&](VertexId v) -> std::optional<EdgeId> {
    auto& c = cursor[v];
    while (c < sorted[v].size() && used[sorted[v][c]]) ++c;
    if (c == sorted[v].size()) return std::nullopt;
    return sorted[v][c];
  };
  std::vector<Arc> arcs;
  arcs.reserve(g.edge_count());
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    while (next_unused(start)) {
      VertexId at = start;
      while (auto id = next_unused(at)) {
        used[*id] = true;
        const VertexId to = g.edge(*id).other(at);
        arcs.push_back({*id, at, to});
        at = to;
      }
      if (at != start) throw std::logic_error("euler_orientation: odd degree vertex");
    }
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.id < b.id; });
  return arcs;
}

}  // namespace

std::vector<int> color_bipartite_edges(std::size_t left_count, std::size_t right_count,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                       int colors) {
  constexpr int kFree = -1;
  // at_left[l][c] / at_right[r][c]: edge index holding colour c, or kFree.
  std::vector<std::vector<int>> at_left(left_count, std::vector<int>(colors, kFree));
  std::vector<std::vector<int>> at_right(right_count, std::vector<int>(colors, kFree));
  std::vector<int> color(edges.size(), kFree);

  auto free_color = [&](const std::vector<int>& slots) {
    for (int c = 0; c < colors; ++c) {
      if (slots[c] == kFree) return c;
    }
    throw std::logic_error("color_bipartite_edges: degree exceeds colour count");
  };

  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    const int alpha = free_color(at_left[a]);
    if (at_right[b][alpha] != kFree) {
      const int beta = free_color(at_right[b]);
      // Alternating alpha/beta path from b; it cannot reach a.
      std::vector<int> path;
      bool on_right = true;
      std::size_t at = b;
      int want = alpha;
      while (true) {
        const int e = on_right ? at_right[at][want] : at_left[at][want];
        if (e == kFree) break;
        path.push_back(e);
        at = on_right ? edges[e].first : edges[e].second;
        on_right = !on_right;
        want = want == alpha ? beta : alpha;
      }
      for (int e : path) {
        at_left[edges[e].first][color[e]] = kFree;
        at_right[edges[e].second][color[e]] = kFree;
      }
      for (int e : path) {
        color[e] = color[e] == alpha ? beta : alpha;
        at_left[edges[e].first][color[e]] = e;
        at_right[edges[e].second][color[e]] = e;
      }
    }
    color[i] = alpha;
    at_left[a][alpha] = static_cast<int>(i);
    at_right[b][alpha] = static_cast<int>(i);
  }
  return color;
}

LayerDecomposition decompose_layers(const SignedGraph& g) {
  LayerDecomposition dec;
  if (g.edge_count() == 0) return dec;
  const Eulerization euler = eulerize(g);
  const int count = (degree_stats(euler.graph).max_degree + 1) / 2;
  const auto arcs = euler_orientation(euler.graph);

  std::vector<std::pair<std::size_t, std::size_t>> bipartite;
  bipartite.reserve(arcs.size());
  for (const Arc& arc : arcs) bipartite.push_back({arc.tail, arc.head});
  const auto color =
      color_bipartite_edges(g.vertex_count(), g.vertex_count(), bipartite, count);

  const std::set<EdgeId> dummies(euler.dummy_edges.begin(), euler.dummy_edges.end());
  dec.layers.assign(count, {});
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (!dummies.contains(arcs[i].id)) dec.layers[color[i]].push_back(arcs[i].id);
  }
  return dec;
}

std::vector<std::string> layer_violations(const SignedGraph& g, const LayerDecomposition& dec) {
  std::vector<std::string> out;
  std::vector<int> seen(g.id_bound(), 0);
  for (std::size_t i = 0; i < dec.layers.size(); ++i) {
    for (EdgeId id : dec.layers[i]) {
      if (!g.has_edge(id)) {
        out.push_back("layer " + std::to_string(i) + " holds unknown edge " + std::to_string(id));
        continue;
      }
      ++seen[id];
    }
    if (const int d = max_degree_of(g, dec.layers[i]); d > 2) {
      out.push_back("layer " + std::to_string(i) + " has a vertex of degree " + std::to_string(d));
    }
  }
  for (const Edge& e : g.edges()) {
    if (seen[e.id] != 1) {
      out.push_back("edge " + std::to_string(e.id) + " appears in " + std::to_string(seen[e.id]) +
                    " layers");
    }
  }
  const int delta = degree_stats(g).max_degree;
  const std::size_t expected = g.edge_count() == 0 ? 0 : static_cast<std::size_t>((delta + 1) / 2);
  if (dec.layers.size() != expected) {
    out.push_back("expected " + std::to_string(expected) + " layers, got " +
                  std::to_string(dec.layers.size()));
  }
  return out;
}

}  // namespace sgcolor
