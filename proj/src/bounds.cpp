#include "sgcolor/bounds.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sgcolor/errors.hpp"
#include "sgcolor/layers.hpp"
#include "sgcolor/signature.hpp"

namespace sgcolor {

namespace {

std::string ids_text(std::span<const EdgeId> ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ids[i]);
  }
  return out + "}";
}

void require_colorable(const SignedGraph& g, const Signature& sigma) {
  for (const Edge& e : g.edges()) {
    if (e.is_loop() && sigma[e.id] == Sign::kNegative) {
      throw DomainError("uncolorable: edge " + std::to_string(e.id) + " is a negative loop");
    }
  }
}

// Layers of g padded to `count`, each coloured S^1_2, combined to S^count_{2 count}.
HalfEdgeColoring layered_coloring(const SignedGraph& g, const Signature& sigma, unsigned count) {
  auto dec = decompose_layers(g);
  if (dec.layers.size() > count) throw std::logic_error("layered_coloring: too many layers");
  dec.layers.resize(count);
  std::vector<HalfEdgeColoring> parts;
  for (const Layer& layer : dec.layers) parts.push_back(color_layer(g, sigma, layer));
  return combine_colorings(parts);
}

// Balanced version: every layer circuit is positive, so each layer is S^0_2.
HalfEdgeColoring balanced_layered_coloring(const SignedGraph& g, const Signature& sigma,
                                           unsigned count) {
  auto dec = decompose_layers(g);
  if (dec.layers.size() > count) throw std::logic_error("balanced_layered_coloring: too many layers");
  dec.layers.resize(count);
  std::vector<HalfEdgeColoring> parts;
  for (const Layer& layer : dec.layers) {
    HalfEdgeColoring part = color_layer(g, sigma, layer);
    if (!part.color_class(SymmetricColor::Kind::kSelfInverse, 1).empty()) {
      throw std::logic_error("balanced layer contains a negative circuit");
    }
    part.palette = {0, 1};
    parts.push_back(std::move(part));
  }
  return combine_colorings(parts);
}

HalfEdgeColoring matching_coloring(std::span<const EdgeId> m) {
  HalfEdgeColoring out{{1, 0}, {}};
  for (EdgeId id : m) out.colors[id] = {SymmetricColor::zero(1), SymmetricColor::zero(1)};
  return out;
}

std::vector<VertexId> vertices_of_degree(const SignedGraph& g, int d) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == d) out.push_back(v);
  }
  return out;
}

struct Inserted {
  EdgeId edge;
  VertexId x;  // degree 2t + 1
  VertexId y;  // degree <= 2t
};

std::vector<std::pair<EdgeId, SymmetricColor>> halves_at(const SignedGraph& g,
                                                         const HalfEdgeColoring& col, VertexId v) {
  std::vector<std::pair<EdgeId, SymmetricColor>> out;
  for (const HalfEdge& h : g.half_edges_at(v)) {
    if (col.colors.contains(h.edge)) out.push_back({h.edge, col.at(h)});
  }
  return out;
}

// Layers of g - m plus the edges of m inserted into layers. `m` covers every
// vertex of degree 2t + 1 of `g`, is negative under `sigma`, and the other
// end of each of its edges has degree <= 2t. Returns S^t_{2t} whose
// self-inverse classes are negative.
HalfEdgeColoring insert_matching_into_layers(const SignedGraph& g, const Signature& sigma,
                                             unsigned t, std::span<const EdgeId> m,
                                             std::vector<std::string>& trace) {
  const int odd_degree = static_cast<int>(2 * t + 1);
  const SignedGraph rest = g.without(m);
  auto dec = decompose_layers(rest);
  if (dec.layers.size() > t) throw std::logic_error("claim 2: G - M needs more than t layers");
  dec.layers.resize(t);

  std::vector<std::vector<Inserted>> inserted(t);
  for (EdgeId id : m) {
    const Edge& e = g.edge(id);
    if (sigma[id] != Sign::kNegative) throw std::logic_error("claim 2: matching edge not negative");
    Inserted ins{id, e.u, e.v};
    if (g.degree(ins.x) != odd_degree) std::swap(ins.x, ins.y);
    if (g.degree(ins.x) != odd_degree || g.degree(ins.y) >= odd_degree) {
      throw std::logic_error("claim 2: matching edge does not join a max-degree vertex to a "
                             "smaller one");
    }
    std::size_t chosen = t;
    for (std::size_t i = 0; i < t && chosen == t; ++i) {
      const auto& layer = dec.layers[i];
      int at_y = 0;
      for (EdgeId lid : layer) {
        const Edge& le = rest.edge(lid);
        at_y += (le.u == ins.y) + (le.v == ins.y);
      }
      if (at_y <= 1) chosen = i;
    }
    if (chosen == t) throw std::logic_error("claim 2: no layer has room at y");
    inserted[chosen].push_back(ins);
  }

  std::vector<HalfEdgeColoring> parts;
  for (std::size_t i = 0; i < t; ++i) {
    HalfEdgeColoring col = color_layer(g, sigma, dec.layers[i]);
    // Pass 1: resign +-s on circuits where x and y miss no common pair colour.
    std::set<EdgeId> zero_edges_used;
    for (const Inserted& ins : inserted[i]) {
      const auto at_x = halves_at(g, col, ins.x);
      if (at_x.size() != 2) throw std::logic_error("claim 2: x must have two half-edges per layer");
      auto zero = std::find_if(at_x.begin(), at_x.end(),
                               [](const auto& p) { return p.second.is_self_inverse(); });
      if (zero == at_x.end()) continue;
      if (!zero_edges_used.insert(zero->first).second) {
        throw std::logic_error("claim 2: a 0-coloured edge meets two matching edges");
      }
      const auto& pair_half = zero == at_x.begin() ? at_x[1] : at_x[0];
      const SymmetricColor a = pair_half.second;
      const auto at_y = halves_at(g, col, ins.y);
      const bool clash = std::any_of(at_y.begin(), at_y.end(),
                                     [&](const auto& p) { return p.second == -a; });
      if (!clash) continue;
      const auto component = class_component(g, col, pair_half.first);
      for (EdgeId cid : component) {
        const Edge& ce = g.edge(cid);
        if (ce.u == ins.y || ce.v == ins.y) throw std::logic_error("claim 2: y lies on the flipped path");
      }
      col = kempe_resign(g, col, component);
      trace.push_back("layer " + std::to_string(i + 1) + ": resigned +-s on " +
                      ids_text(component) + " for matching edge " + std::to_string(ins.edge));
    }
    // Pass 2: colour the inserted edges.
    for (const Inserted& ins : inserted[i]) {
      const auto at_x = halves_at(g, col, ins.x);
      const auto at_y = halves_at(g, col, ins.y);
      auto present = [](const auto& halves, const SymmetricColor& c) {
        return std::any_of(halves.begin(), halves.end(),
                           [&](const auto& p) { return p.second == c; });
      };
      const SymmetricColor zero = SymmetricColor::zero(1);
      if (!present(at_x, zero) && !present(at_y, zero)) {
        col.colors[ins.edge] = {zero, zero};
        continue;
      }
      std::optional<SymmetricColor> shared;
      for (Sign s : {Sign::kPositive, Sign::kNegative}) {
        const SymmetricColor c = SymmetricColor::pair(1, s);
        if (!present(at_x, c) && !present(at_y, c)) {
          shared = c;
          break;
        }
      }
      if (!shared) throw std::logic_error("claim 2: repair left no shared missing colour");
      col.colors[ins.edge] = {*shared, *shared};
      trace.push_back("layer " + std::to_string(i + 1) + ": matching edge " +
                      std::to_string(ins.edge) + " on " + shared->token());
    }
    parts.push_back(std::move(col));
  }
  return combine_colorings(parts);
}

int max_degree(const SignedGraph& g) { return degree_stats(g).max_degree; }

}  // namespace

int chromatic_upper_bound(const SignedGraph& g) { return 3 * max_degree(g) / 2; }

KoenigCheck koenig_is_delta(const SignedGraph& g) {
  const DegreeStats stats = degree_stats(g);
  if (stats.max_degree % 2 == 0) return {true, Matching{}};
  if (auto m = matching_covering(g, stats.max_vertices)) return {true, std::move(m)};
  return {false, std::nullopt};
}

ColoringResult koenig_color(const SignedGraph& g, const Signature& sigma) {
  require_colorable(g, sigma);
  if (const auto balance = is_balanced(g, sigma); !balance.balanced) {
    throw DomainError("signed graph is not balanced");
  }
  const int delta = max_degree(g);
  const KoenigCheck check = koenig_is_delta(g);
  ColoringResult result;
  result.method = "koenig";
  result.signature = sigma;
  if (delta % 2 == 0) {
    result.coloring = balanced_layered_coloring(g, sigma, delta / 2);
    result.trace.push_back("delta " + std::to_string(delta) + " even: " +
                           std::to_string(delta / 2) + " balanced layers");
  } else if (check.is_delta) {
    const SignedGraph rest = g.without(*check.matching);
    const HalfEdgeColoring parts[] = {balanced_layered_coloring(rest, sigma, (delta - 1) / 2),
                                      matching_coloring(*check.matching)};
    result.coloring = combine_colorings(parts);
    result.trace.push_back("delta " + std::to_string(delta) + " odd: matching " +
                           ids_text(*check.matching) + " covers the max-degree vertices");
  } else {
    result.coloring = balanced_layered_coloring(g, sigma, (delta + 1) / 2);
    result.trace.push_back("delta " + std::to_string(delta) +
                           " odd: no matching covers the max-degree vertices; " +
                           std::to_string((delta + 1) / 2) + " balanced layers");
  }
  result.intermediate = result.coloring;
  return result;
}

HalfEdgeColoring claim1_color(const SignedGraph& g, const Signature& sigma, unsigned t) {
  require_colorable(g, sigma);
  if (max_degree(g) != static_cast<int>(2 * t)) throw DomainError("claim 1 needs Delta = 2t");
  return layered_coloring(g, sigma, t);
}

IntermediateColoring claim2_color(const SignedGraph& g, const Signature& sigma, unsigned t) {
  require_colorable(g, sigma);
  const DegreeStats stats = degree_stats(g);
  if (t < 1 || stats.max_degree != static_cast<int>(2 * t + 1)) {
    throw DomainError("claim 2 needs Delta = 2t + 1 with t >= 1");
  }
  if (!is_independent(g, stats.max_vertices)) {
    throw DomainError("claim 2 needs independent maximum-degree vertices");
  }
  const auto m = matching_covering(g, stats.max_vertices);
  if (!m) throw ConstructionBlocked("no matching covers the maximum-degree vertices");
  IntermediateColoring out;
  out.resigned_at = resigning_set_for_negative(g, sigma, *m);
  out.signature = resign(g, sigma, out.resigned_at);
  out.trace.push_back("claim 2: matching " + ids_text(*m) + " resigned negative");
  out.coloring = insert_matching_into_layers(g, out.signature, t, *m, out.trace);
  return out;
}

IntermediateColoring claim3_color(const SignedGraph& g, const Signature& sigma, unsigned t) {
  require_colorable(g, sigma);
  const DegreeStats stats = degree_stats(g);
  const int odd_degree = static_cast<int>(2 * t + 1);
  if (stats.max_degree != odd_degree) throw DomainError("claim 3 needs Delta = 2t + 1");
  IntermediateColoring out;

  if (auto m = matching_covering(g, stats.max_vertices)) {
    out.resigned_at = resigning_set_for_negative(g, sigma, *m);
    out.signature = resign(g, sigma, out.resigned_at);
    out.trace.push_back("claim 3 case 1: matching " + ids_text(*m) + " covers V_delta");
    const HalfEdgeColoring parts[] = {layered_coloring(g.without(*m), out.signature, t),
                                      matching_coloring(*m)};
    out.coloring = combine_colorings(parts);
    return out;
  }

  const Matching m1 = matching_max_cover(g, stats.max_vertices);
  const SignedGraph h1 = g.without(m1);
  const auto still_odd = vertices_of_degree(h1, odd_degree);
  if (!is_independent(h1, still_odd)) {
    throw std::logic_error("claim 3: uncovered max-degree vertices are adjacent");
  }
  const auto m2 = matching_covering(h1, still_odd);
  if (!m2) throw ConstructionBlocked("no matching of G - M1 covers its maximum-degree vertices");
  std::vector<EdgeId> forest = m1;
  forest.insert(forest.end(), m2->begin(), m2->end());
  out.resigned_at = resigning_set_for_negative(g, sigma, forest);
  out.signature = resign(g, sigma, out.resigned_at);
  out.trace.push_back("claim 3 case 2: M1 = " + ids_text(m1) + ", M2 = " + ids_text(*m2));

  HalfEdgeColoring rest;
  if (max_degree(h1) == odd_degree && t >= 1) {
    rest = insert_matching_into_layers(h1, out.signature, t, *m2, out.trace);
  } else {
    rest = layered_coloring(h1, out.signature, t);
  }
  const HalfEdgeColoring parts[] = {std::move(rest), matching_coloring(m1)};
  out.coloring = combine_colorings(parts);
  return out;
}

ColoringResult shannon_color(const SignedGraph& g, const Signature& sigma,
                             const OracleLimits& fallback_limits) {
  require_colorable(g, sigma);
  const DegreeStats stats = degree_stats(g);
  const int delta = stats.max_degree;
  const int bound = 3 * delta / 2;
  ColoringResult result;
  result.method = "shannon";

  IntermediateColoring inter;
  bool searched = false;
  if (delta % 2 == 0) {
    const unsigned t = static_cast<unsigned>(delta / 2);
    inter.coloring = claim1_color(g, sigma, t);
    inter.signature = sigma;
    inter.trace.push_back("delta " + std::to_string(delta) + " even: claim 1");
  } else {
    const unsigned t = static_cast<unsigned>(delta / 2);
    try {
      if (t >= 1 && is_independent(g, stats.max_vertices) &&
          matching_covering(g, stats.max_vertices)) {
        inter = claim2_color(g, sigma, t);
      } else {
        inter = claim3_color(g, sigma, t);
      }
    } catch (const ConstructionBlocked& blocked) {
      inter = {};
      inter.signature = sigma;
      inter.trace.push_back(std::string("matching step blocked (") + blocked.what() +
                            "); exhaustive search within the bound");
      for (int total : {bound, bound - 1}) {
        const auto f = feasible(g, sigma, static_cast<unsigned>(total % 2),
                                static_cast<unsigned>(total / 2), fallback_limits);
        if (f.feasible) {
          inter.coloring = *f.witness;
          searched = true;
          break;
        }
      }
      if (!searched) throw std::logic_error("no colouring within floor(3 Delta / 2) found");
    }
  }

  result.intermediate = inter.coloring;
  result.signature = inter.signature;
  result.resigned_at = inter.resigned_at;
  result.trace = inter.trace;
  if (searched) {
    result.coloring = inter.coloring;
  } else {
    result.coloring = pair_self_inverse_classes(g, inter.signature, inter.coloring);
    result.trace.push_back("paired self-inverse classes: S^" +
                           std::to_string(inter.coloring.palette.self_inverse) + "_" +
                           std::to_string(2 * inter.coloring.palette.pairs) + " -> S^" +
                           std::to_string(result.coloring.palette.self_inverse) + "_" +
                           std::to_string(2 * result.coloring.palette.pairs));
  }
  if (static_cast<int>(result.coloring.palette.size()) > bound) {
    throw std::logic_error("shannon_color exceeded floor(3 Delta / 2)");
  }
  if (!verify_coloring(g, result.signature, result.coloring).valid) {
    throw std::logic_error("shannon_color produced an invalid colouring");
  }
  return result;
}

}  // namespace sgcolor
