#include "sgcolor/coloring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sgcolor/errors.hpp"

namespace sgcolor {

std::string SymmetricColor::token() const {
  const std::string idx = std::to_string(index);
  if (is_self_inverse()) return "0_" + idx;
  return std::string(1, sign_token(sign)) + "s_" + idx;
}

SymmetricColor SymmetricColor::parse(std::string_view token) {
  auto parse_index = [&](std::string_view digits) -> std::uint32_t {
    if (digits.empty() || digits.size() > 9 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError("bad colour token '" + std::string(token) + "'");
    }
    const auto value = static_cast<std::uint32_t>(std::stoul(std::string(digits)));
    if (value == 0) throw ParseError("colour indices start at 1: '" + std::string(token) + "'");
    return value;
  };
  if (token.starts_with("0_")) return zero(parse_index(token.substr(2)));
  if (token.starts_with("+s_")) return pair(parse_index(token.substr(3)), Sign::kPositive);
  if (token.starts_with("-s_")) return pair(parse_index(token.substr(3)), Sign::kNegative);
  throw ParseError("bad colour token '" + std::string(token) + "'");
}

bool Palette::contains(const SymmetricColor& c) const {
  if (c.index == 0) return false;
  return c.is_self_inverse() ? c.index <= self_inverse : c.index <= pairs;
}

std::vector<SymmetricColor> Palette::colors() const {
  std::vector<SymmetricColor> out;
  for (std::uint32_t i = 1; i <= self_inverse; ++i) out.push_back(SymmetricColor::zero(i));
  for (std::uint32_t i = 1; i <= pairs; ++i) {
    out.push_back(SymmetricColor::pair(i, Sign::kPositive));
    out.push_back(SymmetricColor::pair(i, Sign::kNegative));
  }
  return out;
}

std::vector<EdgeId> HalfEdgeColoring::edges() const {
  std::vector<EdgeId> out;
  out.reserve(colors.size());
  for (const auto& [id, halves] : colors) out.push_back(id);
  return out;
}

std::vector<EdgeId> HalfEdgeColoring::color_class(SymmetricColor::Kind kind,
                                                  std::uint32_t index) const {
  std::vector<EdgeId> out;
  for (const auto& [id, halves] : colors) {
    if (halves[0].kind == kind && halves[0].index == index) out.push_back(id);
  }
  return out;
}

VerificationReport verify_coloring(const SignedGraph& g, const Signature& sigma,
                                   const HalfEdgeColoring& col) {
  VerificationReport report;
  for (const auto& [id, halves] : col.colors) {
    if (!g.has_edge(id)) throw DomainError("coloring names unknown edge " + std::to_string(id));
    for (const SymmetricColor& c : halves) {
      if (!col.palette.contains(c)) {
        throw DomainError("edge " + std::to_string(id) + " uses colour " + c.token() +
                          " outside the palette");
      }
    }
  }
  auto add = [&](Violation v) {
    report.valid = false;
    report.violations.push_back(std::move(v));
  };
  for (const Edge& e : g.edges()) {
    auto it = col.colors.find(e.id);
    if (it == col.colors.end()) {
      add({Violation::Kind::kUncolored, e.u, e.id, e.id,
           "edge " + std::to_string(e.id) + " is uncoloured"});
      continue;
    }
    const auto& [first, second] = it->second;
    const SymmetricColor expected = sigma[e.id] == Sign::kPositive ? -first : first;
    if (second != expected) {
      add({Violation::Kind::kInconsistent, e.u, e.id, e.id,
           "edge " + std::to_string(e.id) + " has halves " + first.token() + "/" +
               second.token() + " inconsistent with sign " + sign_token(sigma[e.id])});
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::pair<SymmetricColor, EdgeId>> seen;
    for (const HalfEdge& h : g.half_edges_at(v)) {
      auto it = col.colors.find(h.edge);
      if (it == col.colors.end()) continue;
      seen.push_back({it->second[static_cast<std::size_t>(h.slot)], h.edge});
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i) {
      if (seen[i].first == seen[i - 1].first) {
        add({Violation::Kind::kConflict, v, seen[i - 1].second, seen[i].second,
             "colour " + seen[i].first.token() + " appears twice at vertex " + g.vertex_name(v) +
                 " (edges " + std::to_string(seen[i - 1].second) + ", " +
                 std::to_string(seen[i].second) + ")"});
      }
    }
  }
  return report;
}

namespace {

// Colours the trail so that consecutive half-edges at each interior vertex
// alternate between +-s_1, starting with `first` at trail.vertices[0].
void color_trail(const SignedGraph& g, const Signature& sigma, const Trail& trail,
                 SymmetricColor first, HalfEdgeColoring& out) {
  SymmetricColor depart = first;
  for (std::size_t i = 0; i < trail.edges.size(); ++i) {
    const Edge& e = g.edge(trail.edges[i]);
    const SymmetricColor arrive = sigma[e.id] == Sign::kPositive ? -depart : depart;
    const bool forward = e.u == trail.vertices[i];
    out.colors[e.id] = forward ? HalfColors{depart, arrive} : HalfColors{arrive, depart};
    depart = -arrive;
  }
}

Sign trail_sign(const Trail& trail, const Signature& sigma) {
  Sign s = Sign::kPositive;
  for (EdgeId id : trail.edges) s = s * sigma[id];
  return s;
}

constexpr SymmetricColor kS1 = SymmetricColor::pair(1, Sign::kPositive);
constexpr SymmetricColor kZero1 = SymmetricColor::zero(1);

}  // namespace

HalfEdgeColoring color_path(const SignedGraph& g, const Signature& sigma,
                            std::span<const EdgeId> path) {
  const auto trail = trace_component(g, path);
  if (!trail || trail->closed) throw DomainError("edge set is not a path");
  HalfEdgeColoring out{{0, 1}, {}};
  color_trail(g, sigma, *trail, kS1, out);
  return out;
}

HalfEdgeColoring color_circuit(const SignedGraph& g, const Signature& sigma,
                               std::span<const EdgeId> circuit) {
  const auto trail = trace_component(g, circuit);
  if (!trail || !trail->closed) throw DomainError("edge set is not a circuit");
  if (trail_sign(*trail, sigma) == Sign::kPositive) {
    HalfEdgeColoring out{{0, 1}, {}};
    color_trail(g, sigma, *trail, kS1, out);
    const Edge& last = g.edge(trail->edges.back());
    const auto& halves = out.colors.at(last.id);
    const SymmetricColor closing = last.v == trail->vertices.front() ? halves[1] : halves[0];
    if (closing != -kS1) throw std::logic_error("color_circuit: positive circuit failed to close");
    return out;
  }
  if (trail->edges.size() == 1) throw DomainError("negative loop has no colouring");
  EdgeId zero_edge = 0;
  bool found = false;
  for (EdgeId id : circuit) {
    if (sigma[id] == Sign::kNegative && (!found || id < zero_edge)) {
      zero_edge = id;
      found = true;
    }
  }
  std::vector<EdgeId> rest;
  for (EdgeId id : circuit) {
    if (id != zero_edge) rest.push_back(id);
  }
  HalfEdgeColoring out = color_path(g, sigma, rest);
  out.palette = {1, 1};
  out.colors[zero_edge] = {kZero1, kZero1};
  return out;
}

HalfEdgeColoring color_layer(const SignedGraph& g, const Signature& sigma,
                             std::span<const EdgeId> layer) {
  if (max_degree_of(g, layer) > 2) throw DomainError("layer has a vertex of degree above 2");
  HalfEdgeColoring out{{1, 1}, {}};
  for (const auto& component : edge_components(g, layer)) {
    const auto trail = trace_component(g, component);
    if (!trail) throw std::logic_error("color_layer: component is neither path nor circuit");
    const HalfEdgeColoring part =
        trail->closed ? color_circuit(g, sigma, component) : color_path(g, sigma, component);
    out.colors.insert(part.colors.begin(), part.colors.end());
  }
  return out;
}

std::vector<EdgeId> class_component(const SignedGraph& g, const HalfEdgeColoring& col,
                                    EdgeId edge) {
  const SymmetricColor c = col.edge_color(edge);
  const auto members = col.color_class(c.kind, c.index);
  for (auto& comp : edge_components(g, members)) {
    if (std::binary_search(comp.begin(), comp.end(), edge)) return comp;
  }
  throw std::logic_error("class_component: edge missing from its own class");
}

HalfEdgeColoring kempe_resign(const SignedGraph& g, const HalfEdgeColoring& col,
                              std::span<const EdgeId> component) {
  if (component.empty()) throw DomainError("empty component");
  for (EdgeId id : component) {
    if (!col.colors.contains(id)) throw DomainError("component edge is uncoloured");
  }
  std::vector<EdgeId> given(component.begin(), component.end());
  std::sort(given.begin(), given.end());
  if (class_component(g, col, given.front()) != given) {
    throw DomainError("edge set is not a component of a single colour class");
  }
  HalfEdgeColoring out = col;
  for (EdgeId id : given) {
    auto& halves = out.colors.at(id);
    halves = {-halves[0], -halves[1]};
  }
  return out;
}

std::vector<SymmetricColor> missing_colors(const SignedGraph& g, const HalfEdgeColoring& col,
                                           VertexId v) {
  std::set<SymmetricColor> present;
  for (const HalfEdge& h : g.half_edges_at(v)) {
    if (col.colors.contains(h.edge)) present.insert(col.at(h));
  }
  std::vector<SymmetricColor> out;
  for (const SymmetricColor& c : col.palette.colors()) {
    if (!present.contains(c)) out.push_back(c);
  }
  return out;
}

HalfEdgeColoring combine_colorings(std::span<const HalfEdgeColoring> parts) {
  HalfEdgeColoring out;
  for (const HalfEdgeColoring& part : parts) {
    auto shift = [&](SymmetricColor c) {
      c.index += c.is_self_inverse() ? out.palette.self_inverse : out.palette.pairs;
      return c;
    };
    for (const auto& [id, halves] : part.colors) {
      if (out.colors.contains(id)) {
        throw DomainError("colourings overlap on edge " + std::to_string(id));
      }
      out.colors[id] = {shift(halves[0]), shift(halves[1])};
    }
    out.palette.self_inverse += part.palette.self_inverse;
    out.palette.pairs += part.palette.pairs;
  }
  return out;
}

HalfEdgeColoring pair_self_inverse_classes(const SignedGraph& g, const Signature& sigma,
                                           const HalfEdgeColoring& col) {
  const std::uint32_t t = col.palette.self_inverse;
  const std::uint32_t k = col.palette.pairs;
  for (const auto& [id, halves] : col.colors) {
    if (halves[0].is_self_inverse() && sigma[id] != Sign::kNegative) {
      throw DomainError("self-inverse class " + halves[0].token() + " contains positive edge " +
                        std::to_string(id));
    }
  }
  HalfEdgeColoring out{{t % 2, k + t / 2}, {}};
  for (const auto& [id, halves] : col.colors) {
    if (!halves[0].is_self_inverse()) {
      out.colors[id] = halves;
    } else if (t % 2 == 1 && halves[0].index == t) {
      out.colors[id] = {kZero1, kZero1};
    }
  }
  for (std::uint32_t p = 0; p < t / 2; ++p) {
    std::vector<EdgeId> merged = col.color_class(SymmetricColor::Kind::kSelfInverse, 2 * p + 1);
    const auto second = col.color_class(SymmetricColor::Kind::kSelfInverse, 2 * p + 2);
    merged.insert(merged.end(), second.begin(), second.end());
    const std::uint32_t fresh = k + p + 1;
    for (const auto& component : edge_components(g, merged)) {
      const auto trail = trace_component(g, component);
      if (!trail) throw std::logic_error("pairing: union of two matchings is not paths/circuits");
      if (trail->closed && trail->edges.size() % 2 != 0) {
        throw std::logic_error("pairing: odd circuit in a union of two matchings");
      }
      const HalfEdgeColoring part =
          trail->closed ? color_circuit(g, sigma, component) : color_path(g, sigma, component);
      for (const auto& [id, halves] : part.colors) {
        if (halves[0].is_self_inverse()) throw std::logic_error("pairing: unbalanced circuit");
        out.colors[id] = {SymmetricColor::pair(fresh, halves[0].sign),
                          SymmetricColor::pair(fresh, halves[1].sign)};
      }
    }
  }
  return out;
}

}  // namespace sgcolor
