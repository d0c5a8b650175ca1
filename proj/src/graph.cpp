#include "sgcolor/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sgcolor/errors.hpp"

namespace sgcolor {

VertexId SignedGraph::add_vertex(std::string_view name) {
  if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
  const auto id = static_cast<VertexId>(names_.size());
  names_.emplace_back(name);
  index_.emplace(std::string(name), id);
  incidence_.emplace_back();
  return id;
}

EdgeId SignedGraph::add_edge(VertexId u, VertexId v, Sign sign) {
  if (u >= names_.size() || v >= names_.size()) {
    throw DomainError("edge endpoint refers to an undeclared vertex");
  }
  const Edge e{id_bound(), u, v, sign};
  insert_edge(e);
  return e.id;
}

EdgeId SignedGraph::add_edge(std::string_view u, std::string_view v, Sign sign) {
  const VertexId a = add_vertex(u);
  const VertexId b = add_vertex(v);
  return add_edge(a, b, sign);
}

void SignedGraph::insert_edge(const Edge& e) {
  if (e.id >= position_.size()) position_.resize(e.id + 1, -1);
  position_[e.id] = static_cast<std::int64_t>(edges_.size());
  edges_.push_back(e);
  incidence_[e.u].push_back({e.id, Slot::kFirst});
  incidence_[e.v].push_back({e.id, Slot::kSecond});
}

bool SignedGraph::has_edge(EdgeId id) const {
  return id < position_.size() && position_[id] >= 0;
}

const Edge& SignedGraph::edge(EdgeId id) const {
  if (!has_edge(id)) throw DomainError("unknown edge id " + std::to_string(id));
  return edges_[static_cast<std::size_t>(position_[id])];
}

std::optional<VertexId> SignedGraph::find_vertex(std::string_view name) const {
  if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
  return std::nullopt;
}

VertexId SignedGraph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw DomainError("unknown vertex '" + std::string(name) + "'");
}

std::vector<EdgeId> SignedGraph::edge_ids() const {
  std::vector<EdgeId> ids;
  ids.reserve(edges_.size());
  for (const Edge& e : edges_) ids.push_back(e.id);
  return ids;
}

bool SignedGraph::has_negative_loop() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.is_loop() && e.sign == Sign::kNegative; });
}

Signature SignedGraph::signature() const {
  std::vector<Sign> signs(id_bound(), Sign::kPositive);
  for (const Edge& e : edges_) signs[e.id] = e.sign;
  return Signature(std::move(signs));
}

SignedGraph SignedGraph::with_signature(const Signature& sigma) const {
  SignedGraph g = *this;
  for (Edge& e : g.edges_) e.sign = sigma[e.id];
  return g;
}

SignedGraph SignedGraph::subgraph(std::span<const EdgeId> keep) const {
  std::vector<bool> wanted(id_bound(), false);
  for (EdgeId id : keep) {
    if (!has_edge(id)) throw DomainError("unknown edge id " + std::to_string(id));
    wanted[id] = true;
  }
  SignedGraph g;
  g.names_ = names_;
  g.index_ = index_;
  g.incidence_.assign(names_.size(), {});
  g.position_.assign(position_.size(), -1);
  for (const Edge& e : edges_) {
    if (wanted[e.id]) g.insert_edge(e);
  }
  return g;
}

SignedGraph SignedGraph::without(std::span<const EdgeId> drop) const {
  std::vector<bool> dropped(id_bound(), false);
  for (EdgeId id : drop) {
    if (id < dropped.size()) dropped[id] = true;
  }
  std::vector<EdgeId> keep;
  for (const Edge& e : edges_) {
    if (!dropped[e.id]) keep.push_back(e.id);
  }
  return subgraph(keep);
}

Signature Signature::all(const SignedGraph& g, Sign s) {
  return Signature(std::vector<Sign>(g.id_bound(), s));
}

Signature Signature::negated() const {
  std::vector<Sign> out(signs_.size());
  std::transform(signs_.begin(), signs_.end(), out.begin(), [](Sign s) { return -s; });
  return Signature(std::move(out));
}

Signature Signature::product(const Signature& other) const {
  std::vector<Sign> out(std::min(signs_.size(), other.signs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = signs_[i] * other.signs_[i];
  return Signature(std::move(out));
}

std::vector<EdgeId> Signature::negative_edges(const SignedGraph& g) const {
  std::vector<EdgeId> out;
  for (const Edge& e : g.edges()) {
    if ((*this)[e.id] == Sign::kNegative) out.push_back(e.id);
  }
  return out;
}

DegreeStats degree_stats(const SignedGraph& g) {
  DegreeStats stats;
  stats.degree.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    stats.degree[v] = g.degree(v);
    stats.max_degree = std::max(stats.max_degree, stats.degree[v]);
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (stats.degree[v] == stats.max_degree) stats.max_vertices.push_back(v);
  }
  return stats;
}

int max_degree_of(const SignedGraph& g, std::span<const EdgeId> edges) {
  std::vector<int> deg(g.vertex_count(), 0);
  int best = 0;
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    best = std::max(best, ++deg[e.u]);
    best = std::max(best, ++deg[e.v]);
  }
  return best;
}

namespace {

// Adjacency restricted to an edge subset: vertex -> (edge, far end) entries.
// Loops appear twice.
std::map<VertexId, std::vector<std::pair<EdgeId, VertexId>>> local_adjacency(
    const SignedGraph& g, std::span<const EdgeId> edges) {
  std::map<VertexId, std::vector<std::pair<EdgeId, VertexId>>> adj;
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    adj[e.u].push_back({id, e.v});
    adj[e.v].push_back({id, e.u});
  }
  for (auto& [v, list] : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::optional<Trail> walk(const SignedGraph& g, std::span<const EdgeId> edges, VertexId start,
                          bool closed) {
  auto adj = local_adjacency(g, edges);
  std::set<EdgeId> unused(edges.begin(), edges.end());
  if (unused.size() != edges.size()) return std::nullopt;  // duplicate ids
  Trail trail;
  trail.closed = closed;
  trail.vertices.push_back(start);
  VertexId at = start;
  while (!unused.empty()) {
    bool moved = false;
    for (const auto& [id, far] : adj[at]) {
      if (unused.erase(id) == 1) {
        trail.edges.push_back(id);
        trail.vertices.push_back(far);
        at = far;
        moved = true;
        break;
      }
    }
    if (!moved) return std::nullopt;
  }
  if (closed != (trail.vertices.front() == trail.vertices.back())) return std::nullopt;
  // Interior vertices must be distinct for a path or circuit.
  std::vector<VertexId> seen(trail.vertices.begin(),
                             closed ? trail.vertices.end() - 1 : trail.vertices.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return std::nullopt;
  return trail;
}

}  // namespace

std::optional<Trail> trace_component(const SignedGraph& g, std::span<const EdgeId> edges) {
  if (edges.empty()) return std::nullopt;
  auto adj = local_adjacency(g, edges);
  std::optional<VertexId> end_vertex;
  for (const auto& [v, list] : adj) {
    if (list.size() > 2) return std::nullopt;
    if (list.size() == 1 && !end_vertex) end_vertex = v;
  }
  if (end_vertex) return walk(g, edges, *end_vertex, false);
  return walk(g, edges, adj.begin()->first, true);
}

std::optional<Trail> trace_path_from(const SignedGraph& g, std::span<const EdgeId> edges,
                                     VertexId start) {
  if (edges.empty()) return std::nullopt;
  auto adj = local_adjacency(g, edges);
  for (const auto& [v, list] : adj) {
    if (list.size() > 2) return std::nullopt;
  }
  if (adj[start].size() != 1) return std::nullopt;
  return walk(g, edges, start, false);
}

std::vector<std::vector<EdgeId>> edge_components(const SignedGraph& g,
                                                 std::span<const EdgeId> edges) {
  std::vector<VertexId> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    const VertexId a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<VertexId, std::vector<EdgeId>> groups;
  for (EdgeId id : edges) groups[find(g.edge(id).u)].push_back(id);
  std::vector<std::vector<EdgeId>> out;
  for (auto& [root, ids] : groups) {
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  return out;
}

std::vector<Circuit> enumerate_circuits(const SignedGraph& g, std::size_t max_edges) {
  const std::size_t m = g.edge_count();
  if (m > max_edges || m >= 63) {
    throw SizeLimitError("circuit enumeration limited to " + std::to_string(max_edges) +
                         " edges, graph has " + std::to_string(m));
  }
  const auto& edges = g.edges();
  std::vector<Circuit> out;
  std::vector<int> deg(g.vertex_count());
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    bool ok = true;
    std::vector<EdgeId> chosen;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      chosen.push_back(edges[i].id);
      if (++deg[edges[i].u] > 2 || ++deg[edges[i].v] > 2) ok = false;
    }
    if (!ok) continue;
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d == 1; })) continue;
    auto trail = trace_component(g, chosen);
    if (!trail || !trail->closed) continue;
    trail->vertices.pop_back();
    out.push_back(Circuit{std::move(trail->vertices), std::move(trail->edges)});
  }
  return out;
}

Sign circuit_sign(const Circuit& c, const SignedGraph& g) {
  return circuit_sign(c, g, g.signature());
}

Sign circuit_sign(const Circuit& c, const SignedGraph& g, const Signature& sigma) {
  Sign s = Sign::kPositive;
  for (EdgeId id : c.edges) {
    if (!g.has_edge(id)) throw DomainError("circuit uses unknown edge id " + std::to_string(id));
    s = s * sigma[id];
  }
  return s;
}

bool is_independent(const SignedGraph& g, std::span<const VertexId> set) {
  std::vector<bool> in(g.vertex_count(), false);
  for (VertexId v : set) in.at(v) = true;
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return !e.is_loop() && in[e.u] && in[e.v]; });
}

}  // namespace sgcolor
