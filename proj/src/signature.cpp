#include "sgcolor/signature.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "sgcolor/errors.hpp"

namespace sgcolor {

Signature resign(const SignedGraph& g, const Signature& sigma, std::span<const VertexId> at) {
  std::vector<bool> in(g.vertex_count(), false);
  for (VertexId v : at) {
    if (v >= g.vertex_count()) throw DomainError("resigning at unknown vertex");
    in[v] = true;
  }
  Signature out = sigma;
  for (const Edge& e : g.edges()) {
    if (in[e.u] != in[e.v]) out.set(e.id, -sigma[e.id]);
  }
  return out;
}

namespace {

constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

struct Forest {
  std::vector<VertexId> parent;
  std::vector<EdgeId> parent_edge;
  std::vector<int> depth;
  std::vector<bool> is_tree_edge;
};

// BFS forest rooted at the lowest vertex of every component.
Forest spanning_forest(const SignedGraph& g) {
  const std::size_t n = g.vertex_count();
  Forest f{std::vector<VertexId>(n), std::vector<EdgeId>(n, kNoEdge), std::vector<int>(n, -1),
           std::vector<bool>(g.id_bound(), false)};
  std::iota(f.parent.begin(), f.parent.end(), 0);
  for (VertexId root = 0; root < n; ++root) {
    if (f.depth[root] >= 0) continue;
    f.depth[root] = 0;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (const HalfEdge& h : g.half_edges_at(v)) {
        const Edge& e = g.edge(h.edge);
        const VertexId w = e.other(v);
        if (f.depth[w] >= 0) continue;
        f.depth[w] = f.depth[v] + 1;
        f.parent[w] = v;
        f.parent_edge[w] = e.id;
        f.is_tree_edge[e.id] = true;
        queue.push_back(w);
      }
    }
  }
  return f;
}

// Circuit made of the tree paths u..lca..v plus the closing edge v -> u.
Circuit fundamental_circuit(const Forest& f, const Edge& closing) {
  std::vector<VertexId> up_u, up_v;  // vertices from u (resp. v) up to, excluding, lca
  std::vector<EdgeId> edges_u, edges_v;
  VertexId a = closing.u, b = closing.v;
  while (a != b) {
    if (f.depth[a] >= f.depth[b]) {
      up_u.push_back(a);
      edges_u.push_back(f.parent_edge[a]);
      a = f.parent[a];
    } else {
      up_v.push_back(b);
      edges_v.push_back(f.parent_edge[b]);
      b = f.parent[b];
    }
  }
  Circuit c;
  // u -> ... -> lca -> ... -> v -> (closing) -> u
  c.vertices = up_u;
  c.edges = edges_u;
  c.vertices.push_back(a);
  for (std::size_t i = up_v.size(); i-- > 0;) {
    c.edges.push_back(edges_v[i]);
    c.vertices.push_back(up_v[i]);
  }
  c.edges.push_back(closing.id);
  return c;
}

}  // namespace

BalanceResult is_balanced(const SignedGraph& g, const Signature& sigma) {
  BalanceResult result;
  for (const Edge& e : g.edges()) {
    if (e.is_loop() && sigma[e.id] == Sign::kNegative) {
      result.negative_circuit = Circuit{{e.u}, {e.id}};
      return result;
    }
  }
  const Forest f = spanning_forest(g);
  std::vector<Sign> mu(g.vertex_count(), Sign::kPositive);
  // BFS order guarantees parents are assigned first when sorted by depth.
  std::vector<VertexId> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId x, VertexId y) { return f.depth[x] < f.depth[y]; });
  for (VertexId v : order) {
    if (f.parent_edge[v] != kNoEdge) mu[v] = mu[f.parent[v]] * sigma[f.parent_edge[v]];
  }
  for (const Edge& e : g.edges()) {
    if (e.is_loop() || f.is_tree_edge[e.id]) continue;
    if (sigma[e.id] != mu[e.u] * mu[e.v]) {
      result.negative_circuit = fundamental_circuit(f, e);
      return result;
    }
  }
  result.balanced = true;
  result.potential = std::move(mu);
  return result;
}

bool is_antibalanced(const SignedGraph& g, const Signature& sigma) {
  return is_balanced(g, sigma.negated()).balanced;
}

bool signatures_equivalent(const SignedGraph& g, const Signature& a, const Signature& b) {
  return is_balanced(g, a.product(b)).balanced;
}

std::vector<VertexId> resigning_set_for_negative(const SignedGraph& g, const Signature& sigma,
                                                 std::span<const EdgeId> forest_edges) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](VertexId x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
  for (EdgeId id : forest_edges) {
    const Edge& e = g.edge(id);
    if (e.is_loop()) throw DomainError("edge set contains a loop; cannot make it negative");
    const VertexId a = find(e.u), b = find(e.v);
    if (a == b) throw DomainError("edge set contains a circuit; cannot make it negative");
    uf[a] = b;
    adj[e.u].push_back({e.v, id});
    adj[e.v].push_back({e.u, id});
  }
  // flip[v]: whether v belongs to the resigning set.
  std::vector<int> flip(n, -1);
  std::vector<VertexId> out;
  for (VertexId root = 0; root < n; ++root) {
    if (flip[root] >= 0 || adj[root].empty()) continue;
    flip[root] = 0;
    std::vector<VertexId> stack{root};
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const auto& [w, id] : adj[v]) {
        if (flip[w] >= 0) continue;
        // new sign = sigma * (-1)^(flip[v] + flip[w]) must be negative
        const bool positive = sigma[id] == Sign::kPositive;
        flip[w] = flip[v] ^ (positive ? 1 : 0);
        stack.push_back(w);
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (flip[v] == 1) out.push_back(v);
  }
  return out;
}

Signature make_edges_negative(const SignedGraph& g, const Signature& sigma,
                              std::span<const EdgeId> forest_edges) {
  const auto at = resigning_set_for_negative(g, sigma, forest_edges);
  return resign(g, sigma, at);
}

std::vector<VertexId> compose_resignings(std::span<const VertexId> first,
                                         std::span<const VertexId> second) {
  std::vector<VertexId> a(first.begin(), first.end()), b(second.begin(), second.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<VertexId> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace sgcolor
