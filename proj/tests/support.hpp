#pragma once

// Generators, fixtures and brute-force oracles shared by the unit and
// acceptance tests. Nothing here calls into the library algorithms it is
// used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sgcolor/coloring.hpp"
#include "sgcolor/graph.hpp"

namespace sgcolor::testing {

using Rng = std::mt19937_64;

inline SignedGraph make_graph(int n, const std::vector<std::tuple<int, int, char>>& edges) {
  SignedGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (auto [u, v, s] : edges) {
    g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v),
               s == '+' ? Sign::kPositive : Sign::kNegative);
  }
  return g;
}

struct RandomSpec {
  int max_vertices = 6;
  int max_edges = 12;
  bool loops = true;
  int min_edges = 1;
};

/// Random signed multigraph; loops are always positive.
inline SignedGraph random_graph(Rng& rng, const RandomSpec& spec) {
  std::uniform_int_distribution<int> nv(1, spec.max_vertices);
  const int n = nv(rng);
  std::uniform_int_distribution<int> ne(spec.min_edges, spec.max_edges);
  const int m = ne(rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution loop_coin(0.12);
  SignedGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (int i = 0; i < m; ++i) {
    const int u = pick(rng);
    int v = pick(rng);
    if (spec.loops && loop_coin(rng)) {
      v = u;
    } else if (n > 1) {
      while (v == u) v = pick(rng);
    } else if (!spec.loops) {
      break;
    }
    const Sign s = u == v || coin(rng) ? Sign::kPositive : Sign::kNegative;
    g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v), u == v ? Sign::kPositive : s);
  }
  return g;
}

/// Random balanced signature: sigma(uv) = p(u) p(v) for a random potential p.
inline Signature random_balanced_signature(Rng& rng, const SignedGraph& g) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Sign> p(g.vertex_count());
  for (auto& s : p) s = coin(rng) ? Sign::kPositive : Sign::kNegative;
  Signature sigma = Signature::all(g, Sign::kPositive);
  for (const Edge& e : g.edges()) sigma.set(e.id, p[e.u] * p[e.v]);
  return sigma;
}

inline std::vector<VertexId> random_vertex_set(Rng& rng, const SignedGraph& g) {
  std::bernoulli_distribution coin(0.5);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (coin(rng)) out.push_back(v);
  }
  return out;
}

/// Edge signs flipped across the cut of `at`, computed without the library.
inline Signature flip_cut(const SignedGraph& g, const Signature& sigma,
                          const std::vector<VertexId>& at) {
  std::set<VertexId> in(at.begin(), at.end());
  Signature out = sigma;
  for (const Edge& e : g.edges()) {
    if (in.contains(e.u) != in.contains(e.v)) out.set(e.id, -sigma[e.id]);
  }
  return out;
}

inline int max_degree(const SignedGraph& g) {
  int d = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

/// The triangle with every side of multiplicity r, all edges negative.
inline SignedGraph fat_triangle(int r) {
  std::vector<std::tuple<int, int, char>> edges;
  for (int i = 0; i < r; ++i) {
    edges.push_back({0, 1, '-'});
    edges.push_back({1, 2, '-'});
    edges.push_back({2, 0, '-'});
  }
  return make_graph(3, edges);
}

/// Cubic graph on 10 vertices without a perfect matching: hub u joined to
/// one vertex of each of three blocks; a block is x, y, z with edges xy, xz
/// and a doubled yz, and u attaches to x. All edges positive.
inline SignedGraph cubic_without_perfect_matching() {
  std::vector<std::tuple<int, int, char>> edges;
  for (int b = 0; b < 3; ++b) {
    const int x = 1 + 3 * b, y = x + 1, z = x + 2;
    edges.push_back({0, x, '+'});
    edges.push_back({x, y, '+'});
    edges.push_back({x, z, '+'});
    edges.push_back({y, z, '+'});
    edges.push_back({y, z, '+'});
  }
  return make_graph(10, edges);
}

/// Circuit of the given length with edge i signed by bit i of `pattern`
/// (set bit = negative).
inline SignedGraph signed_circuit(int length, unsigned pattern) {
  std::vector<std::tuple<int, int, char>> edges;
  for (int i = 0; i < length; ++i) {
    edges.push_back({i, (i + 1) % length, (pattern >> i) & 1u ? '-' : '+'});
  }
  return make_graph(length, edges);
}

/// Violations of a half-edge colouring found by direct inspection of every
/// vertex and edge; empty when the colouring is proper and consistent.
inline std::vector<std::string> independent_check(const SignedGraph& g, const Signature& sigma,
                                                  const HalfEdgeColoring& col) {
  std::vector<std::string> problems;
  std::map<VertexId, std::vector<std::string>> at;
  for (const Edge& e : g.edges()) {
    auto it = col.colors.find(e.id);
    if (it == col.colors.end()) {
      problems.push_back("edge " + std::to_string(e.id) + " uncoloured");
      continue;
    }
    const std::string a = it->second[0].token(), b = it->second[1].token();
    for (const std::string& tok : {a, b}) {
      // token grammar: 0_i | +s_i | -s_i with i within the palette
      const bool zero = tok[0] == '0';
      const auto index = std::stoul(tok.substr(tok.find('_') + 1));
      const bool ok = zero ? index >= 1 && index <= col.palette.self_inverse
                           : index >= 1 && index <= col.palette.pairs;
      if (!ok) problems.push_back("edge " + std::to_string(e.id) + " colour " + tok + " outside palette");
    }
    auto negate = [](const std::string& t) {
      if (t[0] == '0') return t;
      return (t[0] == '+' ? "-" : "+") + t.substr(1);
    };
    const bool consistent = sigma[e.id] == Sign::kNegative ? a == b : b == negate(a);
    if (!consistent) problems.push_back("edge " + std::to_string(e.id) + " inconsistent");
    at[e.u].push_back(a);
    at[e.v].push_back(b);
  }
  for (auto& [v, toks] : at) {
    std::sort(toks.begin(), toks.end());
    if (std::adjacent_find(toks.begin(), toks.end()) != toks.end()) {
      problems.push_back("vertex " + std::to_string(v) + " repeats a colour");
    }
  }
  return problems;
}

/// Number of distinct colours of the palette: t + 2k.
inline int palette_total(const HalfEdgeColoring& col) {
  return static_cast<int>(col.palette.self_inverse + 2 * col.palette.pairs);
}

/// Classical chromatic index of a loopless multigraph by backtracking.
inline int classical_chromatic_index(const SignedGraph& g) {
  if (g.edge_count() == 0) return 0;
  const auto& edges = g.edges();
  for (int c = max_degree(g);; ++c) {
    std::vector<std::vector<bool>> used(g.vertex_count(), std::vector<bool>(c, false));
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
      if (i == edges.size()) return true;
      const Edge& e = edges[i];
      for (int k = 0; k < c; ++k) {
        if (used[e.u][k] || used[e.v][k]) continue;
        used[e.u][k] = used[e.v][k] = true;
        if (go(i + 1)) return true;
        used[e.u][k] = used[e.v][k] = false;
      }
      return false;
    };
    if (go(0)) return c;
  }
}

/// Maximum number of `targets` covered by a matching, by subset enumeration.
inline int brute_force_max_cover(const SignedGraph& g, const std::vector<VertexId>& targets) {
  const auto& edges = g.edges();
  std::set<VertexId> t(targets.begin(), targets.end());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    std::vector<bool> used(g.vertex_count(), false);
    bool ok = true;
    int covered = 0;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      if (!((mask >> i) & 1u)) continue;
      const Edge& e = edges[i];
      if (e.is_loop() || used[e.u] || used[e.v]) {
        ok = false;
        break;
      }
      used[e.u] = used[e.v] = true;
      covered += t.contains(e.u) + t.contains(e.v);
    }
    if (ok) best = std::max(best, covered);
  }
  return best;
}

/// Circuits of a simple graph counted by DFS from their lowest vertex;
/// each circuit is found twice (once per direction), so the count is halved.
inline int count_simple_graph_circuits(const SignedGraph& g) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  int twice = 0;
  std::vector<bool> on_path(n, false);
  std::function<void(int, int, int)> dfs = [&](int start, int v, int len) {
    for (int w = start; w < n; ++w) {
      if (!adj[v][w]) continue;
      if (w == start && len >= 3) ++twice;
      if (w > start && !on_path[w]) {
        on_path[w] = true;
        dfs(start, w, len + 1);
        on_path[w] = false;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    on_path[s] = true;
    dfs(s, s, 1);
    on_path[s] = false;
  }
  return twice / 2;
}

}  // namespace sgcolor::testing
