#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sgcolor {

enum class Sign : std::int8_t { kNegative = -1, kPositive = 1 };

constexpr Sign operator-(Sign s) {
  return s == Sign::kPositive ? Sign::kNegative : Sign::kPositive;
}
constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::kPositive : Sign::kNegative;
}
constexpr char sign_token(Sign s) { return s == Sign::kPositive ? '+' : '-'; }

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Which endpoint record of an edge a half-edge belongs to.
enum class Slot : std::uint8_t { kFirst = 0, kSecond = 1 };

struct HalfEdge {
  EdgeId edge = 0;
  Slot slot = Slot::kFirst;

  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

struct Edge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;
  Sign sign = Sign::kPositive;

  bool is_loop() const { return u == v; }
  VertexId endpoint(Slot s) const { return s == Slot::kFirst ? u : v; }
  VertexId other(VertexId w) const { return w == u ? v : u; }
};

class Signature;

/// A multigraph with stable edge ids and a sign on every edge. Loops and
/// parallel edges are allowed. Subgraphs keep the host's vertex set and
/// edge ids.
class SignedGraph {
 public:
  SignedGraph() = default;

  /// Returns the id of `name`, declaring it if it is new.
  VertexId add_vertex(std::string_view name);
  /// Appends an edge with id `id_bound()`.
  EdgeId add_edge(VertexId u, VertexId v, Sign sign);
  EdgeId add_edge(std::string_view u, std::string_view v, Sign sign);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  /// One past the largest edge id; sizes per-edge lookup tables.
  EdgeId id_bound() const { return static_cast<EdgeId>(position_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(EdgeId id) const;
  const Edge& edge(EdgeId id) const;

  const std::string& vertex_name(VertexId v) const { return names_.at(v); }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  /// Throws DomainError for unknown names.
  VertexId vertex(std::string_view name) const;

  /// Half-edges at `v`; a loop contributes both of its half-edges.
  std::span<const HalfEdge> half_edges_at(VertexId v) const { return incidence_.at(v); }
  int degree(VertexId v) const { return static_cast<int>(incidence_.at(v).size()); }
  VertexId vertex_of(HalfEdge h) const { return edge(h.edge).endpoint(h.slot); }

  std::vector<EdgeId> edge_ids() const;
  bool has_negative_loop() const;

  Signature signature() const;
  SignedGraph with_signature(const Signature& sigma) const;

  /// Same vertex set, only the listed edges (ids preserved).
  SignedGraph subgraph(std::span<const EdgeId> keep) const;
  /// Same vertex set, every edge except the listed ones.
  SignedGraph without(std::span<const EdgeId> drop) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> position_;  // edge id -> index into edges_, -1 if absent
  std::vector<std::vector<HalfEdge>> incidence_;

  void insert_edge(const Edge& e);
};

/// Edge signs indexed by edge id. Replaceable without touching the graph.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Sign> signs) : signs_(std::move(signs)) {}
  static Signature all(const SignedGraph& g, Sign s);

  Sign operator[](EdgeId e) const { return signs_.at(e); }
  void set(EdgeId e, Sign s) { signs_.at(e) = s; }
  std::size_t size() const { return signs_.size(); }
  bool covers(const SignedGraph& g) const { return signs_.size() >= g.id_bound(); }

  /// Every sign flipped.
  Signature negated() const;
  /// e -> this[e] * other[e].
  Signature product(const Signature& other) const;
  std::vector<EdgeId> negative_edges(const SignedGraph& g) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<Sign> signs_;
};

struct DegreeStats {
  std::vector<int> degree;
  int max_degree = 0;
  std::vector<VertexId> max_vertices;
};

DegreeStats degree_stats(const SignedGraph& g);

/// Maximum degree of the subgraph spanned by `edges`.
int max_degree_of(const SignedGraph& g, std::span<const EdgeId> edges);

/// Closed trail through distinct vertices: step i leaves `vertex[i]` along
/// `edge[i]` and arrives at `vertex[i + 1]` (cyclically).
struct Circuit {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
};

/// Ordered traversal of a path or circuit component.
struct Trail {
  std::vector<VertexId> vertices;  // edges.size() + 1 entries; front == back if closed
  std::vector<EdgeId> edges;
  bool closed = false;
};

inline constexpr std::size_t kDefaultCircuitEdgeLimit = 16;

/// Every circuit once up to rotation and reflection. Exponential; guarded by
/// `max_edges` (SizeLimitError beyond it).
std::vector<Circuit> enumerate_circuits(const SignedGraph& g,
                                        std::size_t max_edges = kDefaultCircuitEdgeLimit);

Sign circuit_sign(const Circuit& c, const SignedGraph& g);
Sign circuit_sign(const Circuit& c, const SignedGraph& g, const Signature& sigma);

/// Connected components of the subgraph spanned by `edges`, each sorted by id.
std::vector<std::vector<EdgeId>> edge_components(const SignedGraph& g,
                                                 std::span<const EdgeId> edges);

/// Orders a component whose vertices all have degree <= 2 into a trail.
/// Paths start at their lowest-id end vertex; circuits at their lowest-id
/// vertex, leaving along the lowest-id edge. Returns nullopt when `edges` is
/// not a single path or circuit.
std::optional<Trail> trace_component(const SignedGraph& g, std::span<const EdgeId> edges);

/// Orders a path that must start at `start` (one of its ends).
std::optional<Trail> trace_path_from(const SignedGraph& g, std::span<const EdgeId> edges,
                                     VertexId start);

/// No non-loop edge of `g` joins two vertices of `set`.
bool is_independent(const SignedGraph& g, std::span<const VertexId> set);

}  // namespace sgcolor
