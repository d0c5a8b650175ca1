#include "sgcolor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "sgcolor/errors.hpp"

namespace sgcolor {

namespace {

// Colour codes: self-inverse i -> i, pair j sign + -> t + 2j, sign - -> t + 2j + 1.
class Search {
 public:
  Search(const SignedGraph& g, const Signature& sigma, unsigned t, unsigned k)
      : g_(g), sigma_(sigma), t_(t), k_(k), palette_size_(t + 2 * k),
        used_(g.vertex_count(), 0), remaining_(g.vertex_count(), 0) {
    order_ = g.edges();
    std::stable_sort(order_.begin(), order_.end(), [&](const Edge& a, const Edge& b) {
      return g.degree(a.u) + g.degree(a.v) > g.degree(b.u) + g.degree(b.v);
    });
    for (VertexId v = 0; v < g.vertex_count(); ++v) remaining_[v] = g.degree(v);
    halves_.resize(order_.size());
  }

  std::optional<HalfEdgeColoring> run() {
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (remaining_[v] > static_cast<int>(palette_size_)) return std::nullopt;
    }
    if (!assign(0, 0, 0)) return std::nullopt;
    HalfEdgeColoring col{{t_, k_}, {}};
    for (std::size_t i = 0; i < order_.size(); ++i) {
      col.colors[order_[i].id] = {decode(halves_[i].first), decode(halves_[i].second)};
    }
    return col;
  }

 private:
  unsigned code_of(unsigned pair, Sign s) const { return t_ + 2 * pair + (s == Sign::kNegative); }

  SymmetricColor decode(unsigned code) const {
    if (code < t_) return SymmetricColor::zero(code + 1);
    const unsigned p = (code - t_) / 2;
    return SymmetricColor::pair(p + 1, (code - t_) % 2 == 0 ? Sign::kPositive : Sign::kNegative);
  }

  bool fits(VertexId v) const {
    const int free_colors = static_cast<int>(palette_size_) - std::popcount(used_[v]);
    return remaining_[v] <= free_colors;
  }

  bool try_place(std::size_t i, unsigned cu, unsigned cv, unsigned zeros, unsigned pairs) {
    const Edge& e = order_[i];
    const std::uint64_t bu = std::uint64_t{1} << cu, bv = std::uint64_t{1} << cv;
    if (e.is_loop()) {
      if (cu == cv || (used_[e.u] & (bu | bv))) return false;
    } else if ((used_[e.u] & bu) || (used_[e.v] & bv)) {
      return false;
    }
    used_[e.u] |= bu;
    used_[e.v] |= bv;
    --remaining_[e.u];
    --remaining_[e.v];
    halves_[i] = {cu, cv};
    const bool ok = fits(e.u) && fits(e.v) && assign(i + 1, zeros, pairs);
    ++remaining_[e.u];
    ++remaining_[e.v];
    used_[e.u] &= ~bu;
    used_[e.v] &= ~bv;
    return ok;
  }

  // zeros / pairs: how many self-inverse colours / pairs are in use so far.
  bool assign(std::size_t i, unsigned zeros, unsigned pairs) {
    if (i == order_.size()) return true;
    const Edge& e = order_[i];
    const bool positive = sigma_[e.id] == Sign::kPositive;
    if (!e.is_loop()) {
      for (unsigned z = 0; z < std::min(zeros + 1, t_); ++z) {
        if (try_place(i, z, z, std::max(zeros, z + 1), pairs)) return true;
      }
    }
    for (unsigned p = 0; p < std::min(pairs + 1, k_); ++p) {
      const bool fresh = p == pairs;
      for (Sign a : {Sign::kPositive, Sign::kNegative}) {
        if (fresh && a == Sign::kNegative) break;
        const unsigned cu = code_of(p, a);
        const unsigned cv = code_of(p, positive ? -a : a);
        if (try_place(i, cu, cv, zeros, std::max(pairs, p + 1))) return true;
      }
    }
    return false;
  }

  const SignedGraph& g_;
  const Signature& sigma_;
  unsigned t_, k_, palette_size_;
  std::vector<Edge> order_;
  std::vector<std::uint64_t> used_;
  std::vector<int> remaining_;
  std::vector<std::pair<unsigned, unsigned>> halves_;
};

void check_limits(const SignedGraph& g, const OracleLimits& limits) {
  std::size_t active = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) active += g.degree(v) > 0;
  if (g.edge_count() > limits.max_edges || active > limits.max_vertices) {
    throw SizeLimitError("exhaustive search limited to " + std::to_string(limits.max_edges) +
                         " edges / " + std::to_string(limits.max_vertices) +
                         " vertices; instance has " + std::to_string(g.edge_count()) + " / " +
                         std::to_string(active));
  }
}

Palette palette_for_total(int total) {
  return {static_cast<std::uint32_t>(total % 2), static_cast<std::uint32_t>(total / 2)};
}

}  // namespace

Feasibility feasible(const SignedGraph& g, const Signature& sigma, unsigned t, unsigned k,
                     const OracleLimits& limits) {
  check_limits(g, limits);
  if (t + 2 * k > 64) throw SizeLimitError("palette larger than 64 colours");
  Feasibility result;
  if (g.with_signature(sigma).has_negative_loop()) {
    result.reason = "negative loop";
    return result;
  }
  if (auto witness = Search(g, sigma, t, k).run()) {
    result.feasible = true;
    result.witness = std::move(witness);
  }
  return result;
}

ChromaticReport chromatic_index(const SignedGraph& g, const Signature& sigma,
                                const OracleLimits& limits) {
  check_limits(g, limits);
  if (g.with_signature(sigma).has_negative_loop()) {
    throw DomainError("uncolorable: the graph has a negative loop");
  }
  ChromaticReport report;
  report.max_degree = degree_stats(g).max_degree;
  if (g.edge_count() == 0) return report;

  // Totals are tried in increasing order; the first feasible one is chi and
  // every smaller total of either parity has been refuted on the way.
  const int ceiling = 2 * static_cast<int>(g.edge_count()) + 1;
  std::optional<int> chi;
  std::optional<int> other;
  for (int total = report.max_degree; total <= ceiling && !other; ++total) {
    const Palette p = palette_for_total(total);
    auto f = feasible(g, sigma, p.self_inverse, p.pairs, limits);
    if (!f.feasible) continue;
    if (!chi) {
      chi = total;
      report.witness = std::move(*f.witness);
    } else if (total % 2 != *chi % 2) {
      other = total;
    }
  }
  if (!chi || !other) throw std::logic_error("chromatic_index: search did not terminate");
  report.chi = *chi;
  report.chi0 = *chi % 2 == 0 ? *chi : *other;
  report.chi1 = *chi % 2 == 1 ? *chi : *other;
  return report;
}

}  // namespace sgcolor
