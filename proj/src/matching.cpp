#include "sgcolor/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgcolor {

namespace {

class CoverSearch {
 public:
  CoverSearch(const SignedGraph& g, std::span<const VertexId> targets)
      : g_(g), is_target_(g.vertex_count(), false), state_(g.vertex_count(), kOpen),
        incident_(g.vertex_count()) {
    for (VertexId v : targets) is_target_.at(v) = true;
    for (const Edge& e : g.edges()) {
      if (e.is_loop() || !(is_target_[e.u] || is_target_[e.v])) continue;
      incident_[e.u].push_back(e.id);
      incident_[e.v].push_back(e.id);
    }
    for (auto& list : incident_) std::sort(list.begin(), list.end());
  }

  Matching run() {
    search(0);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  enum State : std::uint8_t { kOpen, kMatched, kClosed };

  bool has_option(VertexId v) const {
    if (state_[v] != kOpen) return false;
    return std::any_of(incident_[v].begin(), incident_[v].end(),
                       [&](EdgeId id) { return state_[g_.edge(id).other(v)] == kOpen; });
  }

  int bound() const {
    int extra = 0;
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (is_target_[v] && has_option(v)) ++extra;
    }
    return weight_ + extra;
  }

  void record() {
    Matching sorted = current_;
    std::sort(sorted.begin(), sorted.end());
    if (best_weight_ < 0 || weight_ > best_weight_ ||
        (weight_ == best_weight_ && sorted < best_)) {
      best_weight_ = weight_;
      best_ = std::move(sorted);
    }
  }

  void search(VertexId from) {
    VertexId v = from;
    while (v < g_.vertex_count() && !has_option(v)) ++v;
    if (v == g_.vertex_count()) {
      record();
      return;
    }
    if (best_weight_ >= 0 && bound() < best_weight_) return;
    for (EdgeId id : incident_[v]) {
      const VertexId w = g_.edge(id).other(v);
      if (state_[w] != kOpen) continue;
      state_[v] = state_[w] = kMatched;
      const int gain = (is_target_[v] ? 1 : 0) + (is_target_[w] ? 1 : 0);
      weight_ += gain;
      current_.push_back(id);
      search(v + 1);
      current_.pop_back();
      weight_ -= gain;
      state_[v] = state_[w] = kOpen;
    }
    state_[v] = kClosed;
    search(v + 1);
    state_[v] = kOpen;
  }

  const SignedGraph& g_;
  std::vector<bool> is_target_;
  std::vector<State> state_;
  std::vector<std::vector<EdgeId>> incident_;
  Matching current_;
  Matching best_;
  int weight_ = 0;
  int best_weight_ = -1;
};

}  // namespace

Matching matching_max_cover(const SignedGraph& g, std::span<const VertexId> targets) {
  Matching m = CoverSearch(g, targets).run();
  // Uncovered targets must be pairwise non-adjacent.
  const auto covered = covered_vertices(g, m);
  std::vector<VertexId> uncovered;
  for (VertexId v : targets) {
    if (!std::binary_search(covered.begin(), covered.end(), v)) uncovered.push_back(v);
  }
  if (!is_independent(g, uncovered)) {
    throw std::logic_error("matching_max_cover: uncovered targets are not independent");
  }
  return m;
}

std::optional<Matching> matching_covering(const SignedGraph& g,
                                          std::span<const VertexId> targets) {
  Matching m = matching_max_cover(g, targets);
  const auto covered = covered_vertices(g, m);
  for (VertexId v : targets) {
    if (!std::binary_search(covered.begin(), covered.end(), v)) return std::nullopt;
  }
  return m;
}

Matching maximum_matching(const SignedGraph& g) {
  std::vector<VertexId> all(g.vertex_count());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  return matching_max_cover(g, all);
}

bool is_matching(const SignedGraph& g, std::span<const EdgeId> m) {
  std::vector<bool> used(g.vertex_count(), false);
  for (EdgeId id : m) {
    if (!g.has_edge(id)) return false;
    const Edge& e = g.edge(id);
    if (e.is_loop() || used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = true;
  }
  return true;
}

std::vector<VertexId> covered_vertices(const SignedGraph& g, std::span<const EdgeId> m) {
  std::vector<VertexId> out;
  for (EdgeId id : m) {
    out.push_back(g.edge(id).u);
    out.push_back(g.edge(id).v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace sgcolor
