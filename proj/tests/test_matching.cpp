#include <gtest/gtest.h>

#include "sgcolor/matching.hpp"
#include "support.hpp"

using namespace sgcolor;
using namespace sgcolor::testing;

namespace {

int covered_targets(const SignedGraph& g, const Matching& m, const std::vector<VertexId>& t) {
  const auto covered = covered_vertices(g, m);
  int n = 0;
  for (VertexId v : t) n += std::binary_search(covered.begin(), covered.end(), v);
  return n;
}

}  // namespace

TEST(Matching, MaxCoverMatchesBruteForce) {
  Rng rng(41);
  for (int i = 0; i < 400; ++i) {
    const SignedGraph g = random_graph(rng, {7, 12, true, 0});
    const auto targets = random_vertex_set(rng, g);
    const Matching m = matching_max_cover(g, targets);
    EXPECT_TRUE(is_matching(g, m));
    EXPECT_TRUE(std::is_sorted(m.begin(), m.end()));
    EXPECT_EQ(covered_targets(g, m, targets), brute_force_max_cover(g, targets));
  }
}

TEST(Matching, CoveringExistsExactlyWhenBruteForceCoversAll) {
  Rng rng(42);
  for (int i = 0; i < 400; ++i) {
    const SignedGraph g = random_graph(rng, {6, 10, true, 0});
    const auto targets = degree_stats(g).max_vertices;
    const auto m = matching_covering(g, targets);
    const bool all = brute_force_max_cover(g, targets) == static_cast<int>(targets.size());
    EXPECT_EQ(m.has_value(), all);
    if (m) EXPECT_EQ(covered_targets(g, *m, targets), static_cast<int>(targets.size()));
  }
}

TEST(Matching, MaximumCardinality) {
  Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    const SignedGraph g = random_graph(rng, {7, 12, true, 0});
    std::vector<VertexId> all(g.vertex_count());
    for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
    EXPECT_EQ(2 * static_cast<int>(maximum_matching(g).size()), brute_force_max_cover(g, all));
  }
}

TEST(Matching, TiesGoToSmallestIds) {
  // A 4-circuit: {0, 2} and {1, 3} both cover everything.
  const SignedGraph g = make_graph(4, {{0, 1, '+'}, {1, 2, '+'}, {2, 3, '+'}, {3, 0, '+'}});
  const std::vector<VertexId> all = {0, 1, 2, 3};
  EXPECT_EQ(matching_max_cover(g, all), (Matching{0, 2}));
}

TEST(Matching, LoopsNeverMatch) {
  const SignedGraph g = make_graph(2, {{0, 0, '+'}, {1, 1, '+'}});
  const std::vector<VertexId> all = {0, 1};
  EXPECT_TRUE(matching_max_cover(g, all).empty());
  EXPECT_FALSE(matching_covering(g, all).has_value());
  EXPECT_FALSE(is_matching(g, std::vector<EdgeId>{0}));
}

TEST(Matching, CubicGraphWithoutPerfectMatching) {
  const SignedGraph g = cubic_without_perfect_matching();
  const auto targets = degree_stats(g).max_vertices;
  EXPECT_EQ(targets.size(), 10u);
  EXPECT_FALSE(matching_covering(g, targets).has_value());
  EXPECT_EQ(maximum_matching(g).size(), 4u);
}
