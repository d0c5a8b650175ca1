#include <gtest/gtest.h>

#include "sgcolor/errors.hpp"
#include "sgcolor/signature.hpp"
#include "support.hpp"

using namespace sgcolor;
using namespace sgcolor::testing;

TEST(Resign, FlipsCutEdgesOnly) {
  const SignedGraph g = make_graph(3, {{0, 1, '+'}, {1, 2, '-'}, {0, 0, '+'}, {0, 2, '+'}});
  const std::vector<VertexId> at = {0};
  const Signature r = resign(g, g.signature(), at);
  EXPECT_EQ(r[0], Sign::kNegative);
  EXPECT_EQ(r[1], Sign::kNegative);
  EXPECT_EQ(r[2], Sign::kPositive);  // loop unchanged
  EXPECT_EQ(r[3], Sign::kNegative);
  EXPECT_THROW(resign(g, g.signature(), std::vector<VertexId>{9}), DomainError);
}

TEST(Resign, MatchesDirectCutFlipOnRandomGraphs) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const SignedGraph g = random_graph(rng, {});
    const auto at = random_vertex_set(rng, g);
    EXPECT_EQ(resign(g, g.signature(), at), flip_cut(g, g.signature(), at));
  }
}

TEST(Resign, PreservesCircuitSigns) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const SignedGraph g = random_graph(rng, {5, 8, true, 1});
    const auto at = random_vertex_set(rng, g);
    const Signature r = resign(g, g.signature(), at);
    for (const Circuit& c : enumerate_circuits(g)) {
      EXPECT_EQ(circuit_sign(c, g), circuit_sign(c, g, r));
    }
  }
}

TEST(Balance, NegativeTriangleWitness) {
  const SignedGraph g = make_graph(3, {{0, 1, '+'}, {1, 2, '+'}, {2, 0, '-'}});
  const BalanceResult r = is_balanced(g);
  EXPECT_FALSE(r.balanced);
  ASSERT_TRUE(r.negative_circuit);
  EXPECT_EQ(r.negative_circuit->length(), 3u);
  EXPECT_EQ(circuit_sign(*r.negative_circuit, g), Sign::kNegative);
}

TEST(Balance, NegativeLoopIsUnbalanced) {
  const SignedGraph g = make_graph(2, {{0, 1, '+'}, {1, 1, '-'}});
  const BalanceResult r = is_balanced(g);
  EXPECT_FALSE(r.balanced);
  ASSERT_TRUE(r.negative_circuit);
  EXPECT_EQ(r.negative_circuit->edges, (std::vector<EdgeId>{1}));
}

TEST(Balance, AgreesWithCircuitEnumeration) {
  Rng rng(13);
  int balanced = 0;
  for (int i = 0; i < 300; ++i) {
    const SignedGraph g = random_graph(rng, {5, 8, true, 1});
    Signature s = g.signature();
    if (i % 2) s = random_balanced_signature(rng, g);
    bool all_positive = true;
    for (const Circuit& c : enumerate_circuits(g)) all_positive &= circuit_sign(c, g, s) == Sign::kPositive;
    const BalanceResult r = is_balanced(g, s);
    ASSERT_EQ(r.balanced, all_positive);
    balanced += r.balanced;
    if (r.balanced) {
      for (const Edge& e : g.edges()) {
        if (!e.is_loop()) EXPECT_EQ(s[e.id], r.potential[e.u] * r.potential[e.v]);
      }
    } else {
      ASSERT_TRUE(r.negative_circuit);
      EXPECT_EQ(circuit_sign(*r.negative_circuit, g, s), Sign::kNegative);
    }
  }
  EXPECT_GT(balanced, 100);
}

TEST(Balance, AntibalanceIsBalanceOfNegation) {
  const SignedGraph tri = make_graph(3, {{0, 1, '-'}, {1, 2, '-'}, {2, 0, '-'}});
  EXPECT_FALSE(is_balanced(tri).balanced);
  EXPECT_TRUE(is_antibalanced(tri, tri.signature()));
}

TEST(Equivalence, ResigningsAreEquivalentAndOthersAreNot) {
  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    const SignedGraph g = random_graph(rng, {});
    const auto at = random_vertex_set(rng, g);
    EXPECT_TRUE(signatures_equivalent(g, g.signature(), flip_cut(g, g.signature(), at)));
  }
  const SignedGraph tri = make_graph(3, {{0, 1, '+'}, {1, 2, '+'}, {2, 0, '+'}});
  Signature one_negative = tri.signature();
  one_negative.set(0, Sign::kNegative);
  EXPECT_FALSE(signatures_equivalent(tri, tri.signature(), one_negative));
}

TEST(MakeNegative, ForestBecomesNegative) {
  Rng rng(15);
  for (int i = 0; i < 200; ++i) {
    const SignedGraph g = random_graph(rng, {6, 10, false, 1});
    // A spanning forest chosen greedily.
    std::vector<int> comp(g.vertex_count());
    for (VertexId v = 0; v < comp.size(); ++v) comp[v] = static_cast<int>(v);
    std::vector<EdgeId> forest;
    for (const Edge& e : g.edges()) {
      if (comp[e.u] == comp[e.v]) continue;
      const int from = comp[e.v], to = comp[e.u];
      for (int& c : comp) if (c == from) c = to;
      forest.push_back(e.id);
    }
    const auto at = resigning_set_for_negative(g, g.signature(), forest);
    const Signature r = resign(g, g.signature(), at);
    for (EdgeId id : forest) EXPECT_EQ(r[id], Sign::kNegative);
    EXPECT_EQ(make_edges_negative(g, g.signature(), forest), r);
  }
}

TEST(MakeNegative, RejectsCircuitsAndLoops) {
  const SignedGraph g = make_graph(3, {{0, 1, '+'}, {1, 2, '+'}, {2, 0, '+'}, {1, 1, '+'}});
  EXPECT_THROW(resigning_set_for_negative(g, g.signature(), std::vector<EdgeId>{0, 1, 2}),
               DomainError);
  EXPECT_THROW(resigning_set_for_negative(g, g.signature(), std::vector<EdgeId>{3}), DomainError);
}

TEST(Compose, SymmetricDifference) {
  const std::vector<VertexId> a = {0, 2, 5}, b = {2, 3};
  EXPECT_EQ(compose_resignings(a, b), (std::vector<VertexId>{0, 3, 5}));
  const SignedGraph g = make_graph(6, {{0, 1, '+'}, {2, 3, '-'}, {3, 4, '+'}, {4, 5, '-'}, {5, 0, '+'}});
  EXPECT_EQ(resign(g, resign(g, g.signature(), a), b),
            resign(g, g.signature(), compose_resignings(a, b)));
}
