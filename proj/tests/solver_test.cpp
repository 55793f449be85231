#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "antimagic/errors.hpp"
#include "antimagic/solver.hpp"
#include "oracles.hpp"

using namespace antimagic;

namespace {

SearchConfig quick() {
  SearchConfig cfg;
  cfg.time_budget_seconds = 60;
  return cfg;
}

}  // namespace

TEST(Solver, TriangleWithPendants) {
  const auto out = exact_chi_la(corona(cycle(3), null_graph(1)), quick());
  ASSERT_EQ(out.status, SearchStatus::Exact);
  EXPECT_EQ(out.colors, 5);
  ASSERT_TRUE(out.certificate);
  EXPECT_TRUE(verify_certificate(*out.certificate, corona(cycle(3), null_graph(1))));
}

TEST(Solver, TriangleCoronasAgreeWithOracle) {
  EXPECT_EQ(oracle::chi_la(corona(cycle(3), null_graph(1))), std::optional<std::size_t>(5));
  EXPECT_EQ(oracle::chi_la(corona(complete(3), complete(1))), std::optional<std::size_t>(5));
  EXPECT_EQ(oracle::chi_la(corona(cycle(4), null_graph(1))),
            std::optional<std::size_t>(exact_chi_la(corona(cycle(4), null_graph(1))).colors));
}

TEST(Solver, CompleteWithPendants) {
  const auto out = exact_chi_la(corona(complete(3), complete(1)), quick());
  ASSERT_EQ(out.status, SearchStatus::Exact);
  EXPECT_EQ(out.colors, 5);
}

TEST(Solver, SmallFriendshipCorona) {
  const Graph g = friendship_corona(2, 1);
  const auto out = exact_chi_la(g, quick());
  ASSERT_EQ(out.status, SearchStatus::Exact);
  EXPECT_EQ(out.colors, 7);
  EXPECT_EQ(feasible_with_k_colors(g, 6, quick()).status, SearchStatus::Infeasible);
  const auto seven = feasible_with_k_colors(g, 7, quick());
  ASSERT_EQ(seven.status, SearchStatus::Feasible);
  EXPECT_LE(seven.colors, 7);
}

TEST(Solver, MatchesPermutationOracle) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 12; ++trial) {
    const int p = std::uniform_int_distribution<int>(3, 6)(rng);
    const int q = std::uniform_int_distribution<int>(p - 1, std::min(7, p * (p - 1) / 2))(rng);
    const Graph g = oracle::random_connected(rng, p, q);
    if (g.size() < 2) continue;
    const auto expected = oracle::chi_la(g);
    const auto out = exact_chi_la(g, quick());
    if (!expected) {
      EXPECT_EQ(out.status, SearchStatus::Infeasible) << trial;
    } else {
      ASSERT_EQ(out.status, SearchStatus::Exact) << trial;
      EXPECT_EQ(static_cast<std::size_t>(out.colors), *expected) << trial;
    }
  }
}

TEST(Solver, SymmetryBreakingDoesNotChangeTheAnswer) {
  for (const Graph& g : {friendship_corona(2, 1), fan_corona(3, 1), corona(path(3), null_graph(2))}) {
    SearchConfig with = quick(), without = quick();
    without.symmetry_breaking = false;
    EXPECT_EQ(exact_chi_la(g, with).colors, exact_chi_la(g, without).colors);
  }
}

TEST(Solver, ParallelAgreesWithSequential) {
  const Graph g = fan_corona(3, 1);
  SearchConfig seq = quick(), par = quick();
  par.parallel_width = 4;
  const auto a = exact_chi_la(g, seq);
  const auto b = exact_chi_la(g, par);
  ASSERT_EQ(a.status, SearchStatus::Exact);
  EXPECT_EQ(a.colors, b.colors);
  EXPECT_EQ(b.status, SearchStatus::Exact);
  const auto c = exact_chi_la(g, par);
  EXPECT_EQ(b.certificate->labeling, c.certificate->labeling);
}

TEST(Solver, Deterministic) {
  const Graph g = friendship_corona(2, 1);
  const auto a = exact_chi_la(g, quick());
  const auto b = exact_chi_la(g, quick());
  EXPECT_EQ(a.certificate->labeling, b.certificate->labeling);
  EXPECT_EQ(a.nodes_explored, b.nodes_explored);
}

TEST(Solver, HintDoesNotChangeTheAnswer) {
  SearchConfig cfg = quick();
  cfg.upper_bound_hint = 7;
  EXPECT_EQ(exact_chi_la(friendship_corona(2, 1), cfg).colors, 7);
}

TEST(Solver, EveryEdgeOrderAgrees) {
  const Graph g = corona(cycle(4), null_graph(1));
  std::optional<int> colors;
  for (EdgeOrder order : {EdgeOrder::InputOrder, EdgeOrder::MaxDegreeFirst, EdgeOrder::ConnectedExpansion}) {
    SearchConfig cfg = quick();
    cfg.edge_order = order;
    const auto out = exact_chi_la(g, cfg);
    ASSERT_EQ(out.status, SearchStatus::Exact);
    if (colors) EXPECT_EQ(out.colors, *colors);
    colors = out.colors;
  }
}

TEST(Solver, EdgeOrderIsAPermutation) {
  const Graph g = friendship_corona(3, 2);
  for (EdgeOrder order : {EdgeOrder::InputOrder, EdgeOrder::MaxDegreeFirst, EdgeOrder::ConnectedExpansion}) {
    auto seq = search_edge_order(g, order);
    std::sort(seq.begin(), seq.end());
    for (EdgeId e = 0; e < g.size(); ++e) ASSERT_EQ(seq[e], e);
  }
}

TEST(Solver, BudgetExhaustion) {
  SearchConfig cfg;
  cfg.node_budget = 100;
  const auto out = exact_chi_la(friendship_corona(3, 1), cfg);
  EXPECT_EQ(out.status, SearchStatus::BudgetExhausted);
}

TEST(Solver, RejectsBadInput) {
  EXPECT_THROW(exact_chi_la(null_graph(3)), DomainError);
  EXPECT_THROW(exact_chi_la(path(2)), DomainError);
  EXPECT_THROW(feasible_with_k_colors(friendship_corona(2, 1), 1), DomainError);
  EXPECT_THROW(feasible_with_k_colors(friendship_corona(2, 1), 16), DomainError);
  SearchConfig bad;
  bad.parallel_width = 0;
  EXPECT_THROW(exact_chi_la(friendship_corona(2, 1), bad), DomainError);
}

TEST(Solver, AutomorphismConstraintsOnlyForFriendshipCoronas) {
  EXPECT_EQ(automorphism_order_constraints(friendship_corona(4, 2)).size(), 4u + 3u);
  EXPECT_TRUE(automorphism_order_constraints(fan_corona(4, 2)).empty());
  const Graph untagged(3, {{0, 1}, {1, 2}}, {VertexRole::vertex(1), VertexRole::vertex(2), VertexRole::vertex(3)});
  EXPECT_TRUE(automorphism_order_constraints(untagged).empty());
}

TEST(LowerBound, EmptyAssignment) {
  const Graph g = friendship_corona(3, 1);
  // Seven leaves, a heavy hub, and the leaf colors.
  const int lb = lower_bound_prune(g, {std::vector<Label>(g.size(), 0)});
  EXPECT_GE(lb, 7);
  EXPECT_LE(lb, 9);
}

TEST(LowerBound, FullyLabeledCountsColors) {
  // Weights 1, 3, 5, 3.
  EXPECT_EQ(lower_bound_prune(path(4), {{1, 2, 3}}), 3);
}

TEST(LowerBound, ClashIsPruned) {
  // Adjacent 0 and 1 both reach 7.
  const Graph g(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}},
                {VertexRole::vertex(1), VertexRole::vertex(2), VertexRole::vertex(3),
                 VertexRole::vertex(4), VertexRole::vertex(5)});
  EXPECT_EQ(lower_bound_prune(g, {{4, 3, 1, 2}}), kPruned);
  EXPECT_NE(lower_bound_prune(g, {{4, 3, 1, 0}}), kPruned);
}

TEST(LowerBound, NeverExceedsTheOptimum) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = oracle::random_connected(rng, 5, 6);
    const auto chi = oracle::chi_la(g);
    if (!chi) continue;
    EXPECT_LE(static_cast<std::size_t>(lower_bound_prune(g, {std::vector<Label>(g.size(), 0)})), *chi);
  }
}

TEST(LowerBound, RejectsMalformedState) {
  const Graph g = path(4);
  EXPECT_THROW(lower_bound_prune(g, {{1, 1, 0}}), ValidationError);
  EXPECT_THROW(lower_bound_prune(g, {{1, 0}}), ValidationError);
  EXPECT_THROW(lower_bound_prune(g, {{4, 0, 0}}), ValidationError);
}
