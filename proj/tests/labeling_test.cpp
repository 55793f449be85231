#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "antimagic/errors.hpp"
#include "antimagic/labeling.hpp"
#include "oracles.hpp"

using namespace antimagic;

namespace {

std::vector<Label> identity(std::size_t q) {
  std::vector<Label> l(q);
  std::iota(l.begin(), l.end(), 1);
  return l;
}

}  // namespace

// Every label is counted at both endpoints.
TEST(Labeling, WeightConservationFuzz) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    const int m = std::uniform_int_distribution<int>(1, 4)(rng);
    const Graph g = trial % 2 ? friendship_corona(n, m) : fan_corona(n, m);
    auto labels = identity(g.size());
    std::shuffle(labels.begin(), labels.end(), rng);
    const WeightMap w = weights(g, EdgeLabeling(labels));
    const auto q = static_cast<Weight>(g.size());
    ASSERT_EQ(w.total(), q * (q + 1));
    ASSERT_EQ(std::vector<Weight>(w.values().begin(), w.values().end()),
              oracle::weights(g, labels));
  }
}

TEST(Labeling, SingleEdgeIsNeverLocalAntimagic) {
  const Verdict v = is_local_antimagic(path(2), EdgeLabeling({1}));
  EXPECT_FALSE(v.local_antimagic());
  EXPECT_EQ(v.violation, std::optional<EdgeId>(0));
}

TEST(Labeling, LowestViolatingEdgeIsReported) {
  // Weights 7, 7, 3, 1, 2.
  const Graph g(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}},
                {VertexRole::vertex(1), VertexRole::vertex(2), VertexRole::vertex(3),
                 VertexRole::vertex(4), VertexRole::vertex(5)});
  EXPECT_EQ(is_local_antimagic(g, EdgeLabeling({4, 3, 1, 2})).violation, std::optional<EdgeId>(0));
  EXPECT_TRUE(is_local_antimagic(path(3), EdgeLabeling({1, 2})).local_antimagic());
}

TEST(Labeling, StarUsesCenterPlusLeaves) {
  const Graph g = corona(complete(1), null_graph(4));
  const EdgeLabeling f({3, 1, 4, 2});
  EXPECT_TRUE(is_local_antimagic(g, f).local_antimagic());
  EXPECT_EQ(color_count(g, f), 5u);
  EXPECT_EQ(weights(g, f)[0], 10);
}

TEST(Labeling, ValidateNamesTheProblem) {
  EXPECT_NO_THROW(EdgeLabeling({2, 1, 3}).validate(3));
  EXPECT_THROW(EdgeLabeling({1, 2}).validate(3), ValidationError);
  EXPECT_THROW(EdgeLabeling({1, 2, 4}).validate(3), ValidationError);
  try {
    EdgeLabeling({1, 1, 3}).validate(3);
    FAIL();
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find('2'), std::string::npos) << what;
  }
  EXPECT_FALSE(EdgeLabeling({0, 1, 2}).is_bijective(3));
}

TEST(Labeling, ColorSetIsSortedDistinct) {
  const WeightMap w({5, 3, 5, 1});
  EXPECT_EQ(w.color_set(), (std::vector<Weight>{1, 3, 5}));
  EXPECT_EQ(w.distinct_count(), 3u);
}

TEST(Labeling, CertificateRoundTripAndMutation) {
  const Graph g = corona(cycle(3), null_graph(1));
  // Cycle edges then pendants; weights 10, 8, 9 on the cycle.
  const EdgeLabeling f({1, 2, 3, 6, 5, 4});
  Certificate c = make_certificate(g, f);
  ASSERT_TRUE(c.verdict.local_antimagic());
  EXPECT_TRUE(verify_certificate(c, g));

  Certificate wrong_count = c;
  wrong_count.color_count += 1;
  EXPECT_FALSE(verify_certificate(wrong_count, g));

  Certificate swapped = c;
  auto labels = std::vector<Label>(c.labeling.labels().begin(), c.labeling.labels().end());
  std::swap(labels[0], labels[3]);
  swapped.labeling = EdgeLabeling(labels);
  EXPECT_FALSE(verify_certificate(swapped, g));

  Certificate duplicated = c;
  labels[1] = labels[0];
  duplicated.labeling = EdgeLabeling(labels);
  EXPECT_FALSE(verify_certificate(duplicated, g));

  EXPECT_THROW(verify_certificate(c, path(7)), WrongGraphError);
}

TEST(Labeling, CertificateAgreesWithOracle) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_connected(rng, 6, 8);
    auto labels = identity(g.size());
    std::shuffle(labels.begin(), labels.end(), rng);
    const Certificate c = make_certificate(g, EdgeLabeling(labels));
    EXPECT_EQ(c.verdict.local_antimagic(), oracle::local_antimagic(g, labels));
    EXPECT_EQ(c.color_count, oracle::colors(g, labels));
  }
}
