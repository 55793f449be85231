#include <gtest/gtest.h>

#include <map>

#include "antimagic/bounds.hpp"
#include "antimagic/errors.hpp"
#include "oracles.hpp"

using namespace antimagic;

namespace {

std::int64_t friendship_q(std::int64_t n, std::int64_t m) { return 3 * n + m * (2 * n + 1); }
std::int64_t fan_q(std::int64_t n, std::int64_t m) { return 2 * n - 1 + m * (n + 1); }

const InequalityWitness& find(const std::vector<InequalityWitness>& ws, std::string_view name,
                              std::optional<int> r = std::nullopt) {
  for (const auto& w : ws)
    if (w.name == name && w.r == r) return w;
  throw std::runtime_error("missing witness " + std::string(name));
}

}  // namespace

TEST(Bounds, KnownValues) {
  EXPECT_EQ(lb_friendship(3, 1), 9);
  EXPECT_EQ(lb_friendship(3, 2), 17);
  EXPECT_EQ(lb_fan(3, 1), 7);
  EXPECT_EQ(lb_fan(5, 4), 27);
  EXPECT_THROW(lb_fan(2, 1), DomainError);
  EXPECT_EQ(known_exact_c3_corona(1), 5);
  EXPECT_EQ(known_exact_c3_corona(4), 15);
  EXPECT_EQ(known_exact_kn_k1(3), 5);
  EXPECT_EQ(known_exact_kn_k1(10), 19);
  for (int k = 0; k <= 300; ++k) ASSERT_EQ(triangular(k), oracle::triangular(k));
}

TEST(Bounds, FanAtTwoPointsAtTheTriangle) {
  try {
    lb_fan(2, 3);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("C3"), std::string::npos) << e.what();
  }
}

// Witness sides recomputed from raw triangular sums.
TEST(Bounds, Lemma21WitnessesAgainstRawSums) {
  for (int n = 2; n <= 30; ++n)
    for (int m = 1; m <= 30; ++m) {
      const auto ws = sweep_lemma21(n, m);
      const std::int64_t q = friendship_q(n, m);
      const auto& a = find(ws, kL21HubWeight);
      ASSERT_EQ(a.difference(), 2 * oracle::triangular(2 * n + m) - 2 * q);
      ASSERT_EQ(a.difference(), l21_hub_difference_closed(n, m));
      const auto& b = find(ws, kL21Case3);
      ASSERT_EQ(b.difference(), 2 * oracle::triangular(n * (2 * m + 3)) - 2 * n * (2 * q - 1));
      ASSERT_EQ(b.difference(), l21_case3_difference_closed(n, m));
      const auto& c = find(ws, kL21Case2);
      ASSERT_EQ(c.difference(), oracle::triangular(n * (m + 2)) - n * q);
      ASSERT_EQ(2 * c.difference(), l21_case2_twice_difference_closed(n, m));
    }
}

TEST(Bounds, Lemma22WitnessesAgainstRawSums) {
  for (int n = 3; n <= 25; ++n)
    for (int m = 1; m <= 25; ++m) {
      const auto ws = sweep_lemma22(n, m);
      const std::int64_t q = fan_q(n, m);
      const auto& a = find(ws, kL22HubWeight);
      ASSERT_EQ(a.difference(), 2 * oracle::triangular(m + n) - 2 * q);
      ASSERT_EQ(a.difference(), l22_hub_difference_closed(n, m));
      for (int r = 1; r <= n - 1; ++r) {
        const std::int64_t light = n - r;
        const std::int64_t edges = (m + 1) * light + n - 1;
        const auto& w = find(ws, kL22Case2Exact, r);
        ASSERT_EQ(w.difference(), 2 * oracle::triangular(edges) - 2 * light * q);
        ASSERT_EQ(w.in_proof_scope, 2 * light >= n);
        ASSERT_TRUE(find(ws, kL22EdgeCount, r).holds);
      }
      const auto& bound = find(ws, kL22Case2Bound);
      ASSERT_EQ(bound.lhs, n * (m * m * n + n - 6));
    }
}

TEST(Bounds, Lemma21SweepOutcome) {
  for (const auto& w : sweep_lemma21(SweepRange{2, 50, 1, 50})) {
    if (w.name == kL21Case2) {
      ASSERT_EQ(w.holds, w.m >= 2) << w.n << "," << w.m;
    } else {
      ASSERT_TRUE(w.holds) << w.name << " " << w.n << "," << w.m;
    }
  }
}

TEST(Bounds, Lemma22SweepOutcome) {
  for (const auto& w : sweep_lemma22(SweepRange{3, 50, 1, 50})) {
    if (w.name == kL22Case2Bound) {
      ASSERT_EQ(w.holds, !(w.n == 3 && w.m == 1)) << w.n << "," << w.m;
    } else {
      ASSERT_TRUE(w.holds) << w.name << " " << w.n << "," << w.m;
    }
  }
}

TEST(Bounds, TriangleFanRefinement) {
  const auto ws = sweep_lemma22(3, 1);
  const auto& w = find(ws, kL22F3O1);
  EXPECT_EQ(w.lhs, 21);
  EXPECT_EQ(w.rhs, 18);
  EXPECT_TRUE(w.holds);
  EXPECT_THROW(find(sweep_lemma22(4, 1), kL22F3O1), std::runtime_error);
}

// The printed simplification of the hub inequality is off; the exact
// difference at (2,1) is 8 where 19 is printed.
TEST(Bounds, PrintedHubDifferenceDisagrees) {
  const auto& a = find(sweep_lemma21(2, 1), kL21HubWeight);
  EXPECT_EQ(a.difference(), 8);
  ASSERT_TRUE(a.printed_difference.has_value());
  EXPECT_EQ(*a.printed_difference, 19);
  EXPECT_FALSE(a.printed_agrees());
  EXPECT_TRUE(find(sweep_lemma21(2, 1), kL21Case3).printed_agrees());
  const auto& fan_hub = find(sweep_lemma22(3, 1), kL22HubWeight);
  EXPECT_EQ(*fan_hub.printed_difference + 1, fan_hub.difference());
}

TEST(Bounds, SweepDomains) {
  EXPECT_THROW(sweep_lemma21(1, 1), DomainError);
  EXPECT_THROW(sweep_lemma22(2, 1), DomainError);
  EXPECT_EQ(sweep_lemma21(SweepRange{2, 4, 1, 3}).size(), 3u * 3 * 3);
}

TEST(Bounds, FriendshipReportIsExactForOnePendant) {
  for (int n = 2; n <= 30; ++n) {
    const auto r = bound_report(GraphFamily::FriendshipCorona, n, 1);
    ASSERT_TRUE(r.exact.has_value());
    ASSERT_EQ(*r.exact, 2 * n + 3);
    ASSERT_GE(*r.exact, *r.raw_lemma_lower);
    ASSERT_TRUE(r.consistent());
  }
  const auto wide = bound_report(GraphFamily::FriendshipCorona, 5, 3);
  EXPECT_FALSE(wide.exact.has_value());
  EXPECT_EQ(wide.lower, lb_friendship(5, 3));
}

TEST(Bounds, OtherFamilies) {
  EXPECT_EQ(*bound_report(GraphFamily::C3Corona, 3, 1).exact, 5);
  EXPECT_EQ(*bound_report(GraphFamily::KnK1, 6, 1).exact, 11);
  const auto fan = bound_report(GraphFamily::FanCorona, 4, 2);
  EXPECT_EQ(fan.lower, lb_fan(4, 2));
  EXPECT_TRUE(fan.consistent());
}

TEST(Bounds, MergeKeepsConsistency) {
  auto r = bound_report(GraphFamily::FanCorona, 4, 1);
  merge_upper(r, 12, Provenance::Solver);
  EXPECT_EQ(*r.upper, 12);
  merge_exact(r, 9, Provenance::Solver);
  EXPECT_TRUE(r.consistent());
  EXPECT_THROW(merge_exact(r, static_cast<std::int64_t>(r.lower) - 1, Provenance::Solver),
               ConstructionError);
  EXPECT_EQ(parse_family("kn-k1"), std::optional(GraphFamily::KnK1));
  EXPECT_FALSE(parse_family("wheel"));
}
