#include <gtest/gtest.h>

#include "chaircodes/chair.hpp"
#include "oracles.hpp"

using namespace chaircodes;

namespace {

Point P(std::initializer_list<long> v) {
  Point p;
  for (long x : v) p.push_back(x);
  return p;
}

oracle::Vec V(const std::vector<BigInt>& v) {
  oracle::Vec out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

}  // namespace

TEST(Chair, RejectsNotchOutsideOpenRange) {
  for (auto [l, k] : std::vector<std::pair<long, long>>{{2, 2}, {2, 0}, {3, 4}, {3, -1}}) {
    try {
      Chair::from_integers({BigInt(2), BigInt(l)}, {BigInt(1), BigInt(k)});
      FAIL() << l << "," << k;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::InvalidChair);
    }
  }
  EXPECT_THROW(Chair::from_integers({2, 2}, {1}), Error);
  EXPECT_THROW(Chair({}, {}), Error);
}

TEST(Chair, VolumeIsBoxMinusNotch) {
  EXPECT_EQ(Chair::from_integers({5, 4, 3}, {3, 3, 1}).volume(), 51);
  EXPECT_EQ(Chair::uniform(3, 2).volume(), 7);
  EXPECT_EQ(Chair({Rational(5, 2), Rational(3, 2)}, {Rational(1, 2), Rational(1, 2)}).volume(), Rational(7, 2));
}

TEST(Chair, MembershipAtCorners) {
  const Chair c = Chair::from_integers({2, 2}, {1, 1});
  EXPECT_TRUE(c.contains(P({0, 0})));
  EXPECT_TRUE(c.contains(P({1, 0})));
  EXPECT_TRUE(c.contains(P({0, 1})));
  EXPECT_FALSE(c.contains(P({1, 1})));
  EXPECT_FALSE(c.contains(P({-1, 0})));
  EXPECT_FALSE(c.contains(P({0, 2})));
}

TEST(Chair, ContinuousMembership) {
  const Chair c({Rational(5, 2), Rational(3, 2)}, {Rational(1, 2), Rational(1, 2)});
  EXPECT_TRUE(c.contains(RPoint{Rational(19, 10), Rational(14, 10)}));
  EXPECT_FALSE(c.contains(RPoint{Rational(21, 10), Rational(11, 10)}));
  EXPECT_FALSE(c.contains(RPoint{Rational(5, 2), Rational(0)}));
  EXPECT_FALSE(c.is_discrete());
  EXPECT_THROW(c.integer_sides(), Error);
}

TEST(Chair, EnumerationMatchesBoxScan) {
  for (long l1 = 2; l1 <= 4; ++l1)
    for (long l2 = 2; l2 <= 4; ++l2)
      for (long l3 = 2; l3 <= 3; ++l3)
        for (long k1 = 1; k1 < l1; ++k1)
          for (long k2 = 1; k2 < l2; ++k2)
            for (long k3 = 1; k3 < l3; ++k3) {
              const Chair c = Chair::from_integers({l1, l2, l3}, {k1, k2, k3});
              const auto pts = c.enumerate_points();
              const auto expect = oracle::chair_points({l1, l2, l3}, {k1, k2, k3});
              ASSERT_EQ(pts.size(), expect.size());
              EXPECT_EQ(BigInt(static_cast<unsigned long>(pts.size())), c.volume());
              for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(V(pts[i]), expect[i]);
            }
}

TEST(Chair, EnumerationRespectsBudget) {
  const Chair c = Chair::uniform(4, 10);
  try {
    c.enumerate_points(1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
  }
}

TEST(Chair, ClosedFormIntersectionMatchesBruteForce) {
  const std::vector<std::pair<oracle::Vec, oracle::Vec>> shapes = {
      {{2, 2}, {1, 1}}, {{4, 3}, {2, 1}}, {{5, 4, 3}, {3, 3, 1}}, {{3, 3, 3}, {1, 2, 1}}};
  for (const auto& [l, k] : shapes) {
    std::vector<BigInt> ls, ks;
    for (auto v : l) ls.push_back(static_cast<long>(v));
    for (auto v : k) ks.push_back(static_cast<long>(v));
    const Chair c = Chair::from_integers(ls, ks);
    oracle::Vec lo, hi;
    for (auto v : l) {
      lo.push_back(-v - 1);
      hi.push_back(v + 1);
    }
    oracle::for_box(lo, hi, [&](const oracle::Vec& x) {
      Point p;
      for (auto v : x) p.push_back(static_cast<long>(v));
      EXPECT_EQ(c.shifted_copies_intersect(p), oracle::copies_meet(l, k, x));
    });
  }
}

TEST(Chair, ContinuousIntersectionCriterion) {
  const Chair c({Rational(5, 2), Rational(3, 2)}, {Rational(1, 2), Rational(1, 2)});
  EXPECT_TRUE(c.shifted_copies_intersect(RPoint{Rational(2), Rational(-1)}));
  EXPECT_TRUE(c.shifted_copies_intersect(RPoint{Rational(1, 3), Rational(1, 3)}));
  EXPECT_FALSE(c.shifted_copies_intersect(RPoint{Rational(5, 2), Rational(0)}));
  EXPECT_FALSE(c.shifted_copies_intersect(RPoint{Rational(-1, 2), Rational(3, 2)}));
  // The translate by (2, 1) starts exactly at the removed corner.
  EXPECT_FALSE(c.shifted_copies_intersect(RPoint{Rational(2), Rational(1)}));
}

TEST(Chair, ScalingAndPermutation) {
  const Chair c({Rational(5, 2), Rational(3, 2)}, {Rational(1, 2), Rational(1, 2)});
  EXPECT_EQ(c.denominator(), 2);
  const Chair d = c.scaled(2);
  EXPECT_TRUE(d.is_discrete());
  EXPECT_EQ(d.integer_sides(), (std::vector<BigInt>{5, 3}));
  EXPECT_EQ(d.volume(), c.volume() * 4);
  const Chair p = Chair::from_integers({5, 4, 3}, {3, 3, 1}).permuted({2, 0, 1});
  EXPECT_EQ(p.integer_sides(), (std::vector<BigInt>{3, 5, 4}));
  EXPECT_EQ(p.integer_notch(), (std::vector<BigInt>{1, 3, 3}));
}
