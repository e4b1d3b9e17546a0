#include <gtest/gtest.h>

#include <set>

#include "chaircodes/splitting.hpp"
#include "oracles.hpp"

using namespace chaircodes;

namespace {

// Distinctness of p . beta mod m over the chair points, by direct count.
bool splits(const oracle::Vec& l, const oracle::Vec& k, const std::vector<BigInt>& beta, long long m) {
  std::set<long long> values;
  const auto pts = oracle::chair_points(l, k);
  for (const auto& p : pts) {
    long long v = 0;
    for (std::size_t i = 0; i < p.size(); ++i) v += p[i] * beta[i].get_si();
    values.insert(((v % m) + m) % m);
  }
  return values.size() == pts.size();
}

}  // namespace

TEST(AlphaUnit, FixedValues) {
  EXPECT_EQ(alpha_unit(2, 3), 4);
  EXPECT_EQ(alpha_unit(3, 2), 2);
  EXPECT_EQ(alpha_unit(3, 3), 11);
  EXPECT_EQ(alpha_unit(3, 4), 26);
  EXPECT_EQ(alpha_unit(4, 3), 34);
  EXPECT_EQ(alpha_unit(4, 4), 118);
}

TEST(AlphaUnit, OrderIsNAndPowersSumToZero) {
  for (unsigned n = 2; n <= 5; ++n)
    for (long ell = 2; ell <= 6; ++ell) {
      long long m = 1, mk = 1;
      for (unsigned i = 0; i < n; ++i) {
        m *= ell;
        mk *= ell - 1;
      }
      m -= mk;
      const long long a = alpha_unit(n, ell).get_si();
      EXPECT_EQ(oracle::order_mod(a, m), n) << n << " " << ell;
      long long sum = 0, x = 1;
      for (unsigned i = 0; i < n; ++i) {
        sum = (sum + x) % m;
        x = x * a % m;
      }
      EXPECT_EQ(sum, 0);
    }
}

TEST(AlphaUnit, RejectsDegenerateParameters) {
  EXPECT_THROW(alpha_unit(1, 3), Error);
  EXPECT_THROW(alpha_unit(3, 1), Error);
}

TEST(UniformSplitting, PowersOfAlpha) {
  const SplittingSequence s = uniform_chair_splitting(3, 3);
  EXPECT_EQ(s.modulus, 19);
  EXPECT_EQ(s.beta, (std::vector<BigInt>{1, 11, 7}));
  EXPECT_TRUE(verify_splitting(Chair::uniform(3, 3), s).ok());
  EXPECT_TRUE(splits({3, 3, 3}, {2, 2, 2}, s.beta, 19));
}

TEST(GeneralSplitting, RecurrenceOnUnitNotches) {
  const Chair c = Chair::from_integers({2, 2, 2}, {1, 1, 1});
  const SplittingSequence s = general_chair_splitting(c);
  EXPECT_EQ(s.modulus, 7);
  EXPECT_EQ(s.beta, (std::vector<BigInt>{1, 2, 4}));
  EXPECT_EQ(s.permutation, (std::vector<std::size_t>{0, 1, 2}));

  const SplittingSequence mixed = general_chair_splitting(Chair::from_integers({3, 2, 2}, {2, 1, 1}));
  EXPECT_EQ(mixed.modulus, 10);
  EXPECT_EQ(mixed.beta, (std::vector<BigInt>{1, 3, 6}));
}

TEST(GeneralSplitting, RotatesASingleNonUnitNotchToTheFront) {
  const Chair c = Chair::from_integers({3, 4}, {1, 2});
  const SplittingSequence s = general_chair_splitting(c);
  EXPECT_EQ(s.modulus, 10);
  EXPECT_EQ(s.permutation, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(s.beta, (std::vector<BigInt>{4, 1}));
  EXPECT_TRUE(verify_splitting(c, s).ok());
  EXPECT_TRUE(splits({3, 4}, {1, 2}, s.beta, 10));
}

TEST(GeneralSplitting, TwoNonUnitNotchesViolateTheHypothesis) {
  try {
    general_chair_splitting(Chair::from_integers({5, 4, 3}, {3, 3, 1}));
    FAIL();
  } catch (const HypothesisViolated& e) {
    EXPECT_EQ(e.index(), 1u);
    EXPECT_EQ(e.code(), Errc::HypothesisViolated);
  }
}

TEST(GeneralSplitting, AgreesWithDirectCountOnAGrid) {
  int checked = 0;
  for (long l1 = 2; l1 <= 5; ++l1)
    for (long l2 = 2; l2 <= 5; ++l2)
      for (long l3 = 2; l3 <= 4; ++l3)
        for (long k1 = 1; k1 < l1; ++k1)
          for (long k2 = 1; k2 < l2; ++k2)
            for (long k3 = 1; k3 < l3; ++k3) {
              const Chair c = Chair::from_integers({l1, l2, l3}, {k1, k2, k3});
              SplittingSequence s;
              try {
                s = general_chair_splitting(c);
              } catch (const HypothesisViolated&) {
                continue;
              }
              ++checked;
              const long long m = l1 * l2 * l3 - k1 * k2 * k3;
              EXPECT_TRUE(splits({l1, l2, l3}, {k1, k2, k3}, s.beta, m));
              EXPECT_TRUE(verify_splitting(c, s).ok());
            }
  EXPECT_GT(checked, 100);
}

TEST(VerifySplitting, CollisionGivesWitnessPair) {
  const Chair c = Chair::from_integers({2, 2, 2}, {1, 1, 1});
  SplittingSequence bad{BigInt(7), {BigInt(1), BigInt(1), BigInt(4)}, {0, 1, 2}};
  const Verdict v = verify_splitting(c, bad);
  EXPECT_EQ(v.status, VerdictStatus::Fail);
  ASSERT_EQ(v.witness.size(), 2u);
  EXPECT_NE(v.witness[0], v.witness[1]);
}

TEST(Conversion, SplittingToLatticeIsTheKernel) {
  const SplittingSequence s{BigInt(7), {BigInt(1), BigInt(2), BigInt(4)}, {0, 1, 2}};
  const Lattice lat = splitting_to_lattice(s, 3);
  EXPECT_EQ(lat.hnf(), (IntMatrix{{7, 0, 0}, {5, 1, 0}, {3, 0, 1}}));
  EXPECT_EQ(lat.volume(), 7);
  EXPECT_TRUE(verify_tiling(lat, Chair::uniform(3, 2)).ok());
}

TEST(Conversion, RoundTripThroughTheQuotient) {
  const Lattice lat = chair_lattice(Chair::from_integers({5, 4, 3}, {3, 3, 1}));
  const GroupLabeling g = lattice_to_splitting(lat);
  ASSERT_TRUE(std::holds_alternative<SplittingSequence>(g));
  const auto& s = std::get<SplittingSequence>(g);
  EXPECT_EQ(s.modulus, 51);
  // k_1 = 3 is not a unit, so beta_1 is left unscaled; its gcd with m is
  // fixed by the order of e_1 in the quotient.
  long order = 1;
  while (!lat.member(Point{BigInt(order), 0, 0})) ++order;
  EXPECT_EQ(gcd(s.beta[0], s.modulus), 51 / order);
  EXPECT_EQ(splitting_to_lattice(s, 3), lat);
  EXPECT_TRUE(splits({5, 4, 3}, {3, 3, 1}, s.beta, 51));
}

TEST(Conversion, NonCyclicQuotientUsesCompositeLabels) {
  const Lattice lat(IntMatrix{{2, 0}, {0, 4}});
  const GroupLabeling g = lattice_to_splitting(lat);
  ASSERT_TRUE(std::holds_alternative<CompositeGroupLabeling>(g));
  const auto& c = std::get<CompositeGroupLabeling>(g);
  EXPECT_EQ(c.divisors, (std::vector<BigInt>{2, 4}));
  EXPECT_EQ(labeling_to_lattice(c), lat);
}

TEST(Conversion, TrivialQuotient) {
  const Lattice z2(IntMatrix{{1, 0}, {0, 1}});
  const auto g = lattice_to_splitting(z2);
  ASSERT_TRUE(std::holds_alternative<SplittingSequence>(g));
  EXPECT_EQ(std::get<SplittingSequence>(g).modulus, 1);
  EXPECT_EQ(splitting_to_lattice(std::get<SplittingSequence>(g), 2), z2);
}
