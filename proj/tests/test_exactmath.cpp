#include <gtest/gtest.h>

#include <random>

#include "chaircodes/exactmath.hpp"
#include "oracles.hpp"

using namespace chaircodes;

namespace {

IntMatrix to_matrix(const oracle::Mat& m) {
  IntMatrix out(m.size(), m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = static_cast<long>(m[i][j]);
  return out;
}

oracle::Mat random_matrix(std::mt19937& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  oracle::Mat m(n, oracle::Vec(n));
  for (auto& row : m)
    for (auto& v : row) v = d(rng);
  return m;
}

bool is_canonical(const IntMatrix& h) {
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (h(i, i) <= 0) return false;
    for (std::size_t j = i + 1; j < h.cols(); ++j)
      if (h(i, j) != 0) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (h(i, j) < 0 || h(i, j) >= h(j, j)) return false;
  }
  return true;
}

}  // namespace

TEST(ModularArithmetic, FloorModAndDivFollowNegativeOperands) {
  EXPECT_EQ(floor_mod(-7, 3), 2);
  EXPECT_EQ(floor_mod(7, 3), 1);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(ceil_div(-7, 2), -3);
  EXPECT_EQ(ceil_div(7, 2), 4);
}

TEST(ModularArithmetic, InverseMatchesBruteForce) {
  for (long m = 2; m <= 60; ++m)
    for (long a = -m; a <= 2 * m; ++a) {
      const long long expect = oracle::inverse_mod(a, m);
      if (expect == 0 && m > 1) {
        EXPECT_THROW(mod_inverse(a, m), Error) << a << " mod " << m;
      } else {
        EXPECT_EQ(mod_inverse(a, m), BigInt(static_cast<long>(expect))) << a << " mod " << m;
      }
    }
}

TEST(ModularArithmetic, InverseRejectsBadModulus) {
  try {
    mod_inverse(3, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidArgument);
  }
  try {
    mod_inverse(4, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotInvertible);
  }
}

TEST(ModularArithmetic, InverseOfHugeValues) {
  const BigInt m = pow(BigInt(10), 40) + 1;
  const BigInt a = pow(BigInt(3), 50);
  EXPECT_EQ(floor_mod(a * mod_inverse(a, m), m), 1);
}

TEST(Determinant, FixedValues) {
  EXPECT_EQ(determinant(IntMatrix{{5, -3, 0}, {0, 4, -1}, {-3, 0, 3}}), 51);
  EXPECT_EQ(determinant(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), -144);
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = random_matrix(rng, 1 + trial % 5, 9);
    EXPECT_EQ(determinant(to_matrix(m)), BigInt(static_cast<long>(oracle::cofactor_det(m))));
  }
}

TEST(Determinant, NoOverflowBeyond64Bits) {
  IntMatrix m(4, 4);
  const BigInt big = pow(BigInt(2), 62);
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = big;
  EXPECT_EQ(determinant(m), pow(BigInt(2), 248));
}

TEST(HermiteForm, KnownCanonicalBasis) {
  EXPECT_EQ(hermite_normal_form(IntMatrix{{2, -1}, {-1, 2}}), (IntMatrix{{3, 0}, {1, 1}}));
  EXPECT_EQ(hermite_normal_form(IntMatrix{{5, -3, 0}, {0, 4, -1}, {-3, 0, 3}}),
            (IntMatrix{{17, 0, 0}, {12, 3, 0}, {7, 2, 1}}));
}

TEST(HermiteForm, CanonicalAndInvariantUnderUnimodularChange) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 3;
    auto m = random_matrix(rng, n, 6);
    if (oracle::cofactor_det(m) == 0) continue;
    const IntMatrix g = to_matrix(m);
    const IntMatrix h = hermite_normal_form(g);
    EXPECT_TRUE(is_canonical(h));
    EXPECT_EQ(abs(determinant(h)), abs(determinant(g)));
    // Same lattice: every canonical row lies in the original lattice.
    for (std::size_t i = 0; i < n; ++i) {
      oracle::Vec y;
      for (std::size_t j = 0; j < n; ++j) y.push_back(h(i, j).get_si());
      EXPECT_TRUE(oracle::member(m, y));
    }
    IntMatrix moved = g;
    moved.add_row_multiple(0, n - 1, 3);
    moved.swap_rows(0, 1);
    moved.negate_row(n - 1);
    EXPECT_EQ(hermite_normal_form(moved), h);
  }
}

TEST(HermiteForm, RectangularGeneratorSet) {
  IntMatrix g{{4, 0}, {0, 6}, {2, 3}};
  EXPECT_EQ(hermite_basis(g), (IntMatrix{{4, 0}, {2, 3}}));
  try {
    hermite_basis(IntMatrix{{1, 2}, {2, 4}, {3, 6}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SingularMatrix);
  }
}

TEST(SmithForm, DivisorsAndTransforms) {
  const IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const SmithForm s = smith_normal_form(m);
  EXPECT_EQ(s.divisors(), (std::vector<BigInt>{2, 6, 12}));
  EXPECT_EQ(s.left * m * s.right, s.diagonal);
  EXPECT_EQ(abs(determinant(s.left)), 1);
  EXPECT_EQ(abs(determinant(s.right)), 1);
}

TEST(SmithForm, DivisibilityChainOnRandomInputs) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + trial % 3;
    auto m = random_matrix(rng, n, 7);
    const long long det = oracle::cofactor_det(m);
    if (det == 0) continue;
    const SmithForm s = smith_normal_form(to_matrix(m));
    const auto d = s.divisors();
    BigInt prod = 1;
    for (std::size_t i = 0; i < d.size(); ++i) {
      EXPECT_GT(d[i], 0);
      if (i + 1 < d.size()) EXPECT_TRUE(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()));
      prod *= d[i];
    }
    EXPECT_EQ(prod, BigInt(static_cast<long>(std::llabs(det))));
    EXPECT_EQ(s.left * to_matrix(m) * s.right, s.diagonal);
  }
}

TEST(SmithForm, RejectsSingularAndNonSquare) {
  try {
    smith_normal_form(IntMatrix{{1, 2}, {2, 4}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SingularMatrix);
  }
  try {
    smith_normal_form(IntMatrix{{1, 2, 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonSquare);
  }
}

TEST(Parsing, IntegersRationalsAndDecimals) {
  EXPECT_EQ(parse_integer("-42"), -42);
  EXPECT_EQ(parse_integer("+7"), 7);
  EXPECT_EQ(parse_rational("5/2"), Rational(5, 2));
  EXPECT_EQ(parse_rational("2.75"), Rational(11, 4));
  EXPECT_EQ(parse_rational("-0.5"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_integer_list("1, 2,4"), (std::vector<BigInt>{1, 2, 4}));
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_EQ(join(Point{BigInt(1), BigInt(-2)}), "1,-2");
}

TEST(Parsing, MalformedInputIsAParseError) {
  for (const char* bad : {"", "x", "1,x", "1/0", "1.2.3", "--1", "1/", " "}) {
    try {
      parse_rational_list(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::ParseError) << bad;
    }
  }
  EXPECT_THROW(parse_integer("3/2"), Error);
  EXPECT_THROW(parse_integer_list("1,,2"), Error);
}
