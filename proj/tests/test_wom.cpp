#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "chaircodes/splitting.hpp"
#include "chaircodes/wom.hpp"

using namespace chaircodes;

namespace {

Point P(std::initializer_list<long> v) {
  Point p;
  for (long x : v) p.push_back(x);
  return p;
}

Coloring planar(std::uint64_t q) {
  const Chair c = Chair::from_integers({2, 2}, {1, 1});
  return build_coloring(splitting_to_lattice(general_chair_splitting(c), 2), c, q);
}

}  // namespace

TEST(Coloring, ThreeColorsOfTheSquareGrid) {
  const Coloring col = planar(3);
  EXPECT_EQ(col.sigma, 3u);
  EXPECT_EQ(col.cells(), 9u);
  EXPECT_TRUE(col.torus);
  // Zero coset {(0,0), (1,1), (2,2)} is color 0.
  EXPECT_EQ(col.color(P({0, 0})), 0u);
  EXPECT_EQ(col.color(P({1, 1})), 0u);
  EXPECT_EQ(col.color(P({2, 2})), 0u);
  // Colors are a relabeling of x_1 + 2 x_2 mod 3, numbered by the chair
  // points (0,0), (0,1), (1,0).
  EXPECT_EQ(col.color(P({0, 1})), 1u);
  EXPECT_EQ(col.color(P({1, 0})), 2u);
  EXPECT_EQ(col.colors, (std::vector<std::uint32_t>{0, 1, 2, 2, 0, 1, 1, 2, 0}));
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 3; ++b)
      for (long c = 0; c < 3; ++c)
        for (long d = 0; d < 3; ++d)
          EXPECT_EQ(col.color(P({a, b})) == col.color(P({c, d})), (a + 2 * b - c - 2 * d) % 3 == 0);
}

TEST(Coloring, SingleState) {
  const Coloring col = planar(1);
  EXPECT_EQ(col.cells(), 1u);
  EXPECT_EQ(col.colors[0], 0u);
  EXPECT_FALSE(col.torus);
}

TEST(Coloring, ThreeCellsFourLevels) {
  const Chair c = Chair::uniform(3, 2);
  const Coloring col = build_coloring(splitting_to_lattice(uniform_chair_splitting(3, 2), 3), c, 4);
  EXPECT_EQ(col.sigma, 7u);
  EXPECT_EQ(col.cells(), 64u);
  std::vector<int> sizes(7, 0);
  for (auto k : col.colors) ++sizes[k];
  EXPECT_EQ(sizes, (std::vector<int>{10, 9, 9, 9, 9, 9, 9}));
}

TEST(Coloring, ConstantOnCosets) {
  const Chair c = Chair::from_integers({4, 3}, {2, 1});
  const Lattice lat = chair_lattice(c);
  const Coloring col = build_coloring(lat, c, 10);
  EXPECT_TRUE(col.torus);
  for (std::uint64_t i = 0; i < col.cells(); ++i) {
    const Point p = col.state(i);
    for (std::size_t r = 0; r < 2; ++r) {
      Point q = p;
      for (std::size_t j = 0; j < 2; ++j) q[j] = floor_mod(q[j] + lat.integer_generator()(r, j), 10);
      EXPECT_EQ(col.color(p), col.color(q));
    }
  }
}

TEST(Coloring, RejectsNonTilingsAndBadSizes) {
  const Chair c = Chair::from_integers({2, 2}, {1, 1});
  try {
    build_coloring(Lattice(IntMatrix{{3, 0}, {0, 3}}), c, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotATiling);
  }
  try {
    build_coloring(chair_lattice(c), c, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BadParameters);
  }
  try {
    build_coloring(chair_lattice(c), c, 10000, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
  }
}

TEST(WriteGuarantee, TorusAnchorsSeeEveryColorOnce) {
  const Chair c = Chair::from_integers({2, 2}, {1, 1});
  const Verdict v = check_write_guarantee(planar(3), c);
  EXPECT_TRUE(v.ok());
  EXPECT_EQ(v.examined, 9u);
}

TEST(WriteGuarantee, InteriorAnchorsWhenTheGridDoesNotWrap) {
  const Chair c = Chair::from_integers({2, 2}, {1, 1});
  const Coloring col = planar(4);
  EXPECT_FALSE(col.torus);
  const Verdict v = check_write_guarantee(col, c);
  EXPECT_TRUE(v.ok());
  // Anchors need p - e >= 0 for e in {(0,0), (0,1), (1,0)}: p in [1,3]^2.
  EXPECT_EQ(v.examined, 9u);
  // The (2,2) anchor reaches {(2,2), (2,1), (1,2)}.
  std::set<std::uint32_t> seen{col.color(P({2, 2})), col.color(P({2, 1})), col.color(P({1, 2}))};
  EXPECT_EQ(seen.size(), 3u);
}

TEST(WriteGuarantee, ConstantColoringFails) {
  const Chair c = Chair::from_integers({2, 2}, {1, 1});
  Coloring col = planar(3);
  std::fill(col.colors.begin(), col.colors.end(), 0u);
  const Verdict v = check_write_guarantee(col, c);
  EXPECT_EQ(v.status, VerdictStatus::Fail);
  EXPECT_EQ(v.witness.size(), 1u);
}

TEST(WriteGuarantee, InconclusiveWithoutAnInteriorAnchor) {
  const Chair c = Chair::from_integers({2, 2}, {1, 1});
  EXPECT_EQ(check_write_guarantee(planar(1), c).status, VerdictStatus::Inconclusive);
}

TEST(Export, CsvRows) {
  std::ostringstream out;
  write_coloring_csv(planar(3), out);
  EXPECT_EQ(out.str(), "0,0,0\n0,1,1\n0,2,2\n1,0,2\n1,1,0\n1,2,1\n2,0,1\n2,1,2\n2,2,0\n");
}

TEST(Export, BinaryGrid) {
  std::ostringstream out;
  write_coloring_binary(planar(3), out);
  const std::string bytes = out.str();
  ASSERT_EQ(bytes.size(), 8u + 2 * 9);
  EXPECT_EQ(bytes.substr(0, 8), "WOMCOLR1");
  EXPECT_EQ(bytes[8 + 2], 1);
  EXPECT_EQ(bytes[8 + 3], 0);
  EXPECT_EQ(bytes[8 + 4], 2);
}
