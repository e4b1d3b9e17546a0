#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "chaircodes/chair.hpp"
#include "chaircodes/lattice.hpp"
#include "chaircodes/verdict.hpp"

namespace chaircodes {

/// Coset coloring of the cell-state grid [0, q)^n. Colors are numbered by
/// the lexicographic order of the chair's points, each of which is the
/// unique representative of its coset, so the zero coset has color 0.
struct Coloring {
  std::uint64_t q = 0;
  std::size_t n = 0;
  std::uint64_t sigma = 0;
  /// Row-major, last coordinate fastest.
  std::vector<std::uint32_t> colors;
  /// q e_i lies in the lattice for every i, so the grid wraps around.
  bool torus = false;

  std::uint64_t cells() const noexcept { return colors.size(); }
  std::uint64_t index(const Point& p) const;
  Point state(std::uint64_t index) const;
  std::uint32_t color(const Point& p) const { return colors[index(p)]; }
};

/// Throws NotATiling unless verify_tiling passes, BudgetExceeded when q^n is
/// over budget.
Coloring build_coloring(const Lattice& lat, const Chair& c, std::uint64_t q, std::uint64_t budget = kDefaultBudget);

/// Every anchor p must see each color exactly once on {p - e : e in chair}.
/// On a torus every state is an anchor and indices wrap; otherwise only the
/// anchors whose reflected chair fits in the grid count, and the verdict is
/// Inconclusive when there are none.
Verdict check_write_guarantee(const Coloring& col, const Chair& c, std::uint64_t budget = kDefaultBudget);

/// One line "x1,...,xn,color" per state.
void write_coloring_csv(const Coloring& col, std::ostream& out);
/// "WOMCOLR1" then one little-endian uint16 color per state, row-major.
/// Throws BadParameters when sigma exceeds 65536.
void write_coloring_binary(const Coloring& col, std::ostream& out);

}  // namespace chaircodes
