#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "chaircodes/chair.hpp"
#include "chaircodes/exactmath.hpp"
#include "chaircodes/verdict.hpp"

namespace chaircodes {

/// Residues of a point in Z^n / lattice, one per nontrivial elementary
/// divisor d_i, each in [0, d_i).
using CosetLabel = std::vector<BigInt>;

/// Full-rank lattice in Q^n given by basis rows. Stored as an integer matrix
/// over the least common denominator of its entries; equality is equality of
/// the canonical (HNF) bases.
class Lattice {
 public:
  explicit Lattice(IntMatrix generator);
  static Lattice from_rows(const std::vector<RPoint>& rows);

  std::size_t dim() const noexcept { return scaled_.rows(); }
  bool is_integer() const noexcept { return denominator_ == 1; }
  /// denominator() * generator, an integer matrix.
  const IntMatrix& integer_generator() const noexcept { return scaled_; }
  const BigInt& denominator() const noexcept { return denominator_; }
  std::vector<RPoint> generator() const;

  /// |det G|
  Rational volume() const;
  /// Canonical basis of integer_generator().
  const IntMatrix& hnf() const noexcept { return hnf_; }

  /// Elementary divisors d_1 | ... | d_n of Z^n / lattice (integer lattices).
  const std::vector<BigInt>& elementary_divisors() const;
  /// The divisors greater than one; these index the label components.
  std::vector<BigInt> quotient_divisors() const;
  bool quotient_is_cyclic() const { return quotient_divisors().size() <= 1; }

  bool member(const Point& p) const;
  bool member(const RPoint& p) const;

  /// Image of p under Z^n -> Z^n / lattice. Throws NonIntegerLattice.
  CosetLabel coset_label(const Point& p) const;

  Lattice scaled(const BigInt& factor) const;

  /// Calls visit(x) for every lattice point x with lo <= x <= hi, solving for
  /// the integer coefficients coordinate by coordinate on the triangular
  /// basis. Stops early when visit returns false. Returns the number visited;
  /// throws BudgetExceeded past `budget` points. Integer lattices only.
  std::uint64_t for_each_point_in_box(const Point& lo, const Point& hi,
                                      const std::function<bool(const Point&)>& visit,
                                      std::uint64_t budget = kDefaultBudget) const;

  bool operator==(const Lattice& other) const {
    return denominator_ == other.denominator_ && hnf_ == other.hnf_;
  }

 private:
  Lattice(IntMatrix scaled, BigInt denominator);
  void require_integer(const char* what) const;
  bool solves_integrally(Point scaled_point) const;

  IntMatrix scaled_;
  BigInt denominator_ = 1;
  BigInt det_;
  IntMatrix hnf_;
  std::vector<BigInt> divisors_;
  // Columns of the right Smith transform for the nontrivial divisors.
  IntMatrix label_transform_;
  std::vector<BigInt> label_moduli_;
};

/// Basis rows: l_i on the diagonal, -k_{i+1} just right of it, and -k_1 in
/// the bottom-left corner. Its volume equals the chair's.
Lattice chair_lattice(const Chair& c);

/// Checks that no nonzero lattice point x in the box |x_i| < l_i makes the
/// chair meet its translate. A failing verdict's witness is {x, A} where A is
/// a point covered by both copies.
Verdict verify_packing(const Lattice& lat, const Chair& c, std::uint64_t budget = kDefaultBudget);

/// Packing plus volume equality. For a discrete chair on an integer lattice
/// it also requires the chair's points to hit every coset exactly once.
Verdict verify_tiling(const Lattice& lat, const Chair& c, std::uint64_t budget = kDefaultBudget);

/// Places a copy of the chair at every lattice point of the torus (Z/m)^n and
/// counts coverage of each cell. Default m is the lattice volume. Throws
/// BadModulus unless m*e_i lies in the lattice for every i, BudgetExceeded when
/// m^n is over budget.
Verdict torus_tiling_oracle(const Lattice& lat, const Chair& c, std::optional<BigInt> modulus = std::nullopt,
                            std::uint64_t budget = kDefaultBudget);

}  // namespace chaircodes
