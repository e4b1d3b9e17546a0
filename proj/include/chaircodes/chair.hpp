#pragma once

#include <cstdint>
#include <vector>

#include "chaircodes/exactmath.hpp"

namespace chaircodes {

/// The n-dimensional chair: an l_1 x ... x l_n box with a k_1 x ... x k_n box
/// removed from its far corner. A point x belongs to it when 0 <= x_i < l_i
/// for every i and x_j < l_j - k_j for at least one j.
class Chair {
 public:
  /// Throws InvalidChair unless 0 < k_i < l_i for every i.
  Chair(std::vector<Rational> sides, std::vector<Rational> notch);

  static Chair from_integers(const std::vector<BigInt>& sides, const std::vector<BigInt>& notch);
  /// L = (l, ..., l), K = (l - 1, ..., l - 1).
  static Chair uniform(std::size_t n, const BigInt& ell);

  std::size_t dim() const noexcept { return sides_.size(); }
  const std::vector<Rational>& sides() const noexcept { return sides_; }
  const std::vector<Rational>& notch() const noexcept { return notch_; }
  bool is_discrete() const noexcept { return discrete_; }

  /// Integer sides / notch; throws NotDiscrete.
  std::vector<BigInt> integer_sides() const;
  std::vector<BigInt> integer_notch() const;

  /// prod(l_i) - prod(k_i)
  Rational volume() const;

  bool contains(const RPoint& p) const;
  bool contains(const Point& p) const;

  /// All integer points, lexicographically sorted. Throws NotDiscrete, or
  /// BudgetExceeded when the volume is above `budget`.
  std::vector<Point> enumerate_points(std::uint64_t budget = kDefaultBudget) const;

  /// Whether the chair meets its translate by x, decided by the closed-form
  /// criterion: |x_i| < l_i for all i, some x_j < l_j - k_j and some
  /// x_r > -(l_r - k_r).
  bool shifted_copies_intersect(const RPoint& x) const;
  bool shifted_copies_intersect(const Point& x) const;

  /// Least common denominator of all l_i and k_i.
  BigInt denominator() const;
  Chair scaled(const BigInt& factor) const;
  /// Coordinates reordered so that new coordinate i is old coordinate perm[i].
  Chair permuted(const std::vector<std::size_t>& perm) const;

  bool operator==(const Chair&) const = default;

 private:
  std::vector<Rational> sides_;
  std::vector<Rational> notch_;
  bool discrete_ = true;
};

}  // namespace chaircodes
