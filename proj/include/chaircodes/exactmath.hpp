#pragma once

// Exact integer and rational arithmetic, plus the integer matrix algebra
// (determinant, Hermite and Smith normal forms) the lattice code is built on.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chaircodes/error.hpp"

namespace chaircodes {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Integer point of Z^n.
using Point = std::vector<BigInt>;
/// Point of Q^n (continuous chairs).
using RPoint = std::vector<Rational>;

RPoint to_rational(const Point& p);

/// Default cap on the number of points any enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<Point>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Point row(std::size_t r) const;
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t r);

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix scaled(const BigInt& factor) const;
  bool operator==(const IntMatrix& rhs) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Row vector times matrix.
Point operator*(const Point& v, const IntMatrix& m);

/// Least nonnegative residue of a modulo m (m > 0).
BigInt floor_mod(const BigInt& a, const BigInt& m);
/// floor(a / b), b != 0.
BigInt floor_div(const BigInt& a, const BigInt& b);
/// ceil(a / b), b != 0.
BigInt ceil_div(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned long exp);

/// x in [0, m) with a*x = 1 (mod m). Throws NotInvertible when gcd(a, m) != 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix left;      // U
  IntMatrix diagonal;  // D = U * M * V
  IntMatrix right;     // V

  /// d_1 | d_2 | ... | d_n, all positive.
  std::vector<BigInt> divisors() const;
};

/// Smith normal form with unimodular transforms, pivoting on the smallest
/// nonzero magnitude. Requires a square nonsingular matrix.
SmithForm smith_normal_form(const IntMatrix& m);

/// Canonical basis of the row lattice of a square nonsingular matrix.
///
/// Convention: rows are basis vectors, the result is lower triangular with a
/// positive diagonal, and every entry below the diagonal is reduced into
/// [0, h_jj) of its column. Row i therefore has its pivot in column i.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Same convention for a k x n generator set of full column rank n (k >= n);
/// returns the n x n canonical basis. Throws SingularMatrix when rank < n.
IntMatrix hermite_basis(const IntMatrix& generators);

Rational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);
std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

/// Comma-separated list rendering, e.g. "1,2,4".
std::string join(const Point& v, std::string_view sep = ",");
std::vector<BigInt> parse_integer_list(std::string_view csv);
std::vector<Rational> parse_rational_list(std::string_view csv);

}  // namespace chaircodes
