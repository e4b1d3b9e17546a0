#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "chaircodes/chair.hpp"
#include "chaircodes/lattice.hpp"
#include "chaircodes/splitting.hpp"
#include "chaircodes/verdict.hpp"

namespace chaircodes {

/// |S(n, t, l)| = sum_{i=0}^{t} C(n, i) l^i
BigInt sphere_size(unsigned n, unsigned t, const BigInt& ell);

/// Asymmetric errors of Hamming weight at most t with entries in [0, l_i].
/// Per-cell magnitudes are only accepted for t >= n - 1, where the sphere is
/// a chair (t = n - 1) or a box (t = n).
class ErrorSphere {
 public:
  static ErrorSphere uniform(std::size_t n, std::size_t t, const BigInt& ell);
  static ErrorSphere per_cell(std::vector<BigInt> magnitudes, std::size_t t);

  std::size_t length() const noexcept { return magnitudes_.size(); }
  std::size_t max_errors() const noexcept { return max_errors_; }
  const std::vector<BigInt>& magnitudes() const noexcept { return magnitudes_; }
  bool is_uniform() const;

  BigInt size() const;
  bool contains(const Point& e) const;
  /// Sorted lexicographically. Throws BudgetExceeded.
  std::vector<Point> enumerate(std::uint64_t budget = kDefaultBudget) const;
  /// The chair L = (l_i + 1), K = (l_i) when t = n - 1.
  std::optional<Chair> as_chair() const;

 private:
  ErrorSphere(std::vector<BigInt> magnitudes, std::size_t t);
  std::vector<BigInt> magnitudes_;
  std::size_t max_errors_ = 0;
};

struct Decoded {
  Point codeword;
  Point error;
};

/// Integer lattice packing of Z^n with an error sphere. The decode table maps
/// each coset hit by the sphere to the unique sphere error in it.
class LatticeCode {
 public:
  /// Throws NotAPacking when two sphere errors share a coset.
  LatticeCode(Lattice lattice, ErrorSphere sphere, std::uint64_t budget = kDefaultBudget);

  const Lattice& lattice() const noexcept { return lattice_; }
  const ErrorSphere& sphere() const noexcept { return sphere_; }
  bool perfect() const noexcept { return perfect_; }
  const std::map<CosetLabel, Point>& table() const noexcept { return table_; }
  /// Set when the lattice came from a splitting sequence.
  const std::optional<SplittingSequence>& splitting() const noexcept { return splitting_; }
  void set_splitting(SplittingSequence s) { splitting_ = std::move(s); }

  /// Throws NotPerfect unless every syndrome has a table entry.
  Decoded decode(const Point& received) const;

  /// Whether q e_i is a codeword for every i, i.e. the code is the extension
  /// of a linear code over Z_q.
  bool wraps_modulo(const BigInt& q) const;

 private:
  Lattice lattice_;
  ErrorSphere sphere_;
  std::map<CosetLabel, Point> table_;
  bool perfect_ = false;
  std::optional<SplittingSequence> splitting_;
};

/// Perfect code correcting n - 1 asymmetric errors with per-cell magnitudes,
/// built from a tiling by the chair L = (l_i + 1), K = (l_i). Uses the
/// splitting construction when its hypothesis holds, the chair lattice
/// otherwise.
LatticeCode perfect_code(const std::vector<BigInt>& magnitudes, std::uint64_t budget = kDefaultBudget);

/// Codewords of a lattice code restricted to the alphabet [0, sigma)^n.
struct AlphabetCode {
  BigInt sigma;
  std::size_t length = 0;
  std::vector<Point> codewords;
};

/// Lattice points in [0, sigma)^n, checked pairwise non-confusable under the
/// sphere. Throws BudgetExceeded when sigma^n is over budget.
AlphabetCode extract_alphabet_code(const LatticeCode& code, const BigInt& sigma,
                                   std::uint64_t budget = kDefaultBudget);

struct SignCounts {
  std::size_t positive = 0;
  std::size_t negative = 0;
  bool operator==(const SignCounts&) const = default;
};

SignCounts n_plus_minus(const Point& p);

/// Nonexistence test for perfect lattice codes correcting n - 2 errors.
/// NoPerfectCode when |S(n, n-2, l)| divides none of
/// (l+1)^{n-2} (l+1+lambda(n-2-l)), 0 <= lambda <= l, or, for l >= 2, when the
/// forced codeword 2*1 - (l+1)(e_1 + e_2) breaks the sign-count bound.
/// Inconclusive otherwise. Throws BadParameters for n < 4.
Verdict nonexistence_divisibility_check(unsigned n, const BigInt& ell);

/// Number of sublattices of Z^n of the given index.
BigInt count_sublattices(unsigned n, const BigInt& index);

struct SearchResult {
  Verdict verdict;
  std::uint64_t examined = 0;
  std::uint64_t pruned = 0;
  std::vector<Lattice> found;  // sorted by canonical basis
};

/// Walks every sublattice of Z^n with index |S(n, t, l)| in canonical form,
/// discards those with a short vector violating the sign-count bound, and
/// keeps the ones that pack the sphere. Throws BudgetExceeded when the
/// number of sublattices is over budget.
SearchResult exhaustive_perfect_search(unsigned n, unsigned t, const BigInt& ell,
                                       std::uint64_t budget = kDefaultBudget);

}  // namespace chaircodes
