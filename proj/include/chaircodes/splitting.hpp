#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "chaircodes/chair.hpp"
#include "chaircodes/lattice.hpp"
#include "chaircodes/verdict.hpp"

namespace chaircodes {

/// Sequence beta_1..beta_n of residues in Z_m. A shape splits Z_m with it
/// when the values p . beta mod m over the shape's points are all distinct.
struct SplittingSequence {
  BigInt modulus;
  std::vector<BigInt> beta;
  /// Construction order: construction coordinate i is original coordinate
  /// permutation[i]. beta itself is always indexed by original coordinates.
  std::vector<std::size_t> permutation;

  bool operator==(const SplittingSequence&) const = default;
};

/// Images of the unit vectors in a non-cyclic quotient Z_{d_1} + ... + Z_{d_k}.
struct CompositeGroupLabeling {
  std::vector<BigInt> divisors;
  std::vector<CosetLabel> images;  // images[i] = label of e_i
};

using GroupLabeling = std::variant<SplittingSequence, CompositeGroupLabeling>;

/// l * (l - 1)^{-1} modulo l^n - (l - 1)^n, a unit of multiplicative order n.
BigInt alpha_unit(unsigned n, const BigInt& ell);

/// Splitting of Z_{l^n - (l-1)^n} by the uniform chair, beta_i = alpha^{i-1}.
SplittingSequence uniform_chair_splitting(unsigned n, const BigInt& ell);

/// beta_1 = 1, beta_{i+1} = k_{i+1}^{-1} l_i beta_i over Z_{prod l - prod k}.
/// Every k_i except the first must be a unit; when exactly one k is not, the
/// coordinates are rotated to put it first and the rotation is recorded.
/// Throws HypothesisViolated naming the offending k_i otherwise.
SplittingSequence general_chair_splitting(const Chair& c);

Verdict verify_splitting(const Chair& c, const SplittingSequence& s, std::uint64_t budget = kDefaultBudget);

/// Kernel of X -> X . beta mod m. Its volume is the size of the image, which
/// is m whenever some beta_i is a unit.
Lattice splitting_to_lattice(const SplittingSequence& s, std::size_t n);

/// Kernel of X -> (X . images^(j) mod d_j)_j.
Lattice labeling_to_lattice(const CompositeGroupLabeling& labeling);

/// Recovers the group labeling beta_i = phi(e_i) of Z^n / lattice. Cyclic
/// quotients come back as a SplittingSequence scaled so beta_1 = 1 when
/// beta_1 is a unit.
GroupLabeling lattice_to_splitting(const Lattice& lat);

/// Kernel of X -> sum_i X_i images[i] in Z_{moduli[0]} + ... componentwise.
Lattice kernel_lattice(const std::vector<CosetLabel>& images, const std::vector<BigInt>& moduli);

}  // namespace chaircodes
