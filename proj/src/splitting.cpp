#include "chaircodes/splitting.hpp"

#include <map>
#include <numeric>

namespace chaircodes {

BigInt alpha_unit(unsigned n, const BigInt& ell) {
  if (n < 2 || ell < 2) throw Error(Errc::BadParameters, "alpha_unit needs n >= 2 and l >= 2");
  const BigInt m = pow(ell, n) - pow(ell - 1, n);
  return floor_mod(ell * mod_inverse(ell - 1, m), m);
}

SplittingSequence uniform_chair_splitting(unsigned n, const BigInt& ell) {
  const BigInt alpha = alpha_unit(n, ell);
  SplittingSequence s;
  s.modulus = pow(ell, n) - pow(ell - 1, n);
  BigInt power = 1;
  for (unsigned i = 0; i < n; ++i) {
    s.beta.push_back(power);
    power = floor_mod(power * alpha, s.modulus);
  }
  s.permutation.resize(n);
  std::iota(s.permutation.begin(), s.permutation.end(), std::size_t{0});
  return s;
}

SplittingSequence general_chair_splitting(const Chair& c) {
  const auto sides = c.integer_sides();
  const auto notch = c.integer_notch();
  const std::size_t n = c.dim();
  BigInt tau = 1, kappa = 1;
  for (std::size_t i = 0; i < n; ++i) {
    tau *= sides[i];
    kappa *= notch[i];
  }
  const BigInt m = tau - kappa;

  std::vector<std::size_t> non_units;
  for (std::size_t i = 0; i < n; ++i)
    if (gcd(notch[i], m) != 1) non_units.push_back(i);
  if (non_units.size() > 1) {
    const std::size_t bad = non_units[0] == 0 ? non_units[1] : non_units[0];
    throw HypothesisViolated(bad, "k_" + std::to_string(bad + 1) + " = " + to_string(notch[bad]) +
                                      " is not a unit modulo " + to_string(m));
  }

  SplittingSequence s;
  s.modulus = m;
  s.permutation.resize(n);
  const std::size_t first = non_units.empty() ? 0 : non_units[0];
  for (std::size_t i = 0; i < n; ++i) s.permutation[i] = (first + i) % n;
  s.beta.assign(n, BigInt(0));
  if (m == 1) return s;

  BigInt b = 1;
  s.beta[s.permutation[0]] = b;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t cur = s.permutation[i];
    const std::size_t next = s.permutation[i + 1];
    b = floor_mod(mod_inverse(notch[next], m) * sides[cur] * b, m);
    s.beta[next] = b;
  }
  return s;
}

Verdict verify_splitting(const Chair& c, const SplittingSequence& s, std::uint64_t budget) {
  if (s.beta.size() != c.dim()) throw Error(Errc::DimensionMismatch, "splitting sequence length differs from chair");
  if (s.modulus < 1) throw Error(Errc::BadModulus, "splitting modulus must be positive");
  const auto points = c.enumerate_points(budget);
  std::map<BigInt, std::size_t> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    BigInt v = 0;
    for (std::size_t j = 0; j < c.dim(); ++j) v += points[i][j] * s.beta[j];
    v = floor_mod(v, s.modulus);
    auto [it, fresh] = seen.emplace(v, i);
    if (!fresh)
      return Verdict::fail("two chair points share the value " + to_string(v),
                           {to_rational(points[it->second]), to_rational(points[i])}, i + 1);
  }
  return Verdict::pass("all " + std::to_string(points.size()) + " chair values distinct", points.size());
}

Lattice kernel_lattice(const std::vector<CosetLabel>& images, const std::vector<BigInt>& moduli) {
  const std::size_t n = images.size();
  const std::size_t k = moduli.size();
  // Rows (e_i | images_i) and (0 | d_j e_j). The first n rows of the
  // triangular basis vanish on the last k columns and span the kernel.
  IntMatrix gen(n + k, n + k);
  for (std::size_t i = 0; i < n; ++i) {
    if (images[i].size() != k) throw Error(Errc::DimensionMismatch, "label length differs from moduli count");
    gen(i, i) = 1;
    for (std::size_t j = 0; j < k; ++j) gen(i, n + j) = images[i][j];
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (moduli[j] < 1) throw Error(Errc::BadModulus, "group moduli must be positive");
    gen(n + j, n + j) = moduli[j];
  }
  const IntMatrix h = hermite_basis(gen);
  IntMatrix basis(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i, j) = h(i, j);
  return Lattice(std::move(basis));
}

Lattice splitting_to_lattice(const SplittingSequence& s, std::size_t n) {
  if (s.beta.size() != n) throw Error(Errc::DimensionMismatch, "splitting sequence length differs from n");
  if (s.modulus < 1) throw Error(Errc::BadModulus, "splitting modulus must be positive");
  std::vector<CosetLabel> images;
  for (const auto& b : s.beta) images.push_back({b});
  return kernel_lattice(images, {s.modulus});
}

Lattice labeling_to_lattice(const CompositeGroupLabeling& labeling) {
  return kernel_lattice(labeling.images, labeling.divisors);
}

GroupLabeling lattice_to_splitting(const Lattice& lat) {
  const std::size_t n = lat.dim();
  const auto divisors = lat.quotient_divisors();
  std::vector<CosetLabel> images;
  for (std::size_t i = 0; i < n; ++i) {
    Point e(n, 0);
    e[i] = 1;
    images.push_back(lat.coset_label(e));
  }
  if (divisors.size() > 1) return CompositeGroupLabeling{divisors, std::move(images)};

  SplittingSequence s;
  s.modulus = divisors.empty() ? BigInt(1) : divisors[0];
  s.permutation.resize(n);
  std::iota(s.permutation.begin(), s.permutation.end(), std::size_t{0});
  for (const auto& img : images) s.beta.push_back(img.empty() ? BigInt(0) : img[0]);
  if (s.modulus > 1 && gcd(s.beta[0], s.modulus) == 1) {
    const BigInt scale = mod_inverse(s.beta[0], s.modulus);
    for (auto& b : s.beta) b = floor_mod(b * scale, s.modulus);
  }
  return s;
}

}  // namespace chaircodes
