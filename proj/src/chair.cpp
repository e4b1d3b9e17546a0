#include "chaircodes/chair.hpp"

namespace chaircodes {

Chair::Chair(std::vector<Rational> sides, std::vector<Rational> notch)
    : sides_(std::move(sides)), notch_(std::move(notch)) {
  if (sides_.empty()) throw Error(Errc::InvalidChair, "chair needs at least one dimension");
  if (sides_.size() != notch_.size())
    throw Error(Errc::InvalidChair, "L and K have different lengths");
  for (std::size_t i = 0; i < sides_.size(); ++i) {
    sides_[i].canonicalize();
    notch_[i].canonicalize();
    if (!(notch_[i] > 0 && notch_[i] < sides_[i]))
      throw Error(Errc::InvalidChair, "need 0 < k_" + std::to_string(i + 1) + " < l_" + std::to_string(i + 1) +
                                          ", got k=" + to_string(notch_[i]) + " l=" + to_string(sides_[i]));
    if (sides_[i].get_den() != 1 || notch_[i].get_den() != 1) discrete_ = false;
  }
}

Chair Chair::from_integers(const std::vector<BigInt>& sides, const std::vector<BigInt>& notch) {
  return Chair(std::vector<Rational>(sides.begin(), sides.end()), std::vector<Rational>(notch.begin(), notch.end()));
}

Chair Chair::uniform(std::size_t n, const BigInt& ell) {
  return from_integers(std::vector<BigInt>(n, ell), std::vector<BigInt>(n, ell - 1));
}

std::vector<BigInt> Chair::integer_sides() const {
  if (!discrete_) throw Error(Errc::NotDiscrete, "chair has non-integer parameters");
  std::vector<BigInt> out;
  for (const auto& s : sides_) out.push_back(s.get_num());
  return out;
}

std::vector<BigInt> Chair::integer_notch() const {
  if (!discrete_) throw Error(Errc::NotDiscrete, "chair has non-integer parameters");
  std::vector<BigInt> out;
  for (const auto& k : notch_) out.push_back(k.get_num());
  return out;
}

Rational Chair::volume() const {
  Rational box = 1, removed = 1;
  for (std::size_t i = 0; i < dim(); ++i) {
    box *= sides_[i];
    removed *= notch_[i];
  }
  return box - removed;
}

bool Chair::contains(const RPoint& p) const {
  if (p.size() != dim()) throw Error(Errc::DimensionMismatch, "point dimension does not match chair");
  bool outside_notch = false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (p[i] < 0 || p[i] >= sides_[i]) return false;
    if (p[i] < sides_[i] - notch_[i]) outside_notch = true;
  }
  return outside_notch;
}

bool Chair::contains(const Point& p) const { return contains(to_rational(p)); }

std::vector<Point> Chair::enumerate_points(std::uint64_t budget) const {
  if (!discrete_) throw Error(Errc::NotDiscrete, "cannot enumerate integer points of a non-integer chair");
  const Rational vol = volume();
  if (vol > Rational(BigInt(std::to_string(budget))))
    throw Error(Errc::BudgetExceeded, "chair volume " + to_string(vol) + " exceeds budget " + std::to_string(budget));

  const std::size_t n = dim();
  std::vector<long> side(n), open(n);
  for (std::size_t i = 0; i < n; ++i) {
    side[i] = sides_[i].get_num().get_si();
    open[i] = side[i] - notch_[i].get_num().get_si();
  }

  // Depth-first in lexicographic order. Once some coordinate falls below
  // l_j - k_j the rest range freely; the last coordinate must satisfy it
  // otherwise.
  std::vector<Point> out;
  out.reserve(vol.get_num().get_ui());
  std::vector<long> cur(n, 0);
  std::vector<char> freed(n + 1, 0);
  std::size_t depth = 0;
  std::vector<long> limit(n, 0);
  auto set_limit = [&](std::size_t d) {
    limit[d] = (freed[d] || d + 1 < n) ? side[d] : open[d];
  };
  set_limit(0);
  cur[0] = 0;
  for (;;) {
    if (cur[depth] < limit[depth]) {
      freed[depth + 1] = freed[depth] || cur[depth] < open[depth];
      if (depth + 1 == n) {
        Point p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = cur[i];
        out.push_back(std::move(p));
        ++cur[depth];
      } else {
        ++depth;
        cur[depth] = 0;
        set_limit(depth);
      }
    } else {
      if (depth == 0) break;
      --depth;
      ++cur[depth];
    }
  }
  return out;
}

bool Chair::shifted_copies_intersect(const RPoint& x) const {
  if (x.size() != dim()) throw Error(Errc::DimensionMismatch, "shift dimension does not match chair");
  bool low = false, high = false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (abs(x[i]) >= sides_[i]) return false;
    const Rational gap = sides_[i] - notch_[i];
    if (x[i] < gap) low = true;
    if (x[i] > -gap) high = true;
  }
  return low && high;
}

bool Chair::shifted_copies_intersect(const Point& x) const { return shifted_copies_intersect(to_rational(x)); }

BigInt Chair::denominator() const {
  BigInt d = 1;
  for (std::size_t i = 0; i < dim(); ++i) {
    d = lcm(d, sides_[i].get_den());
    d = lcm(d, notch_[i].get_den());
  }
  return d;
}

Chair Chair::scaled(const BigInt& factor) const {
  if (factor <= 0) throw Error(Errc::InvalidArgument, "chair scale factor must be positive");
  std::vector<Rational> s = sides_, k = notch_;
  for (auto& v : s) v *= factor;
  for (auto& v : k) v *= factor;
  return Chair(std::move(s), std::move(k));
}

Chair Chair::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != dim()) throw Error(Errc::DimensionMismatch, "permutation size does not match chair");
  std::vector<Rational> s(dim()), k(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    s[i] = sides_.at(perm[i]);
    k[i] = notch_.at(perm[i]);
  }
  return Chair(std::move(s), std::move(k));
}

}  // namespace chaircodes
