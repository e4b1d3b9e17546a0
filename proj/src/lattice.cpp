#include "chaircodes/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace chaircodes {

Lattice::Lattice(IntMatrix generator) : Lattice(std::move(generator), BigInt(1)) {}

Lattice::Lattice(IntMatrix scaled, BigInt denominator)
    : scaled_(std::move(scaled)), denominator_(std::move(denominator)) {
  if (!scaled_.square()) throw Error(Errc::NonSquare, "lattice generator must be square");
  det_ = determinant(scaled_);
  if (det_ == 0) throw Error(Errc::SingularMatrix, "lattice generator is singular");
  hnf_ = hermite_normal_form(scaled_);
  // Quotient structure only exists for integer lattices.
  if (denominator_ != 1) return;
  SmithForm snf = smith_normal_form(scaled_);
  divisors_ = snf.divisors();
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < divisors_.size(); ++j)
    if (divisors_[j] > 1) cols.push_back(j);
  label_transform_ = IntMatrix(dim(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    label_moduli_.push_back(divisors_[cols[c]]);
    for (std::size_t i = 0; i < dim(); ++i) label_transform_(i, c) = snf.right(i, cols[c]);
  }
}

Lattice Lattice::from_rows(const std::vector<RPoint>& rows) {
  BigInt den = 1;
  for (const auto& r : rows)
    for (const auto& v : r) den = lcm(den, v.get_den());
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw Error(Errc::DimensionMismatch, "ragged lattice generator");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational v = rows[i][j] * den;
      m(i, j) = v.get_num();
    }
  }
  return Lattice(std::move(m), std::move(den));
}

std::vector<RPoint> Lattice::generator() const {
  std::vector<RPoint> rows(dim(), RPoint(dim()));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      rows[i][j] = Rational(scaled_(i, j), denominator_);
      rows[i][j].canonicalize();
    }
  return rows;
}

Rational Lattice::volume() const {
  Rational v(abs(det_), pow(denominator_, dim()));
  v.canonicalize();
  return v;
}

void Lattice::require_integer(const char* what) const {
  if (!is_integer()) throw Error(Errc::NonIntegerLattice, std::string(what) + " needs an integer lattice");
}

const std::vector<BigInt>& Lattice::elementary_divisors() const {
  require_integer("elementary_divisors");
  return divisors_;
}

std::vector<BigInt> Lattice::quotient_divisors() const {
  require_integer("quotient_divisors");
  return label_moduli_;
}

bool Lattice::member(const Point& p) const {
  if (p.size() != dim()) throw Error(Errc::DimensionMismatch, "point dimension does not match lattice");
  Point x(dim());
  for (std::size_t i = 0; i < dim(); ++i) x[i] = p[i] * denominator_;
  return solves_integrally(std::move(x));
}

bool Lattice::member(const RPoint& p) const {
  if (p.size() != dim()) throw Error(Errc::DimensionMismatch, "point dimension does not match lattice");
  Point x(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    Rational v = p[i] * denominator_;
    v.canonicalize();
    if (v.get_den() != 1) return false;
    x[i] = v.get_num();
  }
  return solves_integrally(std::move(x));
}

bool Lattice::solves_integrally(Point x) const {
  // x = sum_i lambda_i * hnf_i, solved from the last coordinate down.
  for (std::size_t j = dim(); j-- > 0;) {
    if (!mpz_divisible_p(x[j].get_mpz_t(), hnf_(j, j).get_mpz_t())) return false;
    BigInt lambda = x[j] / hnf_(j, j);
    for (std::size_t c = 0; c <= j; ++c) x[c] -= lambda * hnf_(j, c);
  }
  return true;
}

CosetLabel Lattice::coset_label(const Point& p) const {
  require_integer("coset_label");
  if (p.size() != dim()) throw Error(Errc::DimensionMismatch, "point dimension does not match lattice");
  CosetLabel label(label_moduli_.size());
  for (std::size_t c = 0; c < label.size(); ++c) {
    BigInt acc = 0;
    for (std::size_t i = 0; i < dim(); ++i) acc += p[i] * label_transform_(i, c);
    label[c] = floor_mod(acc, label_moduli_[c]);
  }
  return label;
}

Lattice Lattice::scaled(const BigInt& factor) const {
  if (factor == 0) throw Error(Errc::SingularMatrix, "scaling a lattice by zero");
  std::vector<RPoint> rows = generator();
  for (auto& r : rows)
    for (auto& v : r) v *= factor;
  return from_rows(rows);
}

std::uint64_t Lattice::for_each_point_in_box(const Point& lo, const Point& hi,
                                             const std::function<bool(const Point&)>& visit,
                                             std::uint64_t budget) const {
  require_integer("box enumeration");
  const std::size_t n = dim();
  if (lo.size() != n || hi.size() != n) throw Error(Errc::DimensionMismatch, "box dimension does not match lattice");
  std::uint64_t count = 0;
  bool stop = false;
  Point x(n, 0);

  // Column `col` is fixed by the coefficient of hnf row `col`, since rows
  // below it are already chosen and rows above it vanish there.
  std::function<void(std::size_t)> descend = [&](std::size_t col) {
    const BigInt& pivot = hnf_(col, col);
    BigInt first = ceil_div(lo[col] - x[col], pivot);
    BigInt last = floor_div(hi[col] - x[col], pivot);
    if (first > last) return;
    Point saved(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(col + 1));
    for (std::size_t c = 0; c <= col; ++c) x[c] += first * hnf_(col, c);
    for (BigInt lambda = first; lambda <= last && !stop; ++lambda) {
      if (col == 0) {
        if (++count > budget)
          throw Error(Errc::BudgetExceeded, "lattice box enumeration exceeded budget " + std::to_string(budget));
        if (!visit(x)) stop = true;
      } else {
        descend(col - 1);
      }
      for (std::size_t c = 0; c <= col; ++c) x[c] += hnf_(col, c);
    }
    std::copy(saved.begin(), saved.end(), x.begin());
  };
  if (n > 0) descend(n - 1);
  return count;
}

Lattice chair_lattice(const Chair& c) {
  const std::size_t n = c.dim();
  std::vector<RPoint> rows(n, RPoint(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    rows[i][i] = c.sides()[i];
    if (n == 1) {
      rows[0][0] -= c.notch()[0];
      continue;
    }
    if (i + 1 < n)
      rows[i][i + 1] = -c.notch()[i + 1];
    else
      rows[i][0] = -c.notch()[0];
  }
  return Lattice::from_rows(rows);
}

namespace {

RPoint unscale(const Point& p, const BigInt& factor) {
  RPoint out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = Rational(p[i], factor);
    out[i].canonicalize();
  }
  return out;
}

}  // namespace

Verdict verify_packing(const Lattice& lat, const Chair& c, std::uint64_t budget) {
  if (lat.dim() != c.dim()) throw Error(Errc::DimensionMismatch, "lattice and chair dimensions differ");
  const BigInt factor = lcm(c.denominator(), lat.denominator());
  const Chair chair = c.scaled(factor);
  std::optional<Lattice> rescaled;
  if (factor != 1) rescaled = lat.scaled(factor);
  const Lattice& grid = rescaled ? *rescaled : lat;
  const std::size_t n = c.dim();
  const auto sides = chair.integer_sides();
  Point lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    hi[i] = sides[i] - 1;
    lo[i] = -hi[i];
  }
  std::optional<Point> hit;
  const std::uint64_t examined = grid.for_each_point_in_box(
      lo, hi,
      [&](const Point& x) {
        bool zero = std::all_of(x.begin(), x.end(), [](const BigInt& v) { return v == 0; });
        if (!zero && chair.shifted_copies_intersect(x)) {
          hit = x;
          return false;
        }
        return true;
      },
      budget);
  if (hit) {
    Point shared(n);
    for (std::size_t i = 0; i < n; ++i) shared[i] = (*hit)[i] > 0 ? (*hit)[i] : BigInt(0);
    return Verdict::fail("chair meets its translate by a nonzero lattice vector",
                         {unscale(*hit, factor), unscale(shared, factor)}, examined);
  }
  return Verdict::pass("no translate by a nonzero lattice vector meets the chair", examined);
}

Verdict verify_tiling(const Lattice& lat, const Chair& c, std::uint64_t budget) {
  if (lat.dim() != c.dim()) throw Error(Errc::DimensionMismatch, "lattice and chair dimensions differ");
  std::uint64_t examined = 0;

  if (c.is_discrete() && lat.is_integer()) {
    const auto points = c.enumerate_points(budget);
    std::map<CosetLabel, std::size_t> seen;
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto [it, fresh] = seen.emplace(lat.coset_label(points[i]), i);
      if (!fresh)
        return Verdict::fail("two chair points share a coset",
                             {to_rational(points[it->second]), to_rational(points[i])}, i + 1);
    }
    examined += points.size();
  }

  Verdict packing = verify_packing(lat, c, budget);
  examined += packing.examined;
  if (!packing.ok()) {
    packing.examined = examined;
    return packing;
  }
  if (lat.volume() != c.volume()) {
    return Verdict::fail("lattice volume " + to_string(lat.volume()) + " differs from chair volume " +
                             to_string(c.volume()) + "; some points are left uncovered",
                         {}, examined);
  }
  return Verdict::pass("packing with lattice volume " + to_string(lat.volume()) + " equal to the chair volume", examined);
}

Verdict torus_tiling_oracle(const Lattice& lat, const Chair& c, std::optional<BigInt> modulus,
                            std::uint64_t budget) {
  if (lat.dim() != c.dim()) throw Error(Errc::DimensionMismatch, "lattice and chair dimensions differ");
  if (!c.is_discrete()) throw Error(Errc::NotDiscrete, "torus oracle needs a discrete chair");
  if (!lat.is_integer()) throw Error(Errc::NonIntegerLattice, "torus oracle needs an integer lattice");
  const std::size_t n = c.dim();
  const BigInt m = modulus ? *modulus : BigInt(lat.volume().get_num());
  if (m < 1) throw Error(Errc::BadModulus, "torus modulus must be positive");
  for (std::size_t i = 0; i < n; ++i) {
    Point e(n, 0);
    e[i] = m;
    if (!lat.member(e)) throw Error(Errc::BadModulus, to_string(m) + "*e_" + std::to_string(i + 1) + " is not in the lattice");
  }
  const BigInt cells_big = pow(m, n);
  if (cells_big > BigInt(std::to_string(budget)))
    throw Error(Errc::BudgetExceeded, "torus has " + to_string(cells_big) + " cells, over budget " + std::to_string(budget));
  const long mod = m.get_si();
  const std::size_t cells = cells_big.get_ui();

  auto index_of = [&](const std::vector<long>& v) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) idx = idx * static_cast<std::size_t>(mod) + static_cast<std::size_t>(v[i]);
    return idx;
  };
  auto point_of = [&](std::size_t idx) {
    std::vector<long> v(n);
    for (std::size_t i = n; i-- > 0;) {
      v[i] = static_cast<long>(idx % static_cast<std::size_t>(mod));
      idx /= static_cast<std::size_t>(mod);
    }
    return v;
  };

  // Lattice points of the torus: closure of 0 under the basis rows mod m.
  std::vector<std::vector<long>> steps(n, std::vector<long>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j) steps[r][j] = floor_mod(lat.integer_generator()(r, j), m).get_si();
  std::vector<char> is_lattice(cells, 0);
  std::deque<std::size_t> queue{0};
  is_lattice[0] = 1;
  std::vector<std::size_t> lattice_points;
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    lattice_points.push_back(cur);
    const auto v = point_of(cur);
    for (const auto& step : steps) {
      std::vector<long> w(n);
      for (std::size_t j = 0; j < n; ++j) w[j] = (v[j] + step[j]) % mod;
      const std::size_t idx = index_of(w);
      if (!is_lattice[idx]) {
        is_lattice[idx] = 1;
        queue.push_back(idx);
      }
    }
  }

  std::vector<std::vector<long>> shape;
  for (const auto& p : c.enumerate_points(budget)) {
    std::vector<long> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = floor_mod(p[j], m).get_si();
    shape.push_back(std::move(v));
  }

  auto witness_of = [&](std::size_t idx) {
    const auto v = point_of(idx);
    RPoint r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = v[j];
    return r;
  };

  std::vector<std::uint32_t> cover(cells, 0);
  std::vector<long> w(n);
  for (const std::size_t base : lattice_points) {
    const auto b = point_of(base);
    for (const auto& s : shape) {
      for (std::size_t j = 0; j < n; ++j) w[j] = (b[j] + s[j]) % mod;
      const std::size_t idx = index_of(w);
      if (++cover[idx] > 1)
        return Verdict::fail("torus cell covered twice", {witness_of(idx), witness_of(base)}, cells);
    }
  }
  for (std::size_t idx = 0; idx < cells; ++idx)
    if (cover[idx] == 0) return Verdict::fail("torus cell left uncovered", {witness_of(idx)}, cells);
  return Verdict::pass("torus cover exact: " + std::to_string(lattice_points.size()) + " copies on " +
                           std::to_string(cells) + " cells",
                       cells);
}

}  // namespace chaircodes
