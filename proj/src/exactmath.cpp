#include "chaircodes/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace chaircodes {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidChair: return "InvalidChair";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NonSquare: return "NonSquare";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NotDiscrete: return "NotDiscrete";
    case Errc::NonIntegerLattice: return "NonIntegerLattice";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::BadModulus: return "BadModulus";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::NotPerfect: return "NotPerfect";
    case Errc::NotAPacking: return "NotAPacking";
    case Errc::NotATiling: return "NotATiling";
    case Errc::BadParameters: return "BadParameters";
  }
  return "Unknown";
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Point>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw Error(Errc::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Point IntMatrix::row(std::size_t r) const {
  return Point(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntMatrix IntMatrix::scaled(const BigInt& factor) const {
  IntMatrix out = *this;
  for (auto& v : out.data_) v *= factor;
  return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

Point operator*(const Point& v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw Error(Errc::DimensionMismatch, "vector/matrix shape mismatch");
  Point out(m.cols());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[k] * m(k, j);
  }
  return out;
}

BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  if (m < 2) throw Error(Errc::InvalidArgument, "mod_inverse: modulus must be >= 2");
  // Extended Euclid on (a mod m, m).
  BigInt r0 = m, r1 = floor_mod(a, m);
  BigInt s0 = 0, s1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    BigInt s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) {
    throw Error(Errc::NotInvertible,
                to_string(a) + " is not invertible modulo " + to_string(m) + " (gcd " + to_string(r0) + ")");
  }
  return floor_mod(s0, m);
}

BigInt determinant(const IntMatrix& m) {
  if (!m.square()) throw Error(Errc::NonSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<BigInt> SmithForm::divisors() const {
  std::vector<BigInt> d(diagonal.rows());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = diagonal(i, i);
  return d;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  if (!m.square()) throw Error(Errc::NonSquare, "smith_normal_form of a non-square matrix");
  const std::size_t n = m.rows();
  SmithForm f{IntMatrix::identity(n), m, IntMatrix::identity(n)};
  IntMatrix& d = f.diagonal;

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero magnitude in the trailing block.
      std::size_t pr = n, pc = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d(i, j) != 0 && (pr == n || abs(d(i, j)) < abs(d(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == n) throw Error(Errc::SingularMatrix, "smith_normal_form of a singular matrix");
      d.swap_rows(t, pr);
      f.left.swap_rows(t, pr);
      d.swap_cols(t, pc);
      f.right.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (d(i, t) == 0) continue;
        BigInt q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        f.left.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        BigInt q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        f.right.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every entry of the trailing block.
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == n) break;
      d.add_row_multiple(t, bad, 1);
      f.left.add_row_multiple(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      f.left.negate_row(t);
    }
  }
  return f;
}

IntMatrix hermite_basis(const IntMatrix& generators) {
  const std::size_t k = generators.rows();
  const std::size_t n = generators.cols();
  if (k < n) throw Error(Errc::SingularMatrix, "hermite_basis: fewer generators than columns");
  IntMatrix a = generators;
  // Rows [0, active) are still in play; pivot rows are parked at index `col`
  // once the rows above have been cleared in that column.
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  std::size_t active = k;
  IntMatrix out(n, n);

  for (std::size_t c = n; c-- > 0;) {
    for (;;) {
      std::size_t pivot = active;
      for (std::size_t i = 0; i < active; ++i) {
        const BigInt& v = a(order[i], c);
        if (v != 0 && (pivot == active || abs(v) < abs(a(order[pivot], c)))) pivot = i;
      }
      if (pivot == active) throw Error(Errc::SingularMatrix, "hermite_basis: rank deficient generators");
      bool clean = true;
      const std::size_t pr = order[pivot];
      for (std::size_t i = 0; i < active; ++i) {
        if (i == pivot) continue;
        const std::size_t r = order[i];
        if (a(r, c) == 0) continue;
        BigInt q = floor_div(a(r, c), a(pr, c));
        a.add_row_multiple(r, pr, -q);
        if (a(r, c) != 0) clean = false;
      }
      if (clean) {
        std::swap(order[pivot], order[active - 1]);
        --active;
        const std::size_t r = order[active];
        if (a(r, c) < 0) a.negate_row(r);
        for (std::size_t j = 0; j < n; ++j) out(c, j) = a(r, j);
        break;
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j-- > 0;) {
      BigInt q = floor_div(out(i, j), out(j, j));
      out.add_row_multiple(i, j, -q);
    }
  return out;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  if (!m.square()) throw Error(Errc::NonSquare, "hermite_normal_form of a non-square matrix");
  return hermite_basis(m);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

}  // namespace

BigInt parse_integer(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw Error(Errc::ParseError, "not an integer: '" + std::string(text) + "'");
  BigInt v;
  v.set_str(std::string(digits), 10);
  return s.front() == '-' ? BigInt(-v) : v;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  const auto bad = [&] { return Error(Errc::ParseError, "not an exact number: '" + std::string(text) + "'"); };
  if (s.empty()) throw bad();
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(s.substr(0, slash));
    std::string_view den_text = trim(s.substr(slash + 1));
    if (!all_digits(den_text)) throw bad();
    BigInt den = parse_integer(den_text);
    if (den == 0) throw bad();
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    bool negative = s.front() == '-';
    std::string_view body = s;
    if (body.front() == '-' || body.front() == '+') body.remove_prefix(1);
    dot = body.find('.');
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw bad();
    BigInt num;
    num.set_str(std::string(whole) + std::string(frac), 10);
    Rational r(num, pow(BigInt(10), frac.size()));
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }
  return Rational(parse_integer(s));
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str(10);
  return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

std::string join(const Point& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += to_string(v[i]);
  }
  return out;
}

namespace {

std::vector<std::string_view> split_csv(std::string_view csv) {
  std::vector<std::string_view> parts;
  if (trim(csv).empty()) throw Error(Errc::ParseError, "empty list");
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = csv.find(',', start);
    parts.push_back(csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

}  // namespace

std::vector<BigInt> parse_integer_list(std::string_view csv) {
  std::vector<BigInt> out;
  for (auto part : split_csv(csv)) out.push_back(parse_integer(part));
  return out;
}

std::vector<Rational> parse_rational_list(std::string_view csv) {
  std::vector<Rational> out;
  for (auto part : split_csv(csv)) out.push_back(parse_rational(part));
  return out;
}

RPoint to_rational(const Point& p) { return RPoint(p.begin(), p.end()); }

}  // namespace chaircodes
