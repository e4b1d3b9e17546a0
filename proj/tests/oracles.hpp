#pragma once

// Brute-force reference implementations used to cross-check the library.
// They share no code with it: plain 64-bit integers, naive scans, and
// cofactor expansion instead of elimination.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;

inline long long cofactor_det(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  long long det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      Vec row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(row);
    }
    det += (c % 2 ? -1 : 1) * m[0][c] * cofactor_det(minor);
  }
  return det;
}

// adj(M) with M * adj(M) = det(M) I.
inline Mat adjugate(const Mat& m) {
  const std::size_t n = m.size();
  Mat adj(n, Vec(n, 1));
  if (n == 1) return adj;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        Vec row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(m[r][c]);
        minor.push_back(row);
      }
      adj[j][i] = ((i + j) % 2 ? -1 : 1) * cofactor_det(minor);
    }
  return adj;
}

// y is an integer combination of the rows of G iff y adj(G) = 0 mod det(G).
inline bool member(const Mat& g, const Vec& y) {
  const long long d = cofactor_det(g);
  const Mat adj = adjugate(g);
  for (std::size_t j = 0; j < g.size(); ++j) {
    long long s = 0;
    for (std::size_t i = 0; i < g.size(); ++i) s += y[i] * adj[i][j];
    if (s % d != 0) return false;
  }
  return true;
}

inline long long inverse_mod(long long a, long long m) {
  a = ((a % m) + m) % m;
  for (long long x = 1; x < m; ++x)
    if (a * x % m == 1) return x;
  return 0;
}

inline long long order_mod(long long a, long long m) {
  long long x = a % m;
  for (long long k = 1; k <= m; ++k) {
    if (x == 1) return k;
    x = x * a % m;
  }
  return 0;
}

// Calls f on every point of [lo, hi] (inclusive), last coordinate fastest.
template <class F>
void for_box(const Vec& lo, const Vec& hi, F&& f) {
  Vec x = lo;
  for (;;) {
    f(x);
    std::size_t i = x.size();
    while (i > 0) {
      --i;
      if (++x[i] <= hi[i]) break;
      x[i] = lo[i];
      if (i == 0) return;
    }
    if (x.empty()) return;
  }
}

inline bool in_chair(const Vec& l, const Vec& k, const Vec& x) {
  bool notch_free = false;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (x[i] < 0 || x[i] >= l[i]) return false;
    if (x[i] < l[i] - k[i]) notch_free = true;
  }
  return notch_free;
}

inline std::vector<Vec> chair_points(const Vec& l, const Vec& k) {
  std::vector<Vec> pts;
  Vec hi(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) hi[i] = l[i] - 1;
  for_box(Vec(l.size(), 0), hi, [&](const Vec& x) {
    if (in_chair(l, k, x)) pts.push_back(x);
  });
  return pts;
}

// Chair and chair + shift share an integer point.
inline bool copies_meet(const Vec& l, const Vec& k, const Vec& shift) {
  for (const auto& p : chair_points(l, k)) {
    Vec q = p;
    for (std::size_t i = 0; i < q.size(); ++i) q[i] -= shift[i];
    if (in_chair(l, k, q)) return true;
  }
  return false;
}

inline Mat chair_matrix(const Vec& l, const Vec& k) {
  const std::size_t n = l.size();
  Mat g(n, Vec(n, 0));
  if (n == 1) {
    g[0][0] = l[0] - k[0];
    return g;
  }
  for (std::size_t i = 0; i < n; ++i) {
    g[i][i] = l[i];
    g[i][(i + 1) % n] -= k[(i + 1) % n];
  }
  return g;
}

// Every point of Z^n is covered exactly once by the translates, checked by
// counting covers of each cell in a box of radius `reach` around 0.
inline bool tiles_locally(const Mat& g, const Vec& l, const Vec& k, long long reach) {
  const std::size_t n = l.size();
  const auto pts = chair_points(l, k);
  std::map<Vec, int> cover;
  Vec lo(n), hi(n);
  long long span = 0;
  for (auto v : l) span = std::max(span, v);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = -reach - span;
    hi[i] = reach + span;
  }
  for_box(lo, hi, [&](const Vec& x) {
    if (!member(g, x)) return;
    for (const auto& p : pts) {
      Vec y(n);
      bool near = true;
      for (std::size_t i = 0; i < n; ++i) {
        y[i] = x[i] + p[i];
        near = near && std::llabs(y[i]) <= reach;
      }
      if (near) ++cover[y];
    }
  });
  Vec rlo(n, -reach), rhi(n, reach);
  bool ok = true;
  for_box(rlo, rhi, [&](const Vec& y) {
    auto it = cover.find(y);
    if (it == cover.end() || it->second != 1) ok = false;
  });
  return ok;
}

inline std::vector<Vec> sphere_points(std::size_t n, std::size_t t, long long ell) {
  std::vector<Vec> pts;
  for_box(Vec(n, 0), Vec(n, ell), [&](const Vec& x) {
    std::size_t w = 0;
    for (auto v : x) w += v != 0;
    if (w <= t) pts.push_back(x);
  });
  return pts;
}

// Nearest codeword by exhaustive search over the sphere errors.
inline std::vector<std::pair<Vec, Vec>> decodings(const Mat& g, const std::vector<Vec>& sphere, const Vec& y) {
  std::vector<std::pair<Vec, Vec>> out;
  for (const auto& e : sphere) {
    Vec x = y;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= e[i];
    if (member(g, x)) out.emplace_back(x, e);
  }
  return out;
}

inline long long binom(long long n, long long k) {
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
