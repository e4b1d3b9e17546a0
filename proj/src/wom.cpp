#include "chaircodes/wom.hpp"

#include <map>
#include <ostream>

namespace chaircodes {

std::uint64_t Coloring::index(const Point& p) const {
  if (p.size() != n) throw Error(Errc::DimensionMismatch, "state length differs from coloring");
  std::uint64_t idx = 0;
  for (const auto& v : p) {
    if (v < 0 || v >= q) throw Error(Errc::InvalidArgument, "state outside [0, q)^n");
    idx = idx * q + v.get_ui();
  }
  return idx;
}

Point Coloring::state(std::uint64_t idx) const {
  Point p(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    p[i] = static_cast<unsigned long>(idx % q);
    idx /= q;
  }
  return p;
}

Coloring build_coloring(const Lattice& lat, const Chair& c, std::uint64_t q, std::uint64_t budget) {
  if (q < 1) throw Error(Errc::BadParameters, "q must be at least 1");
  if (lat.dim() != c.dim()) throw Error(Errc::DimensionMismatch, "lattice and chair dimensions differ");
  const std::size_t n = c.dim();
  const BigInt cells = pow(BigInt(static_cast<unsigned long>(q)), n);
  if (cells > BigInt(std::to_string(budget)))
    throw Error(Errc::BudgetExceeded, "grid has " + to_string(cells) + " states, over budget");
  if (!c.is_discrete() || !lat.is_integer()) throw Error(Errc::NotATiling, "coloring needs an integer tiling");
  const Verdict tiling = verify_tiling(lat, c, budget);
  if (!tiling.ok()) throw Error(Errc::NotATiling, "not a tiling: " + tiling.reason);

  std::map<CosetLabel, std::uint32_t> palette;
  for (const auto& p : c.enumerate_points(budget))
    palette.emplace(lat.coset_label(p), static_cast<std::uint32_t>(palette.size()));

  Coloring col;
  col.q = q;
  col.n = n;
  col.sigma = palette.size();
  col.colors.resize(cells.get_ui());
  for (std::uint64_t i = 0; i < col.colors.size(); ++i) col.colors[i] = palette.at(lat.coset_label(col.state(i)));

  col.torus = true;
  for (std::size_t i = 0; i < n && col.torus; ++i) {
    Point e(n, 0);
    e[i] = static_cast<unsigned long>(q);
    col.torus = lat.member(e);
  }
  return col;
}

Verdict check_write_guarantee(const Coloring& col, const Chair& c, std::uint64_t budget) {
  if (c.dim() != col.n) throw Error(Errc::DimensionMismatch, "chair and coloring dimensions differ");
  const auto shape = c.enumerate_points(budget);
  const BigInt q(static_cast<unsigned long>(col.q));
  std::uint64_t anchors = 0;
  std::vector<std::uint32_t> seen(col.sigma, 0);
  Point cell(col.n);
  for (std::uint64_t a = 0; a < col.cells(); ++a) {
    const Point p = col.state(a);
    bool fits = true;
    std::fill(seen.begin(), seen.end(), 0);
    for (const auto& e : shape) {
      for (std::size_t i = 0; i < col.n; ++i) {
        cell[i] = p[i] - e[i];
        if (col.torus)
          cell[i] = floor_mod(cell[i], q);
        else if (cell[i] < 0)
          fits = false;
      }
      if (!fits) break;
      const std::uint32_t k = col.colors[col.index(cell)];
      if (k < seen.size()) ++seen[k];
    }
    if (!fits) continue;
    ++anchors;
    for (std::size_t k = 0; k < seen.size(); ++k)
      if (seen[k] != 1)
        return Verdict::fail("anchor (" + join(p) + ") sees color " + std::to_string(k) + " " +
                                 std::to_string(seen[k]) + " times",
                             {to_rational(p)}, anchors);
    if (shape.size() != col.sigma)
      return Verdict::fail("chair size differs from the color count", {to_rational(p)}, anchors);
  }
  const std::string view = col.torus ? "torus" : "interior";
  if (anchors == 0) return Verdict{VerdictStatus::Inconclusive, "no interior anchor fits a full chair", {}, 0};
  return Verdict::pass(view + " view: all " + std::to_string(anchors) + " anchors see every color once", anchors);
}

void write_coloring_csv(const Coloring& col, std::ostream& out) {
  for (std::uint64_t i = 0; i < col.cells(); ++i) out << join(col.state(i)) << ',' << col.colors[i] << '\n';
}

void write_coloring_binary(const Coloring& col, std::ostream& out) {
  if (col.sigma > 65536) throw Error(Errc::BadParameters, "more than 65536 colors do not fit in 16 bits");
  out.write("WOMCOLR1", 8);
  for (auto k : col.colors) {
    const char bytes[2] = {static_cast<char>(k & 0xff), static_cast<char>((k >> 8) & 0xff)};
    out.write(bytes, 2);
  }
}

}  // namespace chaircodes
