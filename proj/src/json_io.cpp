#include "chaircodes/json_io.hpp"

namespace chaircodes {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::ParseError, "malformed JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::string text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  malformed("expected a number string, got " + j.dump());
}

std::vector<Rational> rational_list(const Json& j) {
  if (!j.is_array()) malformed("expected an array");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(parse_rational(text(v)));
  return out;
}

std::vector<std::vector<Rational>> rational_rows(const Json& j) {
  if (!j.is_array() || j.empty()) malformed("expected a non-empty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) rows.push_back(rational_list(r));
  return rows;
}

std::size_t count(const Json& j) {
  const BigInt v = parse_integer(text(j));
  if (v < 0 || !v.fits_ulong_p()) malformed("expected a small nonnegative count");
  return v.get_ui();
}

}  // namespace

std::string label_key(const CosetLabel& label) { return join(label); }

Json to_json(const Point& p) {
  Json out = Json::array();
  for (const auto& v : p) out.push_back(to_string(v));
  return out;
}

Json to_json(const RPoint& p) {
  Json out = Json::array();
  for (const auto& v : p) out.push_back(to_string(v));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const Chair& c) { return Json{{"L", to_json(c.sides())}, {"K", to_json(c.notch())}}; }

Json to_json(const Lattice& lat) {
  Json rows = Json::array();
  for (const auto& r : lat.generator()) rows.push_back(to_json(r));
  return Json{{"generator", rows}};
}

Json to_json(const SplittingSequence& s) {
  Json perm = Json::array();
  for (auto p : s.permutation) perm.push_back(std::to_string(p));
  return Json{{"m", to_string(s.modulus)}, {"beta", to_json(s.beta)}, {"permutation", perm}};
}

Json to_json(const CompositeGroupLabeling& g) {
  Json images = Json::array();
  for (const auto& img : g.images) images.push_back(to_json(img));
  return Json{{"divisors", to_json(g.divisors)}, {"images", images}};
}

Json to_json(const Verdict& v) {
  Json witness = Json::array();
  for (const auto& w : v.witness) witness.push_back(to_json(w));
  return Json{{"status", std::string(verdict_status_name(v.status))},
              {"reason", v.reason},
              {"witness", witness},
              {"examined", std::to_string(v.examined)}};
}

Json to_json(const LatticeCode& code) {
  Json table = Json::object();
  for (const auto& [label, err] : code.table()) table[label_key(label)] = to_json(err);
  Json out{{"n", std::to_string(code.sphere().length())},
           {"t", std::to_string(code.sphere().max_errors())},
           {"magnitudes", to_json(code.sphere().magnitudes())},
           {"generator", to_json(code.lattice().integer_generator())},
           {"divisors", to_json(code.lattice().quotient_divisors())},
           {"perfect", code.perfect()}};
  if (code.splitting()) out["splitting"] = to_json(*code.splitting());
  out["table"] = table;
  return out;
}

Json to_json(const Coloring& col) {
  std::vector<std::uint64_t> sizes(col.sigma, 0);
  for (auto k : col.colors)
    if (k < sizes.size()) ++sizes[k];
  Json classes = Json::array();
  for (auto s : sizes) classes.push_back(std::to_string(s));
  return Json{{"q", std::to_string(col.q)},
              {"n", std::to_string(col.n)},
              {"colors", std::to_string(col.sigma)},
              {"states", std::to_string(col.cells())},
              {"view", col.torus ? "torus" : "interior"},
              {"class_sizes", classes}};
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) malformed("expected an integer array");
  Point p;
  for (const auto& v : j) p.push_back(parse_integer(text(v)));
  return p;
}

Chair chair_from_json(const Json& j) { return Chair(rational_list(field(j, "L")), rational_list(field(j, "K"))); }

Lattice lattice_from_json(const Json& j) {
  const auto rows = rational_rows(field(j, "generator"));
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw Error(Errc::NonSquare, "generator must be square");
  return Lattice::from_rows(rows);
}

SplittingSequence splitting_from_json(const Json& j) {
  SplittingSequence s;
  s.modulus = parse_integer(text(field(j, "m")));
  s.beta = point_from_json(field(j, "beta"));
  if (j.contains("permutation")) {
    for (const auto& p : j.at("permutation")) s.permutation.push_back(count(p));
  } else {
    for (std::size_t i = 0; i < s.beta.size(); ++i) s.permutation.push_back(i);
  }
  if (s.permutation.size() != s.beta.size()) malformed("permutation length differs from beta");
  return s;
}

LatticeCode code_from_json(const Json& j, std::uint64_t budget) {
  Lattice lat = lattice_from_json(j);
  const auto mags = point_from_json(field(j, "magnitudes"));
  const std::size_t t = count(field(j, "t"));
  if (j.contains("n") && count(j.at("n")) != mags.size()) malformed("n differs from the magnitude count");
  LatticeCode code(std::move(lat), ErrorSphere::per_cell(mags, t), budget);
  if (j.contains("splitting")) code.set_splitting(splitting_from_json(j.at("splitting")));
  if (j.contains("perfect") && j.at("perfect").is_boolean() && j.at("perfect").get<bool>() != code.perfect())
    malformed("stored \"perfect\" flag disagrees with the lattice");
  if (j.contains("table")) {
    const Json& table = j.at("table");
    if (!table.is_object() || table.size() != code.table().size()) malformed("decode table size mismatch");
    for (const auto& [label, err] : code.table()) {
      const std::string key = label_key(label);
      if (!table.contains(key) || point_from_json(table.at(key)) != err)
        malformed("decode table entry " + key + " disagrees with the lattice");
    }
  }
  return code;
}

}  // namespace chaircodes
