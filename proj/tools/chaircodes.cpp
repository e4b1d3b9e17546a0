// chaircodes command-line front end. Talks to the library only through the
// C interface; every report is a JSON document on stdout.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "chaircodes/chaircodes.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kInternal = 1, kInput = 2, kNotPerfect = 3, kBudget = 4, kVerification = 5 };

int exit_code(cc_status s) {
  switch (s) {
    case CC_OK: return kOk;
    case CC_NOT_PERFECT: return kNotPerfect;
    case CC_BUDGET_EXCEEDED: return kBudget;
    case CC_NOT_A_TILING:
    case CC_NOT_A_PACKING: return kVerification;
    case CC_INTERNAL: return kInternal;
    default: return kInput;
  }
}

// A failed library call, carried up to main.
struct Failure {
  cc_status status;
  std::string message;
};

void check(cc_status s) {
  if (s != CC_OK) throw Failure{s, cc_last_error()};
}

[[noreturn]] void input_error(const std::string& message) { throw Failure{CC_INVALID_ARGUMENT, message}; }

// Takes ownership of a library string and parses it.
Json take_json(char* s) {
  Json j = Json::parse(s);
  cc_string_free(s);
  return j;
}

std::string take_string(char* s) {
  std::string out(s);
  cc_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(ptr); }
  T** out() { return &ptr; }
  T* get() const { return ptr; }
};

using Chair = Handle<cc_chair, cc_chair_free>;
using Lattice = Handle<cc_lattice, cc_lattice_free>;
using Code = Handle<cc_code, cc_code_free>;
using Coloring = Handle<cc_coloring, cc_coloring_free>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{CC_INVALID_ARGUMENT, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t default_budget() {
  const char* env = std::getenv("CHAIRCODES_BUDGET");
  if (env == nullptr || *env == '\0') return CC_DEFAULT_BUDGET;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) input_error(std::string("CHAIRCODES_BUDGET must be a positive integer, got ") + env);
  return v;
}

bool failed(const Json& verdict) { return verdict.at("status") == "Fail"; }

struct Report {
  std::string command;
  Json parameters = Json::object();
  Json verdicts = Json::object();
  Json artifacts = Json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  Json finish() const {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << ms;
    return Json{{"command", command},
                {"parameters", parameters},
                {"verdicts", verdicts},
                {"artifacts", artifacts},
                {"timings_ms", {{"total", t.str()}}}};
  }
};

struct Options {
  std::string l, k, method = "auto", out = "json", magnitudes, code_out;
  std::string lattice_file, modulus, code_file, received, mode = "divisibility", output;
  unsigned n = 0;
  std::optional<unsigned> t_given;
  std::string ell;
  std::uint64_t q = 0;
  std::optional<std::uint64_t> budget;
  bool torus = false, wom_check = false;

  std::uint64_t effective_budget() const { return budget ? *budget : default_budget(); }
};

void make_chair(const Options& o, Chair& chair, Report& r) {
  if (o.l.empty() || o.k.empty()) input_error("--l and --k are required");
  r.parameters["l"] = o.l;
  r.parameters["k"] = o.k;
  check(cc_chair_new(o.l.c_str(), o.k.c_str(), chair.out()));
}

cc_method method_of(const std::string& m) {
  if (m == "auto") return CC_METHOD_AUTO;
  if (m == "splitting") return CC_METHOD_SPLITTING;
  return CC_METHOD_LATTICE;
}

int run_construct(Options o, std::ostream& out) {
  Report r{"construct"};
  if (!o.magnitudes.empty()) {
    // L = l_i + 1, K = l_i, the chair whose tiling is a perfect code.
    std::vector<std::string> parts;
    std::stringstream ss(o.magnitudes);
    for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
    std::string ls, ks;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      char* end = nullptr;
      const long v = std::strtol(parts[i].c_str(), &end, 10);
      if (parts[i].empty() || *end != '\0' || v < 1) input_error("--magnitudes must be positive integers");
      ls += (i ? "," : "") + std::to_string(v + 1);
      ks += (i ? "," : "") + std::to_string(v);
    }
    if (!o.l.empty() || !o.k.empty()) input_error("--magnitudes replaces --l and --k");
    o.l = ls;
    o.k = ks;
    r.parameters["magnitudes"] = o.magnitudes;
  }
  Chair chair;
  make_chair(o, chair, r);
  r.parameters["method"] = o.method;
  r.parameters["out"] = o.out;
  const std::uint64_t budget = o.effective_budget();

  char* report = nullptr;
  check(cc_construct(chair.get(), method_of(o.method), budget, nullptr, &report));
  Json built = take_json(report);
  r.verdicts["tiling"] = built.at("verdict");
  r.artifacts["method"] = built.at("method");
  r.artifacts["generator"] = built.at("generator");
  r.artifacts["volume"] = built.at("volume");
  r.artifacts["splitting"] = built.at("splitting");
  r.artifacts["fallback"] = built.at("fallback");

  if (!o.code_out.empty()) {
    std::string mags = o.magnitudes;
    if (mags.empty()) {
      // Only chairs with l_i = k_i + 1 are code spheres; use K as the magnitudes.
      char* cj = nullptr;
      check(cc_chair_to_json(chair.get(), &cj));
      const Json cjson = take_json(cj);
      for (std::size_t i = 0; i < cjson["K"].size(); ++i) {
        const std::string kv = cjson["K"][i];
        const std::string lv = cjson["L"][i];
        if (kv.find('/') != std::string::npos || lv.find('/') != std::string::npos ||
            std::stol(lv) != std::stol(kv) + 1)
          input_error("--code-out needs l_i = k_i + 1 for every i (or use --magnitudes)");
        mags += (i ? "," : "") + kv;
      }
    }
    Code code;
    check(cc_code_perfect(mags.c_str(), budget, code.out()));
    char* cj = nullptr;
    check(cc_code_to_json(code.get(), &cj));
    std::ofstream file(o.code_out);
    if (!file) input_error("cannot write " + o.code_out);
    file << take_string(cj) << '\n';
    r.parameters["code_out"] = o.code_out;
    r.artifacts["code"] = o.code_out;
  }

  if (o.out == "csv") {
    for (const auto& row : r.artifacts["generator"]) {
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j].get<std::string>();
      out << '\n';
    }
  } else {
    out << r.finish().dump(2) << '\n';
  }
  return failed(r.verdicts["tiling"]) ? kVerification : kOk;
}

int run_verify(const Options& o, std::ostream& out) {
  Report r{"verify"};
  Chair chair;
  make_chair(o, chair, r);
  const std::uint64_t budget = o.effective_budget();
  Lattice lattice;
  if (o.lattice_file.empty()) {
    r.parameters["lattice"] = "chair_lattice";
    check(cc_lattice_of_chair(chair.get(), lattice.out()));
  } else {
    r.parameters["lattice"] = o.lattice_file;
    check(cc_lattice_from_json(read_file(o.lattice_file).c_str(), lattice.out()));
  }
  char* s = nullptr;
  check(cc_lattice_to_json(lattice.get(), &s));
  r.artifacts["generator"] = take_json(s).at("generator");
  check(cc_lattice_volume(lattice.get(), &s));
  r.artifacts["volume"] = take_string(s);
  check(cc_verify_tiling(lattice.get(), chair.get(), budget, &s));
  r.verdicts["tiling"] = take_json(s);
  bool bad = failed(r.verdicts["tiling"]);
  if (o.torus) {
    r.parameters["torus"] = true;
    if (!o.modulus.empty()) r.parameters["modulus"] = o.modulus;
    check(cc_torus_oracle(lattice.get(), chair.get(), o.modulus.empty() ? nullptr : o.modulus.c_str(), budget, &s));
    r.verdicts["torus"] = take_json(s);
    bad = bad || failed(r.verdicts["torus"]);
  }
  out << r.finish().dump(2) << '\n';
  return bad ? kVerification : kOk;
}

int run_decode(const Options& o, std::ostream& out) {
  Report r{"decode"};
  r.parameters["code"] = o.code_file;
  r.parameters["received"] = o.received;
  Code code;
  check(cc_code_from_json(read_file(o.code_file).c_str(), o.effective_budget(), code.out()));
  char* s = nullptr;
  check(cc_code_decode(code.get(), o.received.c_str(), &s));
  const Json d = take_json(s);
  r.artifacts["codeword"] = d.at("codeword");
  r.artifacts["error"] = d.at("error");
  out << r.finish().dump(2) << '\n';
  return kOk;
}

int run_search(const Options& o, std::ostream& out) {
  Report r{"search"};
  r.parameters["n"] = std::to_string(o.n);
  r.parameters["ell"] = o.ell;
  r.parameters["mode"] = o.mode;
  const std::uint64_t budget = o.effective_budget();
  r.parameters["budget"] = std::to_string(budget);
  char* s = nullptr;
  if (o.mode == "divisibility") {
    if (o.t_given && *o.t_given + 2 != o.n) input_error("divisibility mode decides t = n - 2 only");
    r.parameters["t"] = std::to_string(o.n >= 2 ? o.n - 2 : 0);
    check(cc_search_divisibility(o.n, o.ell.c_str(), &s));
    r.verdicts["nonexistence"] = take_json(s);
  } else {
    if (!o.t_given) input_error("exhaustive mode needs --t");
    r.parameters["t"] = std::to_string(*o.t_given);
    check(cc_search_exhaustive(o.n, *o.t_given, o.ell.c_str(), budget, &s));
    Json res = take_json(s);
    r.verdicts["search"] = res.at("verdict");
    r.artifacts["examined"] = res.at("examined");
    r.artifacts["pruned"] = res.at("pruned");
    r.artifacts["found_count"] = std::to_string(res.at("found").size());
    r.artifacts["found"] = res.at("found");
  }
  out << r.finish().dump(2) << '\n';
  return kOk;
}

int run_wom(Options o, std::ostream& out) {
  Report r{"wom"};
  if (o.out == "json") o.out = "csv";
  Chair chair;
  make_chair(o, chair, r);
  r.parameters["q"] = std::to_string(o.q);
  r.parameters["out"] = o.out;
  const std::uint64_t budget = o.effective_budget();
  const std::string path = o.output.empty() ? (o.out == "bin" ? "coloring.bin" : "coloring.csv") : o.output;
  r.parameters["output"] = path;

  Lattice lattice;
  char* s = nullptr;
  check(cc_construct(chair.get(), CC_METHOD_AUTO, budget, lattice.out(), &s));
  const Json built = take_json(s);
  r.verdicts["tiling"] = built.at("verdict");
  if (failed(built.at("verdict"))) throw Failure{CC_NOT_A_TILING, built["verdict"]["reason"]};
  r.artifacts["generator"] = built.at("generator");

  Coloring coloring;
  check(cc_coloring_build(lattice.get(), chair.get(), o.q, budget, coloring.out()));
  check(cc_coloring_info(coloring.get(), &s));
  r.artifacts["coloring"] = take_json(s);
  check(cc_coloring_write(coloring.get(), o.out == "bin" ? CC_FORMAT_BINARY : CC_FORMAT_CSV, path.c_str()));
  r.artifacts["file"] = path;
  bool bad = false;
  if (o.wom_check) {
    check(cc_coloring_check(coloring.get(), chair.get(), budget, &s));
    r.verdicts["write_guarantee"] = take_json(s);
    bad = failed(r.verdicts["write_guarantee"]);
  }
  out << r.finish().dump(2) << '\n';
  return bad ? kVerification : kOk;
}

void print_error(int code, const std::string& status, const std::string& message) {
  Json e{{"error", {{"status", status}, {"message", message}, {"exit_code", std::to_string(code)}}}};
  std::cerr << e.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chair tilings, splitting sequences, perfect asymmetric codes and WOM colorings"};
  app.require_subcommand(1);
  Options o;
  // CLI11 only stores into plain variables, so --t and --budget go through these.
  unsigned t_raw = 0;
  std::uint64_t budget_raw = 0;
  std::vector<CLI::Option*> budget_opts;
  const auto add_budget = [&](CLI::App* sub) {
    budget_opts.push_back(sub->add_option("--budget", budget_raw, "enumeration budget (default $CHAIRCODES_BUDGET or 1000000)")
        ->check(CLI::PositiveNumber));
  };
  const auto add_chair = [&](CLI::App* sub, bool required) {
    auto* l = sub->add_option("--l", o.l, "chair sides, e.g. 2,2,2 or 5/2,3");
    auto* k = sub->add_option("--k", o.k, "notch sides, 0 < k_i < l_i");
    if (required) {
      l->required();
      k->required();
    }
  };

  auto* construct = app.add_subcommand("construct", "build a tiling lattice for a chair");
  add_chair(construct, false);
  construct->add_option("--method", o.method)->check(CLI::IsMember({"auto", "splitting", "lattice"}));
  construct->add_option("--out", o.out)->check(CLI::IsMember({"json", "csv"}));
  construct->add_option("--magnitudes", o.magnitudes, "per-cell error magnitudes; sets L = l+1, K = l");
  construct->add_option("--code-out", o.code_out, "also write the perfect code JSON to this file");
  add_budget(construct);

  auto* verify = app.add_subcommand("verify", "check that a lattice tiles with a chair");
  add_chair(verify, true);
  verify->add_option("--lattice", o.lattice_file, "lattice JSON file (default: the chair lattice)");
  verify->add_flag("--torus", o.torus, "also run the torus coverage oracle");
  verify->add_option("--modulus", o.modulus, "torus modulus (default: lattice volume)");
  add_budget(verify);

  auto* decode = app.add_subcommand("decode", "decode a received word with a perfect code");
  decode->add_option("--code", o.code_file, "code JSON file")->required();
  decode->add_option("--received", o.received, "received word x1,...,xn")->required();
  add_budget(decode);

  auto* search = app.add_subcommand("search", "nonexistence tests for perfect lattice codes");
  search->add_option("--n", o.n)->required();
  auto* t_opt = search->add_option("--t", t_raw);
  search->add_option("--ell", o.ell)->required();
  search->add_option("--mode", o.mode)->check(CLI::IsMember({"divisibility", "exhaustive"}));
  add_budget(search);

  auto* wom = app.add_subcommand("wom", "coset coloring of the q^n cell grid");
  add_chair(wom, true);
  wom->add_option("--q", o.q, "levels per cell")->required();
  wom->add_option("--out", o.out)->check(CLI::IsMember({"csv", "bin"}));
  wom->add_option("--output", o.output, "coloring file (default coloring.csv / coloring.bin)");
  wom->add_flag("--check", o.wom_check, "run the write-guarantee check");
  add_budget(wom);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error(kInput, "ParseError", e.what());
    return kInput;
  }
  if (t_opt->count()) o.t_given = t_raw;
  for (auto* opt : budget_opts)
    if (opt->count()) o.budget = budget_raw;

  try {
    if (*construct) return run_construct(o, std::cout);
    if (*verify) return run_verify(o, std::cout);
    if (*decode) return run_decode(o, std::cout);
    if (*search) return run_search(o, std::cout);
    return run_wom(o, std::cout);
  } catch (const Failure& f) {
    const int code = exit_code(f.status);
    print_error(code, cc_status_name(f.status), f.message);
    return code;
  } catch (const std::exception& e) {
    print_error(kInternal, "Internal", e.what());
    return kInternal;
  }
}
