#include "chaircodes/chaircodes.h"

#include <fstream>
#include <new>
#include <optional>

#include "chaircodes/json_io.hpp"

using namespace chaircodes;

struct cc_chair {
  Chair value;
};
struct cc_lattice {
  Lattice value;
};
struct cc_code {
  LatticeCode value;
};
struct cc_coloring {
  Coloring value;
};

namespace {

thread_local std::string last_error;

cc_status status_of(Errc e) {
  switch (e) {
    case Errc::InvalidArgument: return CC_INVALID_ARGUMENT;
    case Errc::ParseError: return CC_PARSE_ERROR;
    case Errc::InvalidChair: return CC_INVALID_CHAIR;
    case Errc::DimensionMismatch: return CC_DIMENSION_MISMATCH;
    case Errc::NotInvertible: return CC_NOT_INVERTIBLE;
    case Errc::NonSquare: return CC_NON_SQUARE;
    case Errc::SingularMatrix: return CC_SINGULAR_MATRIX;
    case Errc::NotDiscrete: return CC_NOT_DISCRETE;
    case Errc::NonIntegerLattice: return CC_NON_INTEGER_LATTICE;
    case Errc::BudgetExceeded: return CC_BUDGET_EXCEEDED;
    case Errc::BadModulus: return CC_BAD_MODULUS;
    case Errc::HypothesisViolated: return CC_HYPOTHESIS_VIOLATED;
    case Errc::NotPerfect: return CC_NOT_PERFECT;
    case Errc::NotAPacking: return CC_NOT_A_PACKING;
    case Errc::NotATiling: return CC_NOT_A_TILING;
    case Errc::BadParameters: return CC_BAD_PARAMETERS;
  }
  return CC_INTERNAL;
}

// Runs body, translating exceptions into a status and the thread's message.
template <class F>
cc_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return CC_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return CC_PARSE_ERROR;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CC_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CC_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(Errc::InvalidArgument, std::string(what) + " must not be NULL");
}

std::uint64_t budget_or_default(std::uint64_t b) { return b == 0 ? kDefaultBudget : b; }

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  s.copy(out, s.size());
  out[s.size()] = '\0';
  return out;
}

void emit(char** out, const Json& j) {
  require(out, "out");
  *out = dup(j.dump());
}

BigInt integer_arg(const char* s, const char* what) {
  require(s, what);
  return parse_integer(s);
}

}  // namespace

extern "C" {

const char* cc_version(void) { return "1.0.0"; }

const char* cc_status_name(cc_status status) {
  switch (status) {
    case CC_OK: return "Ok";
    case CC_INTERNAL: return "Internal";
    default: break;
  }
  if (status > CC_OK && status < CC_INTERNAL) return errc_name(static_cast<Errc>(status - 1)).data();
  return "Unknown";
}

const char* cc_last_error(void) { return last_error.c_str(); }

void cc_string_free(char* s) { delete[] s; }

cc_status cc_chair_new(const char* sides, const char* notch, cc_chair** out) {
  return guarded([&] {
    require(sides, "sides");
    require(notch, "notch");
    require(out, "out");
    *out = new cc_chair{Chair(parse_rational_list(sides), parse_rational_list(notch))};
  });
}

void cc_chair_free(cc_chair* chair) { delete chair; }

cc_status cc_chair_dim(const cc_chair* chair, size_t* out) {
  return guarded([&] {
    require(chair, "chair");
    require(out, "out");
    *out = chair->value.dim();
  });
}

cc_status cc_chair_volume(const cc_chair* chair, char** out) {
  return guarded([&] {
    require(chair, "chair");
    require(out, "out");
    *out = dup(to_string(chair->value.volume()));
  });
}

cc_status cc_chair_to_json(const cc_chair* chair, char** out) {
  return guarded([&] {
    require(chair, "chair");
    emit(out, to_json(chair->value));
  });
}

cc_status cc_lattice_from_json(const char* json, cc_lattice** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new cc_lattice{lattice_from_json(Json::parse(json))};
  });
}

cc_status cc_lattice_of_chair(const cc_chair* chair, cc_lattice** out) {
  return guarded([&] {
    require(chair, "chair");
    require(out, "out");
    *out = new cc_lattice{chair_lattice(chair->value)};
  });
}

void cc_lattice_free(cc_lattice* lattice) { delete lattice; }

cc_status cc_lattice_to_json(const cc_lattice* lattice, char** out) {
  return guarded([&] {
    require(lattice, "lattice");
    emit(out, to_json(lattice->value));
  });
}

cc_status cc_lattice_volume(const cc_lattice* lattice, char** out) {
  return guarded([&] {
    require(lattice, "lattice");
    require(out, "out");
    *out = dup(to_string(lattice->value.volume()));
  });
}

cc_status cc_lattice_hnf(const cc_lattice* lattice, char** out) {
  return guarded([&] {
    require(lattice, "lattice");
    emit(out, to_json(lattice->value.hnf()));
  });
}

cc_status cc_lattice_equal(const cc_lattice* a, const cc_lattice* b, int* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = a->value == b->value ? 1 : 0;
  });
}

cc_status cc_lattice_to_splitting(const cc_lattice* lattice, char** out) {
  return guarded([&] {
    require(lattice, "lattice");
    std::visit([&](const auto& g) { emit(out, to_json(g)); }, lattice_to_splitting(lattice->value));
  });
}

cc_status cc_splitting_to_lattice(const char* splitting_json, cc_lattice** out) {
  return guarded([&] {
    require(splitting_json, "splitting_json");
    require(out, "out");
    const SplittingSequence s = splitting_from_json(Json::parse(splitting_json));
    *out = new cc_lattice{splitting_to_lattice(s, s.beta.size())};
  });
}

cc_status cc_construct(const cc_chair* chair, cc_method method, uint64_t budget, cc_lattice** lattice_out,
                       char** report_out) {
  return guarded([&] {
    require(chair, "chair");
    if (method != CC_METHOD_AUTO && method != CC_METHOD_SPLITTING && method != CC_METHOD_LATTICE)
      throw Error(Errc::InvalidArgument, "unknown construction method");
    budget = budget_or_default(budget);
    const Chair& c = chair->value;

    std::optional<SplittingSequence> split;
    Json fallback = nullptr;
    if (method != CC_METHOD_LATTICE) {
      try {
        if (!c.is_discrete()) throw Error(Errc::NotDiscrete, "the splitting construction needs integer parameters");
        SplittingSequence s = general_chair_splitting(c);
        const Verdict v = verify_splitting(c, s, budget);
        if (!v.ok()) throw Error(Errc::HypothesisViolated, "splitting sequence failed verification: " + v.reason);
        split = std::move(s);
      } catch (const Error& e) {
        const bool recoverable = e.code() == Errc::HypothesisViolated || e.code() == Errc::NotDiscrete;
        if (method == CC_METHOD_SPLITTING || !recoverable) throw;
        fallback = e.what();
      }
    }
    Lattice lat = split ? splitting_to_lattice(*split, c.dim()) : chair_lattice(c);
    const Verdict verdict = verify_tiling(lat, c, budget);

    Json report{{"method", split ? "splitting" : "lattice"},
                {"generator", to_json(lat)["generator"]},
                {"volume", to_string(lat.volume())},
                {"splitting", split ? to_json(*split) : Json(nullptr)},
                {"fallback", fallback},
                {"verdict", to_json(verdict)}};
    if (report_out) emit(report_out, report);
    if (lattice_out) *lattice_out = new cc_lattice{std::move(lat)};
  });
}

cc_status cc_verify_packing(const cc_lattice* lattice, const cc_chair* chair, uint64_t budget, char** out) {
  return guarded([&] {
    require(lattice, "lattice");
    require(chair, "chair");
    emit(out, to_json(verify_packing(lattice->value, chair->value, budget_or_default(budget))));
  });
}

cc_status cc_verify_tiling(const cc_lattice* lattice, const cc_chair* chair, uint64_t budget, char** out) {
  return guarded([&] {
    require(lattice, "lattice");
    require(chair, "chair");
    emit(out, to_json(verify_tiling(lattice->value, chair->value, budget_or_default(budget))));
  });
}

cc_status cc_torus_oracle(const cc_lattice* lattice, const cc_chair* chair, const char* modulus, uint64_t budget,
                          char** out) {
  return guarded([&] {
    require(lattice, "lattice");
    require(chair, "chair");
    std::optional<BigInt> m;
    if (modulus) m = parse_integer(modulus);
    emit(out, to_json(torus_tiling_oracle(lattice->value, chair->value, m, budget_or_default(budget))));
  });
}

cc_status cc_code_perfect(const char* magnitudes, uint64_t budget, cc_code** out) {
  return guarded([&] {
    require(magnitudes, "magnitudes");
    require(out, "out");
    *out = new cc_code{perfect_code(parse_integer_list(magnitudes), budget_or_default(budget))};
  });
}

cc_status cc_code_new(const cc_lattice* lattice, unsigned t, const char* ell, uint64_t budget, cc_code** out) {
  return guarded([&] {
    require(lattice, "lattice");
    require(out, "out");
    ErrorSphere sphere = ErrorSphere::uniform(lattice->value.dim(), t, integer_arg(ell, "ell"));
    *out = new cc_code{LatticeCode(lattice->value, std::move(sphere), budget_or_default(budget))};
  });
}

cc_status cc_code_from_json(const char* json, uint64_t budget, cc_code** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new cc_code{code_from_json(Json::parse(json), budget_or_default(budget))};
  });
}

void cc_code_free(cc_code* code) { delete code; }

cc_status cc_code_to_json(const cc_code* code, char** out) {
  return guarded([&] {
    require(code, "code");
    emit(out, to_json(code->value));
  });
}

cc_status cc_code_is_perfect(const cc_code* code, int* out) {
  return guarded([&] {
    require(code, "code");
    require(out, "out");
    *out = code->value.perfect() ? 1 : 0;
  });
}

cc_status cc_code_decode(const cc_code* code, const char* received, char** out) {
  return guarded([&] {
    require(code, "code");
    require(received, "received");
    const Point y = parse_integer_list(received);
    if (y.size() != code->value.lattice().dim())
      throw Error(Errc::DimensionMismatch, "received word has length " + std::to_string(y.size()) + ", code has " +
                                               std::to_string(code->value.lattice().dim()));
    const Decoded d = code->value.decode(y);
    emit(out, Json{{"received", to_json(y)}, {"codeword", to_json(d.codeword)}, {"error", to_json(d.error)}});
  });
}

cc_status cc_sphere_size(unsigned n, unsigned t, const char* ell, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup(to_string(sphere_size(n, t, integer_arg(ell, "ell"))));
  });
}

cc_status cc_search_divisibility(unsigned n, const char* ell, char** out) {
  return guarded([&] { emit(out, to_json(nonexistence_divisibility_check(n, integer_arg(ell, "ell")))); });
}

cc_status cc_search_exhaustive(unsigned n, unsigned t, const char* ell, uint64_t budget, char** out) {
  return guarded([&] {
    const SearchResult r = exhaustive_perfect_search(n, t, integer_arg(ell, "ell"), budget_or_default(budget));
    Json found = Json::array();
    for (const auto& lat : r.found) found.push_back(to_json(lat.hnf()));
    emit(out, Json{{"verdict", to_json(r.verdict)},
                   {"examined", std::to_string(r.examined)},
                   {"pruned", std::to_string(r.pruned)},
                   {"found", found}});
  });
}

cc_status cc_coloring_build(const cc_lattice* lattice, const cc_chair* chair, uint64_t q, uint64_t budget,
                            cc_coloring** out) {
  return guarded([&] {
    require(lattice, "lattice");
    require(chair, "chair");
    require(out, "out");
    *out = new cc_coloring{build_coloring(lattice->value, chair->value, q, budget_or_default(budget))};
  });
}

void cc_coloring_free(cc_coloring* coloring) { delete coloring; }

cc_status cc_coloring_info(const cc_coloring* coloring, char** out) {
  return guarded([&] {
    require(coloring, "coloring");
    emit(out, to_json(coloring->value));
  });
}

cc_status cc_coloring_color(const cc_coloring* coloring, const uint64_t* state, size_t n, uint32_t* out) {
  return guarded([&] {
    require(coloring, "coloring");
    require(state, "state");
    require(out, "out");
    Point p;
    for (size_t i = 0; i < n; ++i) p.push_back(BigInt(std::to_string(state[i])));
    *out = coloring->value.color(p);
  });
}

cc_status cc_coloring_check(const cc_coloring* coloring, const cc_chair* chair, uint64_t budget, char** out) {
  return guarded([&] {
    require(coloring, "coloring");
    require(chair, "chair");
    emit(out, to_json(check_write_guarantee(coloring->value, chair->value, budget_or_default(budget))));
  });
}

cc_status cc_coloring_write(const cc_coloring* coloring, cc_format format, const char* path) {
  return guarded([&] {
    require(coloring, "coloring");
    require(path, "path");
    if (format != CC_FORMAT_CSV && format != CC_FORMAT_BINARY) throw Error(Errc::InvalidArgument, "unknown format");
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(Errc::InvalidArgument, std::string("cannot open ") + path + " for writing");
    if (format == CC_FORMAT_CSV)
      write_coloring_csv(coloring->value, file);
    else
      write_coloring_binary(coloring->value, file);
    if (!file.flush()) throw Error(Errc::InvalidArgument, std::string("failed writing ") + path);
  });
}

}  // extern "C"
