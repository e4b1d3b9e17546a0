#ifndef CHAIRCODES_H
#define CHAIRCODES_H

/*
 * C interface to the chaircodes library: chair tilings of Z^n, splitting
 * sequences, perfect asymmetric limited-magnitude codes and WOM colorings.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call returns a cc_status; on failure cc_last_error() describes the
 * problem for the calling thread. Integers that may exceed 64 bits travel as
 * decimal strings, list arguments as comma-separated text ("2,2,2" or
 * "3/2,1"), and structured results as JSON documents. Strings returned through
 * a char** out-parameter are owned by the caller and released with
 * cc_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CC_API __declspec(dllexport)
#else
#define CC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cc_status {
  CC_OK = 0,
  CC_INVALID_ARGUMENT,
  CC_PARSE_ERROR,
  CC_INVALID_CHAIR,
  CC_DIMENSION_MISMATCH,
  CC_NOT_INVERTIBLE,
  CC_NON_SQUARE,
  CC_SINGULAR_MATRIX,
  CC_NOT_DISCRETE,
  CC_NON_INTEGER_LATTICE,
  CC_BUDGET_EXCEEDED,
  CC_BAD_MODULUS,
  CC_HYPOTHESIS_VIOLATED,
  CC_NOT_PERFECT,
  CC_NOT_A_PACKING,
  CC_NOT_A_TILING,
  CC_BAD_PARAMETERS,
  CC_INTERNAL
} cc_status;

typedef enum cc_method {
  /* splitting construction, chair lattice when its hypothesis fails */
  CC_METHOD_AUTO = 0,
  CC_METHOD_SPLITTING,
  CC_METHOD_LATTICE
} cc_method;

typedef enum cc_format { CC_FORMAT_CSV = 0, CC_FORMAT_BINARY } cc_format;

typedef struct cc_chair cc_chair;
typedef struct cc_lattice cc_lattice;
typedef struct cc_code cc_code;
typedef struct cc_coloring cc_coloring;

/* Default enumeration budget; pass 0 wherever a budget is taken to use it. */
#define CC_DEFAULT_BUDGET 1000000u

CC_API const char* cc_version(void);
CC_API const char* cc_status_name(cc_status status);
/* Message of the last failed call on this thread, "" if none. */
CC_API const char* cc_last_error(void);
CC_API void cc_string_free(char* s);

/* Chairs */
CC_API cc_status cc_chair_new(const char* sides, const char* notch, cc_chair** out);
CC_API void cc_chair_free(cc_chair* chair);
CC_API cc_status cc_chair_dim(const cc_chair* chair, size_t* out);
CC_API cc_status cc_chair_volume(const cc_chair* chair, char** out);
CC_API cc_status cc_chair_to_json(const cc_chair* chair, char** out);

/* Lattices. JSON form: {"generator": [["a", "b"], ...]} with basis rows. */
CC_API cc_status cc_lattice_from_json(const char* json, cc_lattice** out);
CC_API cc_status cc_lattice_of_chair(const cc_chair* chair, cc_lattice** out);
CC_API void cc_lattice_free(cc_lattice* lattice);
CC_API cc_status cc_lattice_to_json(const cc_lattice* lattice, char** out);
CC_API cc_status cc_lattice_volume(const cc_lattice* lattice, char** out);
/* Canonical (Hermite) basis as a JSON matrix. */
CC_API cc_status cc_lattice_hnf(const cc_lattice* lattice, char** out);
CC_API cc_status cc_lattice_equal(const cc_lattice* a, const cc_lattice* b, int* out);
/* Group labeling of Z^n / lattice: {"m","beta","permutation"} when cyclic,
 * {"divisors","images"} otherwise. */
CC_API cc_status cc_lattice_to_splitting(const cc_lattice* lattice, char** out);
CC_API cc_status cc_splitting_to_lattice(const char* splitting_json, cc_lattice** out);

/*
 * Builds a tiling lattice for the chair. The report holds "method",
 * "generator", "volume", "splitting" (or null), "fallback" (or null) and the
 * tiling "verdict". CC_HYPOTHESIS_VIOLATED with CC_METHOD_SPLITTING when the
 * splitting construction does not apply.
 */
CC_API cc_status cc_construct(const cc_chair* chair, cc_method method, uint64_t budget, cc_lattice** lattice_out,
                              char** report_out);

/* Verdict JSON: {"status","reason","witness","examined"}. */
CC_API cc_status cc_verify_packing(const cc_lattice* lattice, const cc_chair* chair, uint64_t budget, char** out);
CC_API cc_status cc_verify_tiling(const cc_lattice* lattice, const cc_chair* chair, uint64_t budget, char** out);
/* modulus may be NULL for the lattice volume. */
CC_API cc_status cc_torus_oracle(const cc_lattice* lattice, const cc_chair* chair, const char* modulus,
                                 uint64_t budget, char** out);

/* Codes */
/* Perfect code correcting n-1 errors with per-cell magnitudes "l1,...,ln". */
CC_API cc_status cc_code_perfect(const char* magnitudes, uint64_t budget, cc_code** out);
/* Lattice code for the uniform sphere S(n, t, ell) on a given lattice. */
CC_API cc_status cc_code_new(const cc_lattice* lattice, unsigned t, const char* ell, uint64_t budget, cc_code** out);
CC_API cc_status cc_code_from_json(const char* json, uint64_t budget, cc_code** out);
CC_API void cc_code_free(cc_code* code);
CC_API cc_status cc_code_to_json(const cc_code* code, char** out);
CC_API cc_status cc_code_is_perfect(const cc_code* code, int* out);
/* {"received","codeword","error"}; CC_NOT_PERFECT for a non-perfect code. */
CC_API cc_status cc_code_decode(const cc_code* code, const char* received, char** out);
CC_API cc_status cc_sphere_size(unsigned n, unsigned t, const char* ell, char** out);

/* Nonexistence */
CC_API cc_status cc_search_divisibility(unsigned n, const char* ell, char** out);
/* {"verdict","examined","pruned","found":[matrix, ...]} */
CC_API cc_status cc_search_exhaustive(unsigned n, unsigned t, const char* ell, uint64_t budget, char** out);

/* WOM colorings */
CC_API cc_status cc_coloring_build(const cc_lattice* lattice, const cc_chair* chair, uint64_t q, uint64_t budget,
                                   cc_coloring** out);
CC_API void cc_coloring_free(cc_coloring* coloring);
/* {"q","n","colors","states","view","class_sizes"} */
CC_API cc_status cc_coloring_info(const cc_coloring* coloring, char** out);
CC_API cc_status cc_coloring_color(const cc_coloring* coloring, const uint64_t* state, size_t n, uint32_t* out);
CC_API cc_status cc_coloring_check(const cc_coloring* coloring, const cc_chair* chair, uint64_t budget,
                                   char** out);
CC_API cc_status cc_coloring_write(const cc_coloring* coloring, cc_format format, const char* path);

#ifdef __cplusplus
}
#endif

#endif
