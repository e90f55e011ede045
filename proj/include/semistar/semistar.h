/*
 * C interface to the semistar library.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_free function. Every fallible call returns an ss_status; on
 * failure ss_last_error() describes the problem for the calling thread.
 * Strings returned through char** are heap-allocated and must be released
 * with ss_string_free.
 */
#ifndef SEMISTAR_H
#define SEMISTAR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SEMISTAR_BUILDING)
#    define SS_API __declspec(dllexport)
#  else
#    define SS_API __declspec(dllimport)
#  endif
#else
#  define SS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ss_status {
  SS_OK = 0,
  SS_ERR_OVERFLOW = 1, /* 64-bit exponent arithmetic overflowed */
  SS_ERR_DOMAIN = 2,   /* argument outside the operation's domain */
  SS_ERR_GUARD = 3,    /* size guard refused the request */
  SS_ERR_MISMATCH = 4, /* operands over different spectra */
  SS_ERR_PARSE = 5,    /* malformed text */
  SS_ERR_IO = 6,
  SS_ERR_ARGUMENT = 7, /* null handle or invalid flag */
  SS_ERR_INTERNAL = 8
} ss_status;

typedef enum ss_format {
  SS_FORMAT_INLINE = 0, /* vectors: (1,inf); stars: member list */
  SS_FORMAT_JSON = 1,
  SS_FORMAT_DOT = 2 /* Hasse diagrams only */
} ss_format;

typedef struct ss_vector ss_vector;
typedef struct ss_family ss_family;
typedef struct ss_star ss_star;

SS_API const char* ss_last_error(void);
SS_API const char* ss_status_name(ss_status status);
SS_API void ss_string_free(char* s);

/* --- valuation vectors ------------------------------------------------- */

/* `text` is an inline tuple "(0,inf,-2)" or a vector record. `primes_csv`
 * (may be NULL) labels the primes of inline vectors. */
SS_API ss_status ss_vector_parse(const char* text, const char* primes_csv, ss_vector** out);
SS_API void ss_vector_free(ss_vector* v);
SS_API ss_status ss_vector_format(const ss_vector* v, ss_format format, char** out);
SS_API int ss_vector_is_zero(const ss_vector* v);
SS_API ss_status ss_vector_mul(const ss_vector* f, const ss_vector* g, ss_vector** out);
SS_API ss_status ss_vector_colon(const ss_vector* f, const ss_vector* g, ss_vector** out);
/* Bit i of *out is set when entry i is +inf. */
SS_API ss_status ss_vector_inf_support(const ss_vector* f, uint64_t* out);

/* --- Moore families ---------------------------------------------------- */

SS_API ss_status ss_family_parse(const char* text, ss_family** out);
/* Smallest Moore family on n points containing the given subsets. */
SS_API ss_status ss_family_generate(unsigned n, const uint64_t* subsets, size_t count, ss_family** out);
SS_API ss_status ss_is_moore(unsigned n, const uint64_t* subsets, size_t count, int* out);
SS_API void ss_family_free(ss_family* f);
SS_API ss_status ss_family_format(const ss_family* f, char** out);
SS_API size_t ss_family_size(const ss_family* f);
SS_API uint64_t ss_family_member(const ss_family* f, size_t index);
SS_API ss_status ss_family_closure(const ss_family* f, uint64_t subset, uint64_t* out);

/* Called once per family, in canonical order. Returning nonzero stops. */
typedef int (*ss_family_callback)(const ss_family* family, void* user);

/* n <= 5 unless `force` (and never beyond 6). `workers` never changes the
 * result. */
SS_API ss_status ss_count_moore(unsigned n, int force, unsigned workers, uint64_t* out);
SS_API ss_status ss_enumerate_moore(unsigned n, int force, unsigned workers, ss_family_callback callback,
                                    void* user);
/* 2^C(n, floor(n/2)) in decimal, 1 <= n <= 7. */
SS_API ss_status ss_binom_lower_bound(unsigned n, char** out);

/* --- semistar operations ----------------------------------------------- */

/* A star record, or a bare family record. `primes_csv` (may be NULL)
 * overrides the labels of a bare family. */
SS_API ss_status ss_star_parse(const char* text, const char* primes_csv, ss_star** out);
SS_API ss_status ss_star_from_family(const ss_family* f, const char* primes_csv, ss_star** out);
SS_API void ss_star_free(ss_star* s);
SS_API ss_status ss_star_format(const ss_star* s, char** out);
SS_API ss_status ss_star_family(const ss_star* s, ss_family** out);
SS_API ss_status ss_star_apply(const ss_star* s, const ss_vector* f, ss_vector** out);
SS_API ss_status ss_star_is_closed(const ss_star* s, const ss_vector* f, int* out);
SS_API ss_status ss_star_meet(const ss_star* const* stars, size_t count, ss_star** out);
SS_API ss_status ss_star_join(const ss_star* const* stars, size_t count, ss_star** out);
SS_API ss_status ss_star_v_of(const ss_vector* j, ss_star** out);
/* Overring localized at the primes whose bits are set in `localized`. */
SS_API ss_status ss_star_d_of(const char* primes_csv, unsigned n, uint64_t localized, ss_star** out);
SS_API ss_status ss_star_is_finite_type(const ss_star* s, int* out);
/* Comma-separated labels, e.g. "trivial-extension, finite-type". */
SS_API ss_status ss_star_classify(const ss_star* s, char** out);
/* Generator vectors -> support family of the closed-module set they generate. */
SS_API ss_status ss_dagger_supports(const ss_vector* const* gens, size_t count, ss_family** out);

/* Star lattice on n primes (n <= 3) or on the given stars, as DOT or JSON. */
SS_API ss_status ss_hasse_lattice(unsigned n, ss_format format, char** out);
SS_API ss_status ss_hasse_stars(const ss_star* const* stars, size_t count, ss_format format, char** out);

/* --- rational adapter -------------------------------------------------- */

/* Valuation vector of the fractional ideal generated by `gens_csv`
 * (rationals "a/b" or integers) over the primes in `primes_csv`. */
SS_API ss_status ss_adapter_vector(const char* primes_csv, const char* gens_csv, ss_vector** out);
SS_API ss_status ss_adapter_member(const char* primes_csv, const char* gens_csv, const char* rational, int* out);

/* --- verification suites ----------------------------------------------- */

typedef void (*ss_report_callback)(const char* name, int passed, const char* detail, void* user);

/* suite: table1, bounds, finite-type, n2-shape, oracles, axioms. n = 0 and
 * max_n = 0 select the suite defaults. *all_passed is 1 iff every check
 * passed. */
SS_API ss_status ss_verify(const char* suite, unsigned n, unsigned max_n, unsigned workers,
                           ss_report_callback callback, void* user, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* SEMISTAR_H */
