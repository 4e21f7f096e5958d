/* C interface to the genus-2 root number library.
 *
 * Handles are opaque; every call returns a g2r_status and, on failure, leaves
 * a message retrievable with g2r_last_error() on the calling thread.
 * Strings returned through char** are owned by the caller and must be
 * released with g2r_string_free().
 */
#ifndef G2ROOT_G2ROOT_H
#define G2ROOT_G2ROOT_H

#include <stddef.h>

#if defined(G2R_BUILDING_LIBRARY)
#define G2R_API __attribute__((visibility("default")))
#else
#define G2R_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum g2r_status {
  G2R_OK = 0,
  G2R_E_INVALID_ARGUMENT = 1, /* null pointer, bad option value */
  G2R_E_PARSE = 2,            /* malformed JSON or rational */
  G2R_E_SINGULAR = 3,         /* discriminant is zero */
  G2R_E_DOMAIN = 4,           /* input outside an operation's domain */
  G2R_E_NORMALIZATION = 5,    /* 5-adic special form not reached */
  G2R_E_NOT_WILD = 6,
  G2R_E_CONFLICT = 7,         /* assertion disagrees with a computed value */
  G2R_E_UNSUPPORTED = 8,
  G2R_E_INTERNAL = 9
} g2r_status;

typedef struct g2r_curve g2r_curve;
typedef struct g2r_options g2r_options;

G2R_API const char* g2r_version(void);
G2R_API const char* g2r_last_error(void);
G2R_API const char* g2r_status_name(g2r_status s);
G2R_API void g2r_string_free(char* s);

/* Options: working precision (default from GENUS2_PRECISION or 40) and
 * asserted local root numbers. */
G2R_API g2r_status g2r_options_new(g2r_options** out);
G2R_API void g2r_options_free(g2r_options* opts);
G2R_API g2r_status g2r_options_set_precision(g2r_options* opts, unsigned digits);
G2R_API g2r_status g2r_options_add_assertion(g2r_options* opts, long prime, int sign);
/* "7=-1" */
G2R_API g2r_status g2r_options_add_assertion_text(g2r_options* opts, const char* text);

/* {"P": ["c0", ..., "c5"]}; assertions and precision found in the JSON are
 * merged into opts when opts is not null. */
G2R_API g2r_status g2r_curve_from_json(const char* json, g2r_options* opts, g2r_curve** out);
/* Ascending coefficients as rational strings. */
G2R_API g2r_status g2r_curve_from_coefficients(const char* const* coeffs, size_t count, g2r_curve** out);
G2R_API void g2r_curve_free(g2r_curve* curve);
G2R_API g2r_status g2r_curve_degree(const g2r_curve* curve, int* out);

G2R_API g2r_status g2r_curve_discriminant(const g2r_curve* curve, char** out);

/* JSON reports. opts may be null for defaults. */
G2R_API g2r_status g2r_disc_json(const g2r_curve* curve, char** out);
G2R_API g2r_status g2r_normalize_json(const g2r_curve* curve, const g2r_options* opts, char** out);
G2R_API g2r_status g2r_classify_json(const g2r_curve* curve, const g2r_options* opts, char** out);
/* *global receives +1, -1, or 0 for a partial result. */
G2R_API g2r_status g2r_analyze_json(const g2r_curve* curve, const g2r_options* opts, char** out, int* global);

/* Local root number at 5 for a maximal curve; G2R_E_NOT_WILD or
 * G2R_E_UNSUPPORTED otherwise. */
G2R_API g2r_status g2r_local_root_number_5(const g2r_curve* curve, const g2r_options* opts, int* out);

/* suite: traces, epsilon, symbols, discriminant. params_json may be null or
 * an object with keys p, fmax, max_conductor, unif_steps, samples, seed,
 * verbose. */
G2R_API g2r_status g2r_verify_json(const char* suite, const char* params_json, char** out, int* passed);

/* Plain-text rendering of any report returned above. */
G2R_API g2r_status g2r_render_text(const char* report_json, char** out);

/* Scalar helpers. */
G2R_API g2r_status g2r_hilbert(const char* a, const char* b, long p, int* out);
G2R_API g2r_status g2r_trace_formula(int n, long r, unsigned f, long p, long long* out);

#ifdef __cplusplus
}
#endif

#endif
