#ifndef CYCLO_CAPI_H
#define CYCLO_CAPI_H

/* C interface to the cyclotomic-height library. All results are returned as
 * malloc'd strings (decimal integers or JSON documents) that the caller frees
 * with cyclo_str_free. Functions return NULL on failure; the status code and
 * message are then available from the context. Big integers are decimal
 * strings throughout: JSON numbers would be lossy. */

#include <stdint.h>

#if defined(_WIN32)
#define CYCLO_API __declspec(dllexport)
#else
#define CYCLO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cyclo_ctx cyclo_ctx;

typedef enum cyclo_status {
    CYCLO_OK = 0,
    CYCLO_ERR_DOMAIN = 1,    /* bad mathematical input (n = 0, gamma out of range) */
    CYCLO_ERR_CONFIG = 2,    /* unknown psi name or similar run configuration */
    CYCLO_ERR_BUDGET = 3,    /* tau(n) above the enumeration cap */
    CYCLO_ERR_RESOURCE = 4,  /* sieve table above the memory cap */
    CYCLO_ERR_IO = 5,        /* file read/write failure */
    CYCLO_ERR_CONTRACT = 6,  /* API contract violation */
    CYCLO_ERR_INTEGRITY = 7, /* internal consistency failure */
    CYCLO_ERR_INTERNAL = 8
} cyclo_status;

CYCLO_API cyclo_ctx* cyclo_ctx_new(void);
CYCLO_API void cyclo_ctx_free(cyclo_ctx* ctx);

/* 0 = use all hardware threads */
CYCLO_API void cyclo_ctx_set_threads(cyclo_ctx* ctx, int threads);
/* Phi_m polynomials are retained in memory only for m up to this bound. */
CYCLO_API void cyclo_ctx_set_poly_retention(cyclo_ctx* ctx, uint64_t limit);

CYCLO_API cyclo_status cyclo_ctx_status(const cyclo_ctx* ctx);
CYCLO_API const char* cyclo_ctx_error(const cyclo_ctx* ctx); /* empty string when OK */

CYCLO_API void cyclo_str_free(char* s);

/* {"n":..,"degree":..,"coeffs":["-1","1",...],"text":"x - 1"} */
CYCLO_API char* cyclo_phi_json(cyclo_ctx* ctx, uint64_t n);

/* A(n) as a decimal string */
CYCLO_API char* cyclo_height_a(cyclo_ctx* ctx, uint64_t n);

/* {"n":..,"A0":"...","witness":d} */
CYCLO_API char* cyclo_height_a0_json(cyclo_ctx* ctx, uint64_t n);

/* {"n":..,"B":"...","witness":[d,...],"witness_mask":..,
 *  "subsets_examined":..,"pruned":..} */
CYCLO_API char* cyclo_height_b_json(cyclo_ctx* ctx, uint64_t n, uint32_t max_tau, int prune);

/* Chain bounds, Bateman check and both BPV exponent readings for n. When
 * tau(n) <= max_tau the exact B(n) and the Theorem 1.2 comparison at psi = 1
 * are included. */
CYCLO_API char* cyclo_bounds_json(cyclo_ctx* ctx, uint64_t n, uint32_t max_tau);

/* c2_mode: 0 = none, 1 = explicit (c2), 2 = empirical fit at x = fit_x */
CYCLO_API char* cyclo_constants_json(cyclo_ctx* ctx, double gamma, int c2_mode, double c2,
                                     uint64_t fit_x);

CYCLO_API char* cyclo_lemma31_json(cyclo_ctx* ctx, uint64_t x, double gamma);

CYCLO_API char* cyclo_lemma32_json(cyclo_ctx* ctx, uint64_t x, double gamma, int c2_mode,
                                   double c2);

CYCLO_API char* cyclo_lemma33_json(cyclo_ctx* ctx, uint64_t x, double gamma, double eps,
                                   int c2_mode, double c2);

/* {"x":..,"estimate":..,"argmax":..} — empirical lower bound for the Maier
 * key-inequality constant over squarefree n <= x */
CYCLO_API char* cyclo_maier_c_json(cyclo_ctx* ctx, uint64_t x);

CYCLO_API char* cyclo_mertens_json(cyclo_ctx* ctx, uint64_t limit, uint32_t nu_max);

/* Range scan; writes the CSV (and optional JSON summary) to the given paths
 * and returns the summary JSON. cache_path may be NULL/empty to disable the
 * persistent result cache. */
CYCLO_API char* cyclo_scan_json(cyclo_ctx* ctx, uint64_t x_max, const char* psi, uint32_t b_tau,
                                const char* csv_path, const char* summary_path,
                                const char* cache_path);

#ifdef __cplusplus
}
#endif

#endif /* CYCLO_CAPI_H */
