/* kred: k-ary GCD reduction library - C interface.
 *
 * All big integers cross this boundary as decimal strings. Results come
 * back as an opaque report: an ordered list of (key, value) pairs whose
 * values are exact decimal integers, "num/den" rationals, "true"/"false"
 * booleans, or comma-separated lists. Every constructor-style call
 * returns a status code; on failure the out-pointer is untouched and
 * kred_last_error() carries a message for the calling thread.
 */
#ifndef KRED_H
#define KRED_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef KRED_API
#if defined(_WIN32)
#define KRED_API __declspec(dllexport)
#else
#define KRED_API __attribute__((visibility("default")))
#endif
#endif

#define KRED_OK 0
#define KRED_ERR_ARGUMENT 1
#define KRED_ERR_NOT_COPRIME 2
#define KRED_ERR_NOT_SQUARE 3
#define KRED_ERR_INVALID_MODULUS 4
#define KRED_ERR_INVALID_REGION 5
#define KRED_ERR_INTERNAL 6

#define KRED_ALGO_JWA 0
#define KRED_ALGO_RES 1
#define KRED_ALGO_RES_SWAPPED 2
#define KRED_ALGO_PARES 3

#define KRED_MODE_LOCKSTEP 0
#define KRED_MODE_CONCURRENT 1

typedef struct kred_modulus kred_modulus;
typedef struct kred_report kred_report;

KRED_API const char* kred_status_name(int status);

/* Message for the most recent failing call on this thread. */
KRED_API const char* kred_last_error(void);

/* --- modulus ----------------------------------------------------------- */

KRED_API int kred_modulus_new(const char* k_decimal, kred_modulus** out);
KRED_API void kred_modulus_free(kred_modulus* m);

/* --- reductions and gcd ------------------------------------------------ */

/* Keys: n, d, iterations, loop_avoided, path, quotients. */
KRED_API int kred_reduce(const kred_modulus* m, const char* x, const char* y, int algo, int mode,
                kred_report** out);

/* Keys: gcd, steps, two_exponent, spurious_removed, total_loop_iterations. */
KRED_API int kred_gcd(const kred_modulus* m, const char* u, const char* v, int algo, int mode,
             kred_report** out);

/* Keys: gcd. */
KRED_API int kred_euclid_gcd(const char* u, const char* v, kred_report** out);

/* --- analysis ---------------------------------------------------------- */

/* Keys: k, phi_k, size_Uk, r, p1_exact, p1_closed_form (when k = 4^l),
 * and with empirical != 0 also empirical_avoidance, empirical_exhaustive,
 * empirical_trials. sample_limit bounds the pair sweep; 0 picks the
 * library default. */
KRED_API int kred_analyze_p1(const kred_modulus* m, int empirical, uint64_t sample_limit, uint64_t seed,
                    kred_report** out);

/* Keys: k, violations, then violation.<x> = inverse per failure. */
KRED_API int kred_analyze_lemma2(const kred_modulus* m, kred_report** out);

/* Keys: k, size_Uk, union_size, intersection, union. */
KRED_API int kred_analyze_union(const kred_modulus* m, kred_report** out);

/* Keys: k, predicted, and with scan != 0 also max_iterations, argmax_c. */
KRED_API int kred_analyze_worst(const kred_modulus* m, int scan, kred_report** out);

/* Rows only: one entry per x in E_k, key = x, value = 1/x mod k. */
KRED_API int kred_analyze_inverse_table(const kred_modulus* m, kred_report** out);

/* Keys: max, ok, violations. */
KRED_API int kred_analyze_fib_lemma(uint64_t max_n, kred_report** out);

/* --- report access ----------------------------------------------------- */

KRED_API size_t kred_report_size(const kred_report* r);
KRED_API const char* kred_report_key(const kred_report* r, size_t i);
KRED_API const char* kred_report_value(const kred_report* r, size_t i);
/* NULL when the key is absent. */
KRED_API const char* kred_report_get(const kred_report* r, const char* key);
KRED_API void kred_report_free(kred_report* r);

#ifdef __cplusplus
}
#endif

#endif /* KRED_H */
