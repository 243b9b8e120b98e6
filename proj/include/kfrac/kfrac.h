/* C interface to the kfrac library. All handles are opaque; every function
 * that can fail returns a kf_status and leaves a message for kf_last_error(). */
#ifndef KFRAC_KFRAC_H
#define KFRAC_KFRAC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define KF_API __declspec(dllexport)
#elif defined(__GNUC__)
#define KF_API __attribute__((visibility("default")))
#else
#define KF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kf_status {
    KF_OK = 0,
    KF_E_INVALID_ARGUMENT = 1,
    KF_E_DOMAIN = 2,
    KF_E_PARSE = 3,
    KF_E_PRECISION = 4,
    KF_E_LIMIT = 5,
    KF_E_IO = 6,
    KF_E_NOMEM = 7,
    KF_E_INTERNAL = 8
} kf_status;

typedef enum kf_format { KF_FORMAT_ASCII = 0, KF_FORMAT_HEX = 1, KF_FORMAT_RAW = 2 } kf_format;
typedef enum kf_bit_order { KF_MSB_FIRST = 0, KF_LSB_FIRST = 1 } kf_bit_order;
typedef enum kf_tie_break { KF_TIE_CANONICAL = 0, KF_TIE_ALTERNATE = 1 } kf_tie_break;

typedef struct kf_field kf_field;
typedef struct kf_word kf_word;
typedef struct kf_text kf_text;
typedef struct kf_profile kf_profile;
typedef struct kf_adic kf_adic;

/* Message of the last failure on the calling thread; empty after success. */
KF_API const char* kf_last_error(void);
KF_API const char* kf_version(void);

/* Text results (CSV, JSON, reports). */
KF_API const char* kf_text_data(const kf_text* t);
KF_API size_t kf_text_length(const kf_text* t);
KF_API void kf_text_destroy(kf_text* t);

/* Fields. modulus may be NULL for the default; it is given constant term
 * first and must be monic of degree e. */
KF_API kf_status kf_field_create(unsigned p, unsigned e, const uint32_t* modulus, size_t modulus_len,
                                 kf_field** out);
KF_API kf_status kf_field_create_q(unsigned q, kf_field** out);
KF_API unsigned kf_field_order(const kf_field* f);
KF_API void kf_field_destroy(kf_field* f);

/* Symbol words. */
KF_API kf_status kf_word_create(const uint32_t* symbols, size_t len, kf_word** out);
/* len uniform symbols over 0..q-1 from the SplitMix64 stream of seed. */
KF_API kf_status kf_word_random(unsigned q, size_t len, uint64_t seed, kf_word** out);
KF_API kf_status kf_word_parse(const char* data, size_t len, kf_format fmt, kf_bit_order order, unsigned q,
                               size_t limit, kf_word** out);
KF_API kf_status kf_word_format(const kf_word* w, kf_format fmt, kf_bit_order order, unsigned q, kf_text** out);
KF_API size_t kf_word_length(const kf_word* w);
KF_API const uint32_t* kf_word_data(const kf_word* w);
KF_API void kf_word_destroy(kf_word* w);

/* The isometry K and friends. */
KF_API kf_status kf_K(const kf_field* f, const kf_word* a, kf_word** out);
KF_API kf_status kf_K_reference(const kf_field* f, const kf_word* a, kf_word** out);
KF_API kf_status kf_K_inverse(const kf_field* f, const kf_word* b, kf_word** out);
KF_API kf_status kf_iterate_K(const kf_field* f, const kf_word* a, unsigned k, kf_word** out);
KF_API kf_status kf_K_infinity(const kf_field* f, const kf_word* a, kf_word** out);
KF_API kf_status kf_split_dc(const kf_field* f, const kf_word* a, kf_word** D, kf_word** C);

/* CSV views. kmap: n,a,K,part,index. iterate: k,word for k = 0..k_max and a
 * final "inf" row with the diagonal. shifted: i,suffix,K. */
KF_API kf_status kf_kmap_csv(const kf_field* f, const kf_word* a, kf_text** out);
KF_API kf_status kf_iterate_csv(const kf_field* f, const kf_word* a, unsigned k_max, kf_text** out);
KF_API kf_status kf_shifted_csv(const kf_field* f, const kf_word* a, kf_text** out);
/* Partial denominators as JSON. */
KF_API kf_status kf_expand_json(const kf_field* f, const kf_word* a, kf_text** out);

/* Complexity profiles. Index n runs over 0..length. */
KF_API kf_status kf_profile_create(const kf_field* f, const kf_word* a, kf_profile** out);
KF_API size_t kf_profile_length(const kf_profile* p);
KF_API int kf_profile_L(const kf_profile* p, size_t n);
KF_API int kf_profile_m(const kf_profile* p, size_t n);
KF_API int kf_profile_J(const kf_profile* p, size_t n);
/* Columns n,L,m,J, plus K,K_D,K_C when emit_k is nonzero. */
KF_API kf_status kf_profile_csv(const kf_profile* p, int emit_k, kf_text** out);
KF_API void kf_profile_destroy(kf_profile* p);

/* 2-adic approximation. */
KF_API kf_status kf_adic_create(kf_tie_break tie, kf_adic** out);
KF_API kf_status kf_adic_step(kf_adic* s, unsigned bit, unsigned* a_bit);
KF_API size_t kf_adic_k(const kf_adic* s);
/* Current minimal pair as "c,d" in decimal. */
KF_API kf_status kf_adic_pair(const kf_adic* s, kf_text** out);
KF_API void kf_adic_destroy(kf_adic* s);
/* Columns k,a,A,J_A,m_A,c,d,phi2. */
KF_API kf_status kf_adic_csv(const kf_word* a, kf_tie_break tie, kf_text** out);

/* Exact statistics, rendered as JSON with "num/den" strings and decimals. */
KF_API kf_status kf_stats_count(unsigned q, long t, long m, kf_text** out);
KF_API kf_status kf_stats_mean_j(unsigned q, long t, kf_text** out);
KF_API kf_status kf_stats_delta(unsigned q, long k, long l, kf_text** out);
KF_API kf_status kf_stats_pattern(unsigned q, const long* pattern, size_t len, kf_text** out);
KF_API kf_status kf_stats_stationary(unsigned q, long kmax, kf_text** out);
KF_API kf_status kf_levy_eval(const char* family, double eps, unsigned k, unsigned r, double n, double* out);

/* Monte Carlo. functional: J_deviation, m_plus, Z_runs or adic_mA. */
typedef struct kf_mc_config {
    unsigned q;
    size_t n;
    size_t trials;
    uint64_t seed;
    unsigned parallel_chunks;
    int direct; /* 0: sample the image stream, 1: run the recursion on the input */
    double eps;
    size_t stride; /* 0: about 1024 rows per trial */
    size_t t_min;
} kf_mc_config;

KF_API void kf_mc_config_default(kf_mc_config* cfg);
KF_API kf_status kf_montecarlo(const kf_mc_config* cfg, const char* functional, kf_text** csv, kf_text** json);

/* Exhaustive checks. suite: counting, equidist, translation, isometry or
 * adic-oracle; bound is t, n or k. *passed is 1 when every check held. */
KF_API kf_status kf_verify(const char* suite, unsigned q, unsigned bound, kf_text** report, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* KFRAC_KFRAC_H */
