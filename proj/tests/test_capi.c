/* Exercises the shared library through the C header only. */
#include <stdio.h>
#include <string.h>

#include "kfrac/kfrac.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
    do {                                                               \
        if (!(cond)) {                                                 \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                \
        }                                                              \
    } while (0)

static int text_is(kf_text* t, const char* want) {
    return t && kf_text_length(t) == strlen(want) && memcmp(kf_text_data(t), want, strlen(want)) == 0;
}

static int text_has(kf_text* t, const char* needle) {
    return t && strstr(kf_text_data(t), needle) != NULL;
}

static void word_checks(const kf_field* f2) {
    kf_word *a = NULL, *k = NULL, *back = NULL, *d = NULL, *c = NULL;
    kf_text* t = NULL;
    EXPECT(kf_word_parse("110110010010", 12, KF_FORMAT_ASCII, KF_MSB_FIRST, 2, 0, &a) == KF_OK);
    EXPECT(kf_K(f2, a, &k) == KF_OK);
    EXPECT(kf_word_format(k, KF_FORMAT_ASCII, KF_MSB_FIRST, 2, &t) == KF_OK);
    EXPECT(text_is(t, "111000101111"));
    kf_text_destroy(t);
    EXPECT(kf_K_inverse(f2, k, &back) == KF_OK);
    EXPECT(kf_word_length(back) == 12);
    EXPECT(memcmp(kf_word_data(back), kf_word_data(a), 12 * sizeof(uint32_t)) == 0);
    EXPECT(kf_split_dc(f2, a, &d, &c) == KF_OK);
    EXPECT(kf_word_length(d) == 6 && kf_word_length(c) == 6);
    EXPECT(kf_word_format(d, KF_FORMAT_ASCII, KF_MSB_FIRST, 2, &t) == KF_OK);
    EXPECT(text_is(t, "110011"));
    kf_text_destroy(t);
    EXPECT(kf_kmap_csv(f2, a, &t) == KF_OK);
    EXPECT(text_has(t, "n,a,K,part,index\n1,1,1,D,1\n"));
    kf_text_destroy(t);
    EXPECT(kf_expand_json(f2, a, &t) == KF_OK);
    EXPECT(text_has(t, "\"x^3+x+1\""));
    kf_text_destroy(t);

    kf_profile* p = NULL;
    EXPECT(kf_profile_create(f2, a, &p) == KF_OK);
    EXPECT(kf_profile_length(p) == 12);
    EXPECT(kf_profile_L(p, 12) == 6);
    EXPECT(kf_profile_m(p, 12) == 0);
    EXPECT(kf_profile_J(p, 12) == 4);
    EXPECT(kf_profile_csv(p, 1, &t) == KF_OK);
    EXPECT(text_has(t, "n,L,m,J,K,K_D,K_C\n"));
    kf_text_destroy(t);
    kf_profile_destroy(p);

    kf_word_destroy(a);
    kf_word_destroy(k);
    kf_word_destroy(back);
    kf_word_destroy(d);
    kf_word_destroy(c);
}

static void error_checks(void) {
    kf_field* f = NULL;
    kf_word* w = NULL;
    EXPECT(kf_field_create_q(6, &f) == KF_E_INVALID_ARGUMENT);
    EXPECT(f == NULL);
    EXPECT(strstr(kf_last_error(), "prime power") != NULL);
    EXPECT(kf_field_create_q(2, NULL) == KF_E_INVALID_ARGUMENT);
    EXPECT(kf_word_parse("102", 3, KF_FORMAT_ASCII, KF_MSB_FIRST, 2, 0, &w) == KF_E_PARSE);
    EXPECT(kf_field_create_q(4, &f) == KF_OK);
    EXPECT(strlen(kf_last_error()) == 0);
    EXPECT(kf_field_order(f) == 4);
    kf_field_destroy(f);

    /* x^2 + 1 is reducible over F_2. */
    const uint32_t bad[] = {1, 0, 1};
    EXPECT(kf_field_create(2, 2, bad, 3, &f) == KF_E_INVALID_ARGUMENT);
    const uint32_t good[] = {1, 1, 0, 1};
    EXPECT(kf_field_create(2, 3, good, 4, &f) == KF_OK);
    EXPECT(kf_field_order(f) == 8);
    kf_field_destroy(f);

    /* Destroying NULL is a no-op. */
    kf_word_destroy(NULL);
    kf_text_destroy(NULL);
    kf_adic_destroy(NULL);
}

static void stats_checks(void) {
    kf_text* t = NULL;
    EXPECT(kf_stats_mean_j(2, 2, &t) == KF_OK);
    EXPECT(text_has(t, "\"value\": \"3/4\""));
    kf_text_destroy(t);
    EXPECT(kf_stats_delta(2, -1, 0, &t) == KF_OK);
    EXPECT(text_has(t, "\"value\": \"5\""));
    kf_text_destroy(t);
    EXPECT(kf_stats_count(2, 3, 0, &t) == KF_E_DOMAIN);
    double v = 0;
    EXPECT(kf_levy_eval("RUN_LUC", 0.1, 1, 2, 1048576.0, &v) == KF_OK);
    EXPECT(v == 17.0);
    EXPECT(kf_levy_eval("nope", 0.1, 1, 2, 100.0, &v) != KF_OK);
}

static void adic_checks(void) {
    kf_adic* s = NULL;
    unsigned bit = 9;
    kf_text* t = NULL;
    EXPECT(kf_adic_create(KF_TIE_CANONICAL, &s) == KF_OK);
    EXPECT(kf_adic_step(s, 1, &bit) == KF_OK && bit == 1);
    EXPECT(kf_adic_step(s, 0, &bit) == KF_OK && bit == 0);
    EXPECT(kf_adic_k(s) == 2);
    EXPECT(kf_adic_pair(s, &t) == KF_OK);
    EXPECT(text_is(t, "1,1"));
    kf_text_destroy(t);
    EXPECT(kf_adic_step(s, 2, &bit) == KF_E_INVALID_ARGUMENT);
    kf_adic_destroy(s);
}

static void random_checks(void) {
    kf_word *a = NULL, *b = NULL;
    EXPECT(kf_word_random(3, 1000, 42, &a) == KF_OK);
    EXPECT(kf_word_random(3, 1000, 42, &b) == KF_OK);
    EXPECT(memcmp(kf_word_data(a), kf_word_data(b), 1000 * sizeof(uint32_t)) == 0);
    kf_word_destroy(a);
    kf_word_destroy(b);

    kf_mc_config cfg;
    kf_mc_config_default(&cfg);
    cfg.n = 2048;
    cfg.trials = 4;
    cfg.seed = 3;
    kf_text *csv1 = NULL, *json1 = NULL, *csv2 = NULL, *json2 = NULL;
    EXPECT(kf_montecarlo(&cfg, "J_deviation", &csv1, &json1) == KF_OK);
    cfg.parallel_chunks = 2;
    EXPECT(kf_montecarlo(&cfg, "J_deviation", &csv2, &json2) == KF_OK);
    EXPECT(kf_text_length(csv1) == kf_text_length(csv2));
    EXPECT(strcmp(kf_text_data(csv1), kf_text_data(csv2)) == 0);
    EXPECT(strcmp(kf_text_data(json1), kf_text_data(json2)) == 0);
    kf_text_destroy(csv1);
    kf_text_destroy(csv2);
    kf_text_destroy(json1);
    kf_text_destroy(json2);
    EXPECT(kf_montecarlo(&cfg, "bogus", NULL, &json1) != KF_OK);
}

static void verify_checks(void) {
    kf_text* t = NULL;
    int passed = 0;
    EXPECT(kf_verify("isometry", 2, 6, &t, &passed) == KF_OK);
    EXPECT(passed == 1);
    kf_text_destroy(t);
    EXPECT(kf_verify("nothing", 2, 6, &t, &passed) != KF_OK);
    EXPECT(kf_verify("counting", 2, 40, &t, &passed) == KF_E_LIMIT);
}

/* The CLI golden for profile --q 3 --emit-k on 0212011 must equal the library CSV. */
static void golden_checks(const char* path) {
    char buf[4096];
    FILE* fp = fopen(path, "rb");
    EXPECT(fp != NULL);
    if (!fp) return;
    size_t len = fread(buf, 1, sizeof buf - 1, fp);
    fclose(fp);
    buf[len] = 0;
    kf_field* f3 = NULL;
    kf_word* a = NULL;
    kf_profile* p = NULL;
    kf_text* t = NULL;
    EXPECT(kf_field_create_q(3, &f3) == KF_OK);
    EXPECT(kf_word_parse("0212011", 7, KF_FORMAT_ASCII, KF_MSB_FIRST, 3, 0, &a) == KF_OK);
    EXPECT(kf_profile_create(f3, a, &p) == KF_OK);
    EXPECT(kf_profile_csv(p, 1, &t) == KF_OK);
    EXPECT(text_is(t, buf));
    kf_text_destroy(t);
    kf_profile_destroy(p);
    kf_word_destroy(a);
    kf_field_destroy(f3);
}

int main(int argc, char** argv) {
    EXPECT(strlen(kf_version()) > 0);
    kf_field* f2 = NULL;
    EXPECT(kf_field_create_q(2, &f2) == KF_OK);
    word_checks(f2);
    kf_field_destroy(f2);
    error_checks();
    stats_checks();
    adic_checks();
    random_checks();
    verify_checks();
    if (argc > 1) golden_checks(argv[1]);
    if (failures) fprintf(stderr, "%d failure(s)\n", failures);
    return failures ? 1 : 0;
}
