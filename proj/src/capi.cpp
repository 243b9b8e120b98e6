#include "kfrac/kfrac.h"

#include <cmath>
#include <new>
#include <sstream>
#include <string>

#include "json.hpp"
#include "kfrac/adic2.hpp"
#include "kfrac/cfrac.hpp"
#include "kfrac/io.hpp"
#include "kfrac/montecarlo.hpp"
#include "kfrac/profiles.hpp"
#include "kfrac/stats.hpp"
#include "kfrac/verify.hpp"

struct kf_field {
    kfrac::Field f;
};
struct kf_word {
    kfrac::Word w;
};
struct kf_text {
    std::string s;
};
struct kf_profile {
    kfrac::ProfileSeries p;
    kfrac::DCSplit split;
    unsigned q;
};
struct kf_adic {
    kfrac::AdicState s;
};

namespace {

using kfrac::ErrorCode;
using nlohmann::ordered_json;

thread_local std::string g_error;

kf_status status_of(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidArgument: return KF_E_INVALID_ARGUMENT;
        case ErrorCode::Domain: return KF_E_DOMAIN;
        case ErrorCode::Parse: return KF_E_PARSE;
        case ErrorCode::PrecisionExhausted: return KF_E_PRECISION;
        case ErrorCode::Limit: return KF_E_LIMIT;
        case ErrorCode::Io: return KF_E_IO;
    }
    return KF_E_INTERNAL;
}

template <class F>
kf_status guarded(F&& body) {
    try {
        g_error.clear();
        body();
        return KF_OK;
    } catch (const kfrac::Error& e) {
        g_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        g_error = "out of memory";
        return KF_E_NOMEM;
    } catch (const std::exception& e) {
        g_error = std::string("internal error: ") + e.what();
        return KF_E_INTERNAL;
    }
}

void need(const void* p, const char* what) {
    kfrac::require(p != nullptr, ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

kf_text* text(std::string s) { return new kf_text{std::move(s)}; }

void rational_json_fields(const char* key, const mpq_class& v, ordered_json& j) {
    j[key] = kfrac::rational_string(v);
    j[std::string(key) + "_decimal"] = v.get_d();
}

}  // namespace

extern "C" {

const char* kf_last_error(void) { return g_error.c_str(); }
const char* kf_version(void) { return "0.3.0"; }

const char* kf_text_data(const kf_text* t) { return t ? t->s.c_str() : ""; }
size_t kf_text_length(const kf_text* t) { return t ? t->s.size() : 0; }
void kf_text_destroy(kf_text* t) { delete t; }

kf_status kf_field_create(unsigned p, unsigned e, const uint32_t* modulus, size_t modulus_len, kf_field** out) {
    return guarded([&] {
        need(out, "out");
        std::vector<kfrac::Elem> mod;
        if (modulus) mod.assign(modulus, modulus + modulus_len);
        *out = new kf_field{kfrac::Field::make(p, e, std::move(mod))};
    });
}

kf_status kf_field_create_q(unsigned q, kf_field** out) {
    return guarded([&] {
        need(out, "out");
        *out = new kf_field{kfrac::field_of_order(q)};
    });
}

unsigned kf_field_order(const kf_field* f) { return f ? f->f.q() : 0; }
void kf_field_destroy(kf_field* f) { delete f; }

kf_status kf_word_create(const uint32_t* symbols, size_t len, kf_word** out) {
    return guarded([&] {
        need(out, "out");
        if (len) need(symbols, "symbols");
        *out = new kf_word{kfrac::Word(symbols, symbols + len)};
    });
}

kf_status kf_word_random(unsigned q, size_t len, uint64_t seed, kf_word** out) {
    return guarded([&] {
        need(out, "out");
        *out = new kf_word{kfrac::random_symbols(q, len, seed)};
    });
}

kf_status kf_word_parse(const char* data, size_t len, kf_format fmt, kf_bit_order order, unsigned q, size_t limit,
                        kf_word** out) {
    return guarded([&] {
        need(out, "out");
        if (len) need(data, "data");
        const auto f = static_cast<kfrac::InputFormat>(fmt);
        const auto o = order == KF_LSB_FIRST ? kfrac::BitOrder::lsb_first : kfrac::BitOrder::msb_first;
        *out = new kf_word{kfrac::parse_symbols(std::string_view(data ? data : "", len), f, o, q, limit)};
    });
}

kf_status kf_word_format(const kf_word* w, kf_format fmt, kf_bit_order order, unsigned q, kf_text** out) {
    return guarded([&] {
        need(w, "word");
        need(out, "out");
        const auto o = order == KF_LSB_FIRST ? kfrac::BitOrder::lsb_first : kfrac::BitOrder::msb_first;
        *out = text(kfrac::format_symbols(w->w, static_cast<kfrac::InputFormat>(fmt), o, q));
    });
}

size_t kf_word_length(const kf_word* w) { return w ? w->w.size() : 0; }
const uint32_t* kf_word_data(const kf_word* w) { return w ? w->w.data() : nullptr; }
void kf_word_destroy(kf_word* w) { delete w; }

}  // extern "C"

namespace {

template <class F>
kf_status word_map(const kf_field* f, const kf_word* a, kf_word** out, F&& fn) {
    return guarded([&] {
        need(f, "field");
        need(a, "word");
        need(out, "out");
        *out = new kf_word{fn(f->f, a->w)};
    });
}

}  // namespace

extern "C" {

kf_status kf_K(const kf_field* f, const kf_word* a, kf_word** out) { return word_map(f, a, out, kfrac::K); }
kf_status kf_K_reference(const kf_field* f, const kf_word* a, kf_word** out) {
    return word_map(f, a, out, kfrac::K_reference);
}
kf_status kf_K_inverse(const kf_field* f, const kf_word* b, kf_word** out) {
    return word_map(f, b, out, kfrac::K_inverse);
}
kf_status kf_iterate_K(const kf_field* f, const kf_word* a, unsigned k, kf_word** out) {
    return word_map(f, a, out, [k](const kfrac::Field& fld, const kfrac::Word& w) { return kfrac::iterate_K(fld, w, k); });
}
kf_status kf_K_infinity(const kf_field* f, const kf_word* a, kf_word** out) {
    return word_map(f, a, out, kfrac::K_infinity);
}

kf_status kf_split_dc(const kf_field* f, const kf_word* a, kf_word** D, kf_word** C) {
    return guarded([&] {
        need(f, "field");
        need(a, "word");
        need(D, "D");
        need(C, "C");
        kfrac::DCSplit s = kfrac::split_dc(f->f, a->w);
        *D = new kf_word{std::move(s.D)};
        *C = new kf_word{std::move(s.C)};
    });
}

kf_status kf_kmap_csv(const kf_field* f, const kf_word* a, kf_text** out) {
    return guarded([&] {
        need(f, "field");
        need(a, "word");
        need(out, "out");
        const kfrac::Word b = kfrac::K(f->f, a->w);
        const kfrac::DCSplit s = kfrac::split_discrepancy(b);
        std::ostringstream os;
        os << "n,a,K,part,index\n";
        for (std::size_t i = 0; i < b.size(); ++i)
            os << i + 1 << ',' << a->w[i] << ',' << b[i] << ',' << (s.map[i].first == kfrac::Part::D ? 'D' : 'C')
               << ',' << s.map[i].second << '\n';
        *out = text(os.str());
    });
}

kf_status kf_iterate_csv(const kf_field* f, const kf_word* a, unsigned k_max, kf_text** out) {
    return guarded([&] {
        need(f, "field");
        need(a, "word");
        need(out, "out");
        const unsigned q = f->f.q();
        std::ostringstream os;
        os << "k,word\n";
        kfrac::Word w = a->w;
        for (unsigned k = 0; k <= k_max; ++k) {
            os << k << ',' << kfrac::word_text(w, q) << '\n';
            if (k < k_max) w = kfrac::K(f->f, w);
        }
        os << "inf," << kfrac::word_text(kfrac::K_infinity(f->f, a->w), q) << '\n';
        *out = text(os.str());
    });
}

kf_status kf_shifted_csv(const kf_field* f, const kf_word* a, kf_text** out) {
    return guarded([&] {
        need(f, "field");
        need(a, "word");
        need(out, "out");
        const unsigned q = f->f.q();
        const auto all = kfrac::shifted_profiles(f->f, a->w);
        std::ostringstream os;
        os << "i,suffix,K\n";
        for (std::size_t i = 0; i < all.size(); ++i) {
            const kfrac::Word suffix(a->w.begin() + static_cast<std::ptrdiff_t>(i), a->w.end());
            os << i + 1 << ',' << kfrac::word_text(suffix, q) << ',' << kfrac::word_text(all[i], q) << '\n';
        }
        *out = text(os.str());
    });
}

kf_status kf_expand_json(const kf_field* f, const kf_word* a, kf_text** out) {
    return guarded([&] {
        need(f, "field");
        need(a, "word");
        need(out, "out");
        const kfrac::CFExpansion e = kfrac::expand(f->f, a->w);
        ordered_json j;
        j["schema"] = 1;
        j["q"] = f->f.q();
        ordered_json dens = ordered_json::array();
        for (const auto& A : e.denominators)
            dens.push_back({{"text", kfrac::to_string(A)}, {"coefficients", A.coeffs()}});
        j["denominators"] = dens;
        j["terminated"] = e.terminated;
        j["determined_prefix_length"] = e.determined_prefix_length;
        j["pending_zero_run"] = e.pending_zero_run;
        j["pending_degree"] = e.pending_degree;
        j["pending_head"] = e.pending_head;
        *out = text(j.dump(2) + "\n");
    });
}

kf_status kf_profile_create(const kf_field* f, const kf_word* a, kf_profile** out) {
    return guarded([&] {
        need(f, "field");
        need(a, "word");
        need(out, "out");
        kfrac::ProfileSeries p = kfrac::profile(f->f, a->w);
        kfrac::DCSplit s = kfrac::split_discrepancy(p.K);
        *out = new kf_profile{std::move(p), std::move(s), f->f.q()};
    });
}

size_t kf_profile_length(const kf_profile* p) { return p ? p->p.length() : 0; }

}  // extern "C"

namespace {
int column(const kf_profile* p, const std::vector<int> kfrac::ProfileSeries::*col, size_t n) {
    if (!p || n >= (p->p.*col).size()) return 0;
    return (p->p.*col)[n];
}
}  // namespace

extern "C" {

int kf_profile_L(const kf_profile* p, size_t n) { return column(p, &kfrac::ProfileSeries::L, n); }
int kf_profile_m(const kf_profile* p, size_t n) { return column(p, &kfrac::ProfileSeries::m, n); }
int kf_profile_J(const kf_profile* p, size_t n) { return column(p, &kfrac::ProfileSeries::J, n); }

kf_status kf_profile_csv(const kf_profile* p, int emit_k, kf_text** out) {
    return guarded([&] {
        need(p, "profile");
        need(out, "out");
        const auto& s = p->p;
        std::string csv = emit_k ? "n,L,m,J,K,K_D,K_C\n" : "n,L,m,J\n";
        csv.reserve(csv.size() + s.length() * 24);
        for (std::size_t n = 1; n <= s.length(); ++n) {
            csv += std::to_string(n);
            csv += ',' + std::to_string(s.L[n]) + ',' + std::to_string(s.m[n]) + ',' + std::to_string(s.J[n]);
            if (emit_k) {
                const std::string sym = std::to_string(s.K[n - 1]);
                const bool d = p->split.map[n - 1].first == kfrac::Part::D;
                csv += ',' + sym + ',' + (d ? sym : "") + ',' + (d ? "" : sym);
            }
            csv += '\n';
        }
        *out = text(std::move(csv));
    });
}

void kf_profile_destroy(kf_profile* p) { delete p; }

kf_status kf_adic_create(kf_tie_break tie, kf_adic** out) {
    return guarded([&] {
        need(out, "out");
        *out = new kf_adic{kfrac::AdicState(tie == KF_TIE_ALTERNATE ? kfrac::TieBreak::alternate
                                                                    : kfrac::TieBreak::canonical)};
    });
}

kf_status kf_adic_step(kf_adic* s, unsigned bit, unsigned* a_bit) {
    return guarded([&] {
        need(s, "state");
        const unsigned r = s->s.step(bit);
        if (a_bit) *a_bit = r;
    });
}

size_t kf_adic_k(const kf_adic* s) { return s ? s->s.k() : 0; }

kf_status kf_adic_pair(const kf_adic* s, kf_text** out) {
    return guarded([&] {
        need(s, "state");
        need(out, "out");
        *out = text(s->s.pair().p.get_str() + "," + s->s.pair().q.get_str());
    });
}

void kf_adic_destroy(kf_adic* s) { delete s; }

kf_status kf_adic_csv(const kf_word* a, kf_tie_break tie, kf_text** out) {
    return guarded([&] {
        need(a, "word");
        need(out, "out");
        const auto prof = kfrac::adic_profile(
            a->w, tie == KF_TIE_ALTERNATE ? kfrac::TieBreak::alternate : kfrac::TieBreak::canonical);
        std::string csv = "k,a,A,J_A,m_A,c,d,phi2\n";
        for (std::size_t k = 1; k <= prof.A.size(); ++k) {
            csv += std::to_string(k) + ',' + std::to_string(a->w[k - 1]) + ',' + std::to_string(prof.A[k - 1]) + ',' +
                   std::to_string(prof.J_A[k]) + ',' + std::to_string(prof.m_A[k]) + ',' + prof.pairs[k].p.get_str() +
                   ',' + prof.pairs[k].q.get_str() + ',' + kfrac::phi2_string(prof.Phi[k]) + '\n';
        }
        *out = text(std::move(csv));
    });
}

kf_status kf_stats_count(unsigned q, long t, long m, kf_text** out) {
    return guarded([&] {
        need(out, "out");
        const mpz_class v = kfrac::count_N(t, m, q);
        ordered_json j;
        j["schema"] = 1;
        j["op"] = "count";
        j["q"] = q;
        j["t"] = t;
        j["m"] = m;
        rational_json_fields("value", mpq_class(v), j);
        *out = text(j.dump(2) + "\n");
    });
}

kf_status kf_stats_mean_j(unsigned q, long t, kf_text** out) {
    return guarded([&] {
        need(out, "out");
        ordered_json j;
        j["schema"] = 1;
        j["op"] = "meanJ";
        j["q"] = q;
        j["t"] = t;
        rational_json_fields("value", kfrac::expected_J(t, q), j);
        *out = text(j.dump(2) + "\n");
    });
}

kf_status kf_stats_delta(unsigned q, long k, long l, kf_text** out) {
    return guarded([&] {
        need(out, "out");
        ordered_json j;
        j["schema"] = 1;
        j["op"] = "delta";
        j["q"] = q;
        j["k"] = k;
        j["l"] = l;
        rational_json_fields("value", kfrac::recurrence_delta(k, l, q), j);
        *out = text(j.dump(2) + "\n");
    });
}

kf_status kf_stats_pattern(unsigned q, const long* pattern, size_t len, kf_text** out) {
    return guarded([&] {
        need(out, "out");
        if (len) need(pattern, "pattern");
        const std::vector<long> pat(pattern, pattern + len);
        ordered_json j;
        j["schema"] = 1;
        j["op"] = "pattern";
        j["q"] = q;
        j["pattern"] = pat;
        j["feasible"] = kfrac::pattern_feasible(pat);
        rational_json_fields("value", kfrac::pattern_probability(pat, q), j);
        *out = text(j.dump(2) + "\n");
    });
}

kf_status kf_stats_stationary(unsigned q, long kmax, kf_text** out) {
    return guarded([&] {
        need(out, "out");
        const kfrac::StationaryReport r = kfrac::stationary_check(q, kmax);
        ordered_json j;
        j["schema"] = 1;
        j["op"] = "stationary";
        j["q"] = q;
        j["kmax"] = kmax;
        j["window"] = r.window;
        ordered_json rows = ordered_json::array();
        for (const auto& row : r.rows) {
            ordered_json e;
            e["k"] = row.k;
            rational_json_fields("density", row.density, e);
            rational_json_fields("predicted", row.predicted, e);
            e["match"] = row.density == row.predicted;
            rows.push_back(e);
        }
        j["rows"] = rows;
        rational_json_fields("total", r.total, j);
        j["all_match"] = r.all_match;
        *out = text(j.dump(2) + "\n");
    });
}

kf_status kf_levy_eval(const char* family, double eps, unsigned k, unsigned r, double n, double* out) {
    return guarded([&] {
        need(family, "family");
        need(out, "out");
        kfrac::LevyBoundary b;
        b.family = kfrac::levy_family_from_string(family);
        b.eps = eps;
        b.k = k;
        b.r = r;
        *out = kfrac::levy_eval(b, n);
    });
}

void kf_mc_config_default(kf_mc_config* cfg) {
    if (!cfg) return;
    const kfrac::MCConfig d;
    cfg->q = d.q;
    cfg->n = d.n;
    cfg->trials = d.trials;
    cfg->seed = d.seed;
    cfg->parallel_chunks = d.parallel_chunks;
    cfg->direct = d.sampling == kfrac::Sampling::direct;
    cfg->eps = d.eps;
    cfg->stride = d.stride;
    cfg->t_min = d.t_min;
}

kf_status kf_montecarlo(const kf_mc_config* cfg, const char* functional, kf_text** csv, kf_text** json) {
    return guarded([&] {
        need(cfg, "config");
        need(functional, "functional");
        kfrac::MCConfig c;
        c.q = cfg->q;
        c.n = cfg->n;
        c.trials = cfg->trials;
        c.seed = cfg->seed;
        c.parallel_chunks = cfg->parallel_chunks;
        c.sampling = cfg->direct ? kfrac::Sampling::direct : kfrac::Sampling::image;
        c.eps = cfg->eps;
        c.stride = cfg->stride;
        c.t_min = cfg->t_min;
        const kfrac::MCResult r = kfrac::monte_carlo(c, kfrac::functional_from_string(functional));
        if (csv) *csv = text(kfrac::mc_csv(r));
        if (json) *json = text(kfrac::mc_json(r));
    });
}

kf_status kf_verify(const char* suite, unsigned q, unsigned bound, kf_text** report, int* passed) {
    return guarded([&] {
        need(suite, "suite");
        const std::string s = suite;
        kfrac::VerifyReport r;
        if (s == "counting")
            r = kfrac::verify_counting(q, bound);
        else if (s == "equidist")
            r = kfrac::verify_equidist(q, bound);
        else if (s == "translation")
            r = kfrac::verify_translation(q, bound);
        else if (s == "isometry")
            r = kfrac::verify_isometry(q, bound);
        else if (s == "adic-oracle")
            r = kfrac::verify_adic_oracle(bound);
        else
            kfrac::fail(ErrorCode::InvalidArgument,
                        "unknown suite '" + s + "' (counting, equidist, translation, isometry, adic-oracle)");
        if (report) *report = text(r.text());
        if (passed) *passed = r.ok() ? 1 : 0;
    });
}

}  // extern "C"
