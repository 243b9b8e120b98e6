#include "kfrac/stats.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "kfrac/error.hpp"

namespace kfrac {

namespace {

mpz_class power(unsigned q, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, e);
    return r;
}

mpq_class qpow(unsigned q, long e) {
    mpq_class r(power(q, static_cast<unsigned long>(std::labs(e))));
    if (e < 0) r = 1 / r;
    return r;
}

void require_q(unsigned q) {
    require(q >= 2, ErrorCode::InvalidArgument, "q must be at least 2");
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned r = q;
    while (r % p == 0) r /= p;
    require(r == 1, ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
}

}  // namespace

mpz_class count_N(long t, long m, unsigned q) {
    require_q(q);
    require(t >= 0, ErrorCode::Domain, "t must be nonnegative");
    require(std::labs(m) <= t, ErrorCode::Domain, "count_N requires -t <= m <= t");
    require((t - m) % 2 == 0, ErrorCode::Domain, "count_N requires m = t mod 2");
    if (m == -t) return 1;
    const long e = m > 0 ? t - m : t - 1 + m;
    return mpz_class(q - 1) * power(q, static_cast<unsigned long>(e));
}

mpq_class expected_J(long t, unsigned q) {
    require_q(q);
    require(t >= 0, ErrorCode::Domain, "t must be nonnegative");
    const mpq_class Q(q);
    mpq_class base = mpq_class(t, 2) * (Q - 1) / Q;
    const mpq_class tail = 1 / ((Q + 1) * qpow(q, t));
    mpq_class r = base - tail;
    r += (t % 2 == 0) ? mpq_class(1 / (Q + 1)) : mpq_class((Q * Q + 1) / (2 * Q * (Q + 1)));
    r.canonicalize();
    return r;
}

mpq_class recurrence_delta(long k, long l, unsigned q) {
    require_q(q);
    const mpq_class Q(q);
    // Return times: 2 q^k/(q-1) for k > 0, 2 q^(|k|+1)/(q-1) for k <= 0.
    auto ret = [&](long s) -> mpq_class { return 2 * qpow(q, s > 0 ? s : -s + 1) / (Q - 1); };
    // Time from s >= 0 to -s.
    auto down_mirror = [&](long s) -> mpq_class { return 2 * Q * (qpow(q, s) - 1) / (Q - 1); };
    mpq_class r;
    if (k == l) {
        r = ret(k);
    } else if (k > l && l >= 0) {
        r = k - l;
    } else if (l > k && k >= 0) {
        r = ret(l) - (l - k);
    } else if (k < 0 && l == 0) {
        r = -k + 2 * Q / (Q - 1);
    } else if (k < 0 && l > 0 && l <= -k) {
        r = -k + 2 * Q / (Q - 1) - l;
    } else if (k >= 0 && l < 0) {
        const long L = -l;
        r = down_mirror(L) + k - L;
    } else if (k < 0 && l < 0 && -l <= -k) {
        const long K = -k, L = -l;
        r = 2 * qpow(q, L + 1) / (Q - 1) + K - L;
    } else if (k < 0 && l > 0) {
        // 0 < |k| < l: Delta(0,l) - Delta(0,k).
        const long K = -k;
        r = (ret(l) - l) - (down_mirror(K) - K);
    } else if (k < 0 && l < 0) {
        // 0 < |k| < |l|.
        const long K = -k, L = -l;
        r = 2 * Q * (qpow(q, L) - qpow(q, K)) / (Q - 1) - L + K;
    } else {
        fail(ErrorCode::Domain, "recurrence time not covered for this (k, l)");
    }
    r.canonicalize();
    return r;
}

bool pattern_feasible(const std::vector<long>& pattern) {
    for (std::size_t i = 0; i + 1 < pattern.size(); ++i) {
        const long a = pattern[i], b = pattern[i + 1];
        if (a > 0) {
            if (b != a - 1) return false;
        } else if (b != a - 1 && b != 1 - a) {
            return false;
        }
    }
    return true;
}

mpq_class pattern_probability(const std::vector<long>& pattern, unsigned q) {
    require_q(q);
    require(!pattern.empty(), ErrorCode::InvalidArgument, "empty pattern");
    if (!pattern_feasible(pattern)) return 0;
    unsigned long up = 0, down = 0;
    for (std::size_t i = 0; i + 1 < pattern.size(); ++i) {
        if (pattern[i] > 0) continue;
        if (pattern[i + 1] == pattern[i] - 1)
            ++down;
        else
            ++up;
    }
    mpq_class r = mpq_class(power(q - 1, up)) / mpq_class(power(q, up + down));
    r /= recurrence_delta(pattern[0], pattern[0], q);
    r.canonicalize();
    return r;
}

StationaryReport stationary_check(unsigned q, long kmax) {
    require_q(q);
    require(kmax >= 1, ErrorCode::InvalidArgument, "kmax must be at least 1");
    StationaryReport rep;
    rep.q = q;
    rep.kmax = kmax;
    const long K = kmax + 2;
    rep.window = K;
    const std::size_t S = static_cast<std::size_t>(2 * K + 1);
    auto idx = [&](long s) { return static_cast<std::size_t>(s + K); };
    const mpq_class Q(q);

    // Embedded jump chain on [-K..K].
    std::vector<std::vector<mpq_class>> P(S, std::vector<mpq_class>(S, 0));
    for (long s = -K; s <= K; ++s) {
        if (s == -K) {
            P[idx(s)][idx(K)] = 1;
        } else if (s > 0) {
            P[idx(s)][idx(s - 1)] = 1;
        } else {
            P[idx(s)][idx(s - 1)] = 1 / Q;
            P[idx(s)][idx(1 - s)] = (Q - 1) / Q;
        }
    }
    // nu (P - I) = 0 with sum(nu) = 1; row S-1 replaced by the normalization.
    std::vector<std::vector<mpq_class>> A(S, std::vector<mpq_class>(S + 1, 0));
    for (std::size_t i = 0; i < S; ++i)
        for (std::size_t j = 0; j < S; ++j) A[i][j] = P[j][i] - (i == j ? 1 : 0);
    for (std::size_t j = 0; j < S; ++j) A[S - 1][j] = 1;
    A[S - 1][S] = 1;
    for (std::size_t c = 0; c < S; ++c) {
        std::size_t piv = c;
        while (piv < S && A[piv][c] == 0) ++piv;
        require(piv < S, ErrorCode::Domain, "singular stationary system");
        std::swap(A[piv], A[c]);
        const mpq_class inv = 1 / A[c][c];
        for (std::size_t j = c; j <= S; ++j) A[c][j] *= inv;
        for (std::size_t i = 0; i < S; ++i) {
            if (i == c || A[i][c] == 0) continue;
            const mpq_class fct = A[i][c];
            for (std::size_t j = c; j <= S; ++j) A[i][j] -= fct * A[c][j];
        }
    }
    std::vector<mpq_class> nu(S);
    for (std::size_t i = 0; i < S; ++i) nu[i] = A[i][S];

    // Mean holding time: 1 everywhere except the folded excursion from -K.
    mpq_class norm = 0;
    for (long s = -K; s <= K; ++s) norm += nu[idx(s)] * (s == -K ? 2 * Q / (Q - 1) : mpq_class(1));

    rep.total = 0;
    rep.all_match = true;
    for (long s = -K; s <= K; ++s) {
        mpq_class dens = nu[idx(s)] / norm;
        dens.canonicalize();
        rep.total += dens;
        if (std::labs(s) <= kmax) {
            mpq_class pred = 1 / recurrence_delta(s, s, q);
            pred.canonicalize();
            if (dens != pred) rep.all_match = false;
            rep.rows.push_back({s, dens, pred});
        }
    }
    // Mass outside the window, from the same return-time formula.
    rep.total += (qpow(q, -K) + qpow(q, -K - 1)) / 2;
    rep.total.canonicalize();
    return rep;
}

long levy_n_min(LevyFamily family) {
    switch (family) {
        case LevyFamily::LIL_UUC:
        case LevyFamily::LIL_ULC:
        case LevyFamily::LIL_LUC:
        case LevyFamily::LIL_LLC:
            return 16;
        case LevyFamily::MPLUS_UUC:
        case LevyFamily::MPLUS_ULC:
        case LevyFamily::MPLUS_LUC:
        case LevyFamily::MPLUS_LLC:
            return 8;
        default:
            return 4;
    }
}

namespace {

double ulog2(double x) { return x < 1.0 ? 0.0 : std::log2(x); }

// log2 n + (1/k)(L2 + ... + L(r-1) + c * Lr), L_j the j-fold underlined log2.
double deheuvels_upper(double n, unsigned k, unsigned r, double c) {
    double acc = 0.0;
    double lj = ulog2(n);
    const double l1 = lj;
    for (unsigned j = 2; j <= r; ++j) {
        lj = ulog2(lj);
        acc += (j == r ? c : 1.0) * lj;
    }
    return l1 + acc / static_cast<double>(k);
}

double lower_core(double n) {
    const double log2log2e = std::log2(std::log2(std::exp(1.0)));
    return std::log2(n) - std::log2(std::log2(std::log2(n))) + log2log2e;
}

}  // namespace

double levy_eval(const LevyBoundary& b, double n) {
    if (n < static_cast<double>(levy_n_min(b.family)))
        fail(ErrorCode::Domain, "n below the minimum for " + to_string(b.family));
    if (!(b.eps > 0)) fail(ErrorCode::InvalidArgument, "eps must be positive");
    const double e = b.eps;
    switch (b.family) {
        case LevyFamily::LIL_UUC:
        case LevyFamily::LIL_LLC: {
            const double ll = std::log(std::log(n));
            const double v = std::sqrt(2 * ll + (3 + e) * std::log(ll));
            return b.family == LevyFamily::LIL_UUC ? v : -v;
        }
        case LevyFamily::LIL_ULC:
        case LevyFamily::LIL_LUC: {
            const double ll = std::log(std::log(n));
            const double v = std::sqrt(2 * ll + std::log(ll));
            return b.family == LevyFamily::LIL_ULC ? v : -v;
        }
        case LevyFamily::RUN_UUC:
            return deheuvels_upper(n, 1, 2, 1 + e);
        case LevyFamily::RUN_ULC:
            return deheuvels_upper(n, 1, 2, 1);
        case LevyFamily::RUN_LUC:
            return std::floor(lower_core(n) - 1 + e);
        case LevyFamily::RUN_LLC:
            return std::floor(lower_core(n) - 2 - e);
        case LevyFamily::MPLUS_UUC:
            return 1 + deheuvels_upper(n / 2, 1, 2, 1 + e);
        case LevyFamily::MPLUS_ULC:
            return 1 + deheuvels_upper(n / 2, 1, 2, 1);
        case LevyFamily::MPLUS_LUC:
            return 1 + std::floor(lower_core(n / 2) + e);
        case LevyFamily::MPLUS_LLC:
            return 1 + std::floor(lower_core(n / 2) - 2 - e);
        case LevyFamily::DEHEUVELS_UUC:
        case LevyFamily::DEHEUVELS_ULC:
            require(b.k >= 1 && b.r >= 2, ErrorCode::InvalidArgument, "Deheuvels boundaries need k >= 1, r >= 2");
            return deheuvels_upper(n, b.k, b.r, b.family == LevyFamily::DEHEUVELS_UUC ? 1 + e : 1);
        case LevyFamily::DEHEUVELS_LUC:
            return std::floor(lower_core(n) + e);
        case LevyFamily::DEHEUVELS_LLC:
            return std::floor(lower_core(n) - 2 - e);
    }
    fail(ErrorCode::InvalidArgument, "unknown boundary family");
}

namespace {
constexpr const char* kFamilyNames[] = {
    "LIL_UUC",   "LIL_ULC",   "LIL_LUC",   "LIL_LLC",   "RUN_UUC",       "RUN_ULC",       "RUN_LUC",       "RUN_LLC",
    "MPLUS_UUC", "MPLUS_ULC", "MPLUS_LUC", "MPLUS_LLC", "DEHEUVELS_UUC", "DEHEUVELS_ULC", "DEHEUVELS_LUC", "DEHEUVELS_LLC",
};
}  // namespace

std::string to_string(LevyFamily family) { return kFamilyNames[static_cast<int>(family)]; }

LevyFamily levy_family_from_string(const std::string& name) {
    for (int i = 0; i < 16; ++i)
        if (name == kFamilyNames[i]) return static_cast<LevyFamily>(i);
    fail(ErrorCode::Parse, "unknown boundary family '" + name + "'");
}

std::string rational_string(const mpq_class& v) {
    mpq_class c = v;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace kfrac
