#include "kfrac/adic2.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "kfrac/error.hpp"

namespace kfrac {

mpz_class phi(const LatticeVec& v) {
    mpz_class a = abs(v.p), b = abs(v.q);
    return a > b ? a : b;
}

namespace {

// True when x should be preferred over y among vectors of equal Phi.
bool preferred(const LatticeVec& x, const LatticeVec& y, TieBreak tie) {
    const int ax = cmp(abs(x.q), abs(y.q));
    const bool canon = tie == TieBreak::canonical;
    if (ax != 0) return canon ? ax < 0 : ax > 0;
    const int sx = sgn(x.q), sy = sgn(y.q);
    if (sx != sy) return canon ? sx > sy : sx < sy;
    const bool px = x.p >= 0, py = y.p >= 0;
    if (px != py) return canon ? px : !px;
    return canon ? x.p < y.p : x.p > y.p;
}

LatticeVec combine(const LatticeVec& u, const LatticeVec& v, const mpz_class& a, const mpz_class& b) {
    return {a * u.p + b * v.p, a * u.q + b * v.q};
}

mpz_class floor_div(const mpz_class& n, const mpz_class& d) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return r;
}

mpz_class ceil_div(const mpz_class& n, const mpz_class& d) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return r;
}

// Integer mu minimizing Phi(v - mu u). The objective is convex and piecewise
// linear in mu, so the optimum sits next to one of its real breakpoints.
mpz_class best_multiplier(const LatticeVec& u, const LatticeVec& v) {
    std::vector<std::pair<mpz_class, mpz_class>> breaks;  // numerator, denominator
    if (u.p != 0) breaks.emplace_back(v.p, u.p);
    if (u.q != 0) breaks.emplace_back(v.q, u.q);
    if (u.p != u.q) breaks.emplace_back(v.p - v.q, u.p - u.q);
    if (u.p != -u.q) breaks.emplace_back(v.p + v.q, u.p + u.q);
    mpz_class best = 0;
    mpz_class best_val = phi(v);
    auto consider = [&](const mpz_class& mu) {
        const mpz_class val = phi({v.p - mu * u.p, v.q - mu * u.q});
        if (val < best_val || (val == best_val && abs(mu) < abs(best))) {
            best_val = val;
            best = mu;
        }
    };
    for (auto& [num, den] : breaks) {
        consider(floor_div(num, den));
        consider(ceil_div(num, den));
    }
    return best;
}

// Max-norm Gauss reduction. Afterwards Phi(u) <= Phi(v - mu u) for every mu,
// and u is a shortest nonzero vector. Residues, when given, follow along.
void reduce_basis(LatticeVec& u, LatticeVec& v, mpz_class* Ru, mpz_class* Rv) {
    if (phi(v) < phi(u)) {
        std::swap(u, v);
        if (Ru) std::swap(*Ru, *Rv);
    }
    for (;;) {
        const mpz_class mu = best_multiplier(u, v);
        if (mu != 0) {
            v.p -= mu * u.p;
            v.q -= mu * u.q;
            if (Ru) *Rv -= mu * *Ru;
        }
        if (phi(v) >= phi(u)) break;
        std::swap(u, v);
        if (Ru) std::swap(*Ru, *Rv);
    }
}

bool odd(const mpz_class& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

// Real points where Phi(c1 u + c2 v), seen as a function of c1, can bend:
// roots of p, q, p - q and p + q.
std::vector<std::pair<mpz_class, mpz_class>> kinks(const LatticeVec& u, const LatticeVec& v, const mpz_class& c2) {
    std::vector<std::pair<mpz_class, mpz_class>> out;
    auto add = [&](const mpz_class& slope, const mpz_class& offset) {
        if (slope != 0) out.emplace_back(-offset, slope);
    };
    add(u.p, c2 * v.p);
    add(u.q, c2 * v.q);
    add(u.p - u.q, c2 * (v.p - v.q));
    add(u.p + u.q, c2 * (v.p + v.q));
    return out;
}

struct OddMinimum {
    LatticeVec w;
    mpz_class cu, cv;
};

// Phi-minimal lattice vector with odd q, i.e. the best 2-adic fraction p/q.
// (u, v) must be a reduced basis of a lattice with determinant +-2^k.
OddMinimum select_minimal(const LatticeVec& u, const LatticeVec& v, unsigned k, TieBreak tie) {
    const bool qu = odd(u.q), qv = odd(v.q);
    if (!qu && !qv) throw std::logic_error("2-adic lattice has no odd denominator");
    // c1 must have this parity for the given c2; -1 means free.
    auto parity = [&](const mpz_class& c2) -> int {
        if (!qu) return odd(c2) ? -1 : 2;  // 2: no c1 works
        return (qv && odd(c2)) ? 0 : 1;
    };
    auto fits = [](const mpz_class& c1, int par) { return par < 0 || (odd(c1) ? 1 : 0) == par; };

    // Upper bound from a few odd vectors, then |c2| <= 2 Phi(w) Phi(u) / 2^k.
    mpz_class bound = -1;
    for (const LatticeVec& w : {u, v, LatticeVec{u.p + v.p, u.q + v.q}, LatticeVec{u.p - v.p, u.q - v.q}})
        if (odd(w.q) && (bound < 0 || phi(w) < bound)) bound = phi(w);
    mpz_class c2max = 2 * bound * phi(u);
    c2max >>= k;
    require(c2max <= 64, ErrorCode::Limit, "2-adic basis is not reduced");
    const long R = c2max.get_si();

    mpz_class target = -1;
    for (long c2i = -R; c2i <= R; ++c2i) {
        const mpz_class c2 = c2i;
        const int par = parity(c2);
        if (par == 2) continue;
        for (auto& [num, den] : kinks(u, v, c2)) {
            const mpz_class lo = floor_div(num, den);
            for (mpz_class c1 = lo - 1; c1 <= lo + 2; ++c1) {
                if (!fits(c1, par)) continue;
                const mpz_class f = phi(combine(u, v, c1, c2));
                if (target < 0 || f < target) target = f;
            }
        }
    }

    OddMinimum best;
    bool have = false;
    for (long c2i = -R; c2i <= R; ++c2i) {
        const mpz_class c2 = c2i;
        const int par = parity(c2);
        if (par == 2) continue;
        // Exact range of c1 with max(|p|, |q|) <= target.
        mpz_class lo, hi;
        bool bounded = false, empty = false;
        auto clip = [&](const mpz_class& slope, const mpz_class& offset) {
            if (slope == 0) {
                if (abs(offset) > target) empty = true;
                return;
            }
            mpz_class a = -target - offset, b = target - offset;
            if (slope < 0) std::swap(a, b);
            const mpz_class l = ceil_div(a, slope), h = floor_div(b, slope);
            if (!bounded || l > lo) lo = l;
            if (!bounded || h < hi) hi = h;
            bounded = true;
        };
        clip(u.p, c2 * v.p);
        clip(u.q, c2 * v.q);
        if (empty || !bounded) continue;
        if (!fits(lo, par)) ++lo;
        if (!fits(hi, par)) --hi;
        if (lo > hi) continue;
        std::vector<mpz_class> cands{lo, hi};
        for (const auto& [slope, offset] : {std::pair{u.p, c2 * v.p}, std::pair{u.q, c2 * v.q}}) {
            if (slope == 0) continue;
            const mpz_class r = floor_div(-offset, slope);
            for (mpz_class c1 = r - 1; c1 <= r + 2; ++c1)
                if (c1 >= lo && c1 <= hi && fits(c1, par)) cands.push_back(c1);
        }
        for (const mpz_class& c1 : cands) {
            LatticeVec w = combine(u, v, c1, c2);
            if (phi(w) != target || !odd(w.q)) throw std::logic_error("2-adic candidate off target");
            if (!have || preferred(w, best.w, tie)) {
                best = {std::move(w), c1, c2};
                have = true;
            }
        }
    }
    if (!have) throw std::logic_error("2-adic minimum not found");
    return best;
}

}  // namespace

AdicState::AdicState(TieBreak tie)
    : tie_(tie), u_{1, 0}, v_{0, 1}, pair_{0, 1}, Ru_(-1), Rv_(0), Rpair_(0) {}

mpz_class AdicState::a_k() const {
    mpz_class a = 0;
    for (std::size_t i = bits_.size(); i-- > 0;) {
        a <<= 1;
        if (bits_[i]) a += 1;
    }
    return a;
}

void AdicState::reduce() { reduce_basis(u_, v_, &Ru_, &Rv_); }

unsigned AdicState::step(unsigned bit) {
    require(bit < 2, ErrorCode::InvalidArgument, "2-adic input must be binary");
    const mpz_class before = phi(pair_);
    bits_.push_back(static_cast<unsigned char>(bit));
    ++k_;

    const mpz_class tu = bit ? mpz_class(Ru_ + u_.q) : Ru_;
    const mpz_class tv = bit ? mpz_class(Rv_ + v_.q) : Rv_;
    const mpz_class tp = bit ? mpz_class(Rpair_ + pair_.q) : Rpair_;
    const bool ou = mpz_odd_p(tu.get_mpz_t()) != 0;
    const bool ov = mpz_odd_p(tv.get_mpz_t()) != 0;
    if (!ou && ov) {
        Ru_ = tu / 2;
        v_ = {2 * v_.p, 2 * v_.q};
        Rv_ = tv;
    } else if (ou && !ov) {
        u_ = {2 * u_.p, 2 * u_.q};
        Ru_ = tu;
        Rv_ = tv / 2;
    } else if (ou && ov) {
        u_ = {u_.p + v_.p, u_.q + v_.q};
        Ru_ = (tu + tv) / 2;
        v_ = {2 * v_.p, 2 * v_.q};
        Rv_ = tv;
    } else {
        throw std::logic_error("2-adic lattice lost its index-2 refinement");
    }
    reduce();

    unsigned out;
    const OddMinimum fresh = select_minimal(u_, v_, static_cast<unsigned>(k_), tie_);
    if (mpz_even_p(tp.get_mpz_t())) {
        // The previous pair survives and stays minimal.
        Rpair_ = tp / 2;
        if (phi(pair_) != phi(fresh.w)) throw std::logic_error("surviving 2-adic pair is not minimal");
        out = 0;
    } else {
        pair_ = fresh.w;
        Rpair_ = fresh.cu * Ru_ + fresh.cv * Rv_;
        out = 1;
    }
    if (phi(pair_) < before) throw std::logic_error("2-adic complexity decreased");
    return out;
}

LatticeVec minimal_pair(const mpz_class& a_k, unsigned k, TieBreak tie) {
    require(k >= 1, ErrorCode::InvalidArgument, "minimal_pair needs k >= 1");
    mpz_class mod = 1;
    mod <<= k;
    require(a_k >= 0 && a_k < mod, ErrorCode::InvalidArgument, "a_k must lie in [0, 2^k)");
    LatticeVec u{a_k, 1}, v{mod, 0};
    reduce_basis(u, v, nullptr, nullptr);
    return select_minimal(u, v, k, tie).w;
}

LatticeVec brute_force_minimal_pair(const mpz_class& a_k, unsigned k, TieBreak tie) {
    require(k >= 1, ErrorCode::InvalidArgument, "brute force needs k >= 1");
    mpz_class mod = 1;
    mod <<= k;
    LatticeVec best;
    mpz_class best_phi = -1;
    auto offer = [&](LatticeVec w) {
        const mpz_class f = phi(w);
        if (best_phi < 0 || f < best_phi || (f == best_phi && preferred(w, best, tie))) {
            best_phi = f;
            best = std::move(w);
        }
    };
    // Every odd |q| up to the best Phi found so far; q = 1 already gives Phi <= 2^k.
    for (mpz_class q = 1; best_phi < 0 || q <= best_phi; q += 2) {
        for (const mpz_class& s : {q, mpz_class(-q)}) {
            mpz_class r;
            const mpz_class prod = s * a_k;
            mpz_fdiv_r(r.get_mpz_t(), prod.get_mpz_t(), mod.get_mpz_t());
            offer({r, s});
            offer({r - mod, s});
        }
    }
    return best;
}

AdicProfile adic_profile(const Word& a, TieBreak tie) {
    AdicProfile out;
    const std::size_t n = a.size();
    out.A.reserve(n);
    out.J_A.assign(1, 0);
    out.m_A.assign(1, 0);
    out.Phi.assign(1, 1);
    out.pairs.assign(1, LatticeVec{0, 1});
    AdicState st(tie);
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned bit = st.step(a[i]);
        out.A.push_back(bit);
        out.J_A.push_back(out.J_A.back() + bit);
        out.m_A.push_back(2 * out.J_A.back() - static_cast<long>(i + 1));
        out.Phi.push_back(phi(st.pair()));
        out.pairs.push_back(st.pair());
    }
    return out;
}

std::string phi2_string(const mpz_class& Phi) {
    require(Phi > 0, ErrorCode::Domain, "Phi must be positive");
    const std::size_t bits = mpz_sizeinbase(Phi.get_mpz_t(), 2);
    if (mpz_scan1(Phi.get_mpz_t(), 0) == bits - 1) return std::to_string(bits - 1);
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, Phi.get_mpz_t());
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", std::log2(mant) + static_cast<double>(exp));
    return buf;
}

}  // namespace kfrac
