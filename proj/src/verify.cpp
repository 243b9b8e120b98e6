#include "kfrac/verify.hpp"

#include <bit>
#include <functional>
#include <map>
#include <sstream>

#include <gmpxx.h>

#include "kfrac/adic2.hpp"
#include "kfrac/cfrac.hpp"
#include "kfrac/elbmd.hpp"
#include "kfrac/error.hpp"
#include "kfrac/stats.hpp"

namespace kfrac {

bool VerifyReport::ok() const {
    for (const auto& l : lines)
        if (l.failures) return false;
    return true;
}

std::string VerifyReport::text() const {
    std::ostringstream os;
    os << "suite " << suite << '\n';
    for (const auto& l : lines) {
        os << (l.failures ? "FAIL " : "ok   ") << l.name << ": " << l.checked << " checked, " << l.failures
           << " failures";
        if (!l.note.empty()) os << " (" << l.note << ')';
        os << '\n';
    }
    os << (ok() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

namespace {

std::uint64_t states(unsigned q, unsigned t) {
    std::uint64_t s = 1;
    for (unsigned i = 0; i < t; ++i) {
        s *= q;
        require(s <= kMaxStates, ErrorCode::Limit, "refusing more than 2^26 states");
    }
    return s;
}

using Dist = std::map<int, std::uint64_t>;

// Law of m after t further symbols from a given state.
Dist deviation_law(const ElbmdState& st, unsigned q, unsigned t) {
    Dist d;
    std::function<void(const ElbmdState&, unsigned)> go = [&](const ElbmdState& s, unsigned left) {
        if (left == 0) {
            ++d[s.m()];
            return;
        }
        for (Elem x = 0; x < q; ++x) {
            ElbmdState c = s;
            c.step(x);
            go(c, left - 1);
        }
    };
    go(st, t);
    return d;
}

std::uint64_t binomial(unsigned n, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

VerifyReport verify_counting(unsigned q, unsigned t) {
    const Field f = field_of_order(q);
    states(q, t);
    std::vector<Dist> mcount(t + 1);
    std::vector<std::uint64_t> Jsum(t + 1, 0);
    std::vector<std::map<int, std::uint64_t>> jprime(t + 1);

    std::function<void(const ElbmdState&, unsigned, int)> dfs = [&](const ElbmdState& st, unsigned s, int J) {
        ++mcount[s][st.m()];
        Jsum[s] += static_cast<std::uint64_t>(J);
        if (s % 2 == 0) ++jprime[s][J - (st.m() > 0 ? 1 : 0)];
        if (s == t) return;
        for (Elem x = 0; x < q; ++x) {
            ElbmdState c = st;
            c.step(x);
            dfs(c, s + 1, J + (c.d() > st.d() ? 1 : 0));
        }
    };
    dfs(ElbmdState(f, false), 0, 0);

    VerifyReport rep;
    rep.suite = "counting q=" + std::to_string(q) + " t=" + std::to_string(t);
    CheckLine cor13{"deviation counts N(t,m)"}, total{"sum over m of N(t,m) = q^t"}, thm12{"case counts m=0, m<0, m>0"},
        meanJ{"mean jump complexity"}, binom{"J' counts = q^n C(n,j) (q-1)^j"};
    for (unsigned s = 0; s <= t; ++s) {
        mpz_class sum = 0, qs;
        mpz_ui_pow_ui(qs.get_mpz_t(), q, s);
        for (int m = -static_cast<int>(s); m <= static_cast<int>(s); m += 2) {
            const mpz_class expect = count_N(s, m, q);
            sum += expect;
            const auto it = mcount[s].find(m);
            const std::uint64_t got = it == mcount[s].end() ? 0 : it->second;
            ++cor13.checked;
            if (mpz_class(static_cast<unsigned long>(got)) != expect) ++cor13.failures;

            if (s == 0) continue;
            // Case formulas written out independently of count_N.
            mpz_class c;
            if (m == 0) {
                mpz_ui_pow_ui(c.get_mpz_t(), q, s - 1);
                c *= q - 1;
            } else if (m < 0) {
                if (m == -static_cast<int>(s)) {
                    c = 1;
                } else {
                    mpz_ui_pow_ui(c.get_mpz_t(), q, static_cast<unsigned long>(static_cast<int>(s) - 1 + m));
                    c *= q - 1;
                }
            } else {
                mpz_ui_pow_ui(c.get_mpz_t(), q, static_cast<unsigned long>(static_cast<int>(s) - m));
                c *= q - 1;
            }
            ++thm12.checked;
            if (mpz_class(static_cast<unsigned long>(got)) != c) ++thm12.failures;
        }
        ++total.checked;
        if (sum != qs) ++total.failures;

        ++meanJ.checked;
        mpq_class mean(mpz_class(static_cast<unsigned long>(Jsum[s])), qs);
        mean.canonicalize();
        if (mean != expected_J(s, q)) ++meanJ.failures;

        if (s % 2 == 0) {
            const unsigned n = s / 2;
            for (unsigned j = 0; j <= n; ++j) {
                // Each K_D prefix of length n comes from q^n words of length 2n.
                std::uint64_t expect = binomial(n, j);
                for (unsigned i = 0; i < j; ++i) expect *= q - 1;
                for (unsigned i = 0; i < n; ++i) expect *= q;
                const auto it = jprime[s].find(static_cast<int>(j));
                const std::uint64_t got = it == jprime[s].end() ? 0 : it->second;
                ++binom.checked;
                if (got != expect) ++binom.failures;
            }
        }
    }
    rep.lines = {cor13, total, thm12, meanJ, binom};
    return rep;
}

VerifyReport verify_equidist(unsigned q, unsigned n) {
    const Field f = field_of_order(q);
    states(q, 2 * n);
    const std::uint64_t buckets = states(q, n);
    std::vector<std::uint64_t> hits(buckets, 0);
    Word b(2 * n);
    std::function<void(const ElbmdState&, unsigned)> dfs = [&](const ElbmdState& st, unsigned s) {
        if (s == 2 * n) {
            const DCSplit sp = split_discrepancy(b);
            std::uint64_t idx = 0;
            for (unsigned i = n; i-- > 0;) idx = idx * q + sp.D[i];
            ++hits[idx];
            return;
        }
        for (Elem x = 0; x < q; ++x) {
            ElbmdState c = st;
            b[s] = c.step(x);
            dfs(c, s + 1);
        }
    };
    dfs(ElbmdState(f, false), 0);
    VerifyReport rep;
    rep.suite = "equidist q=" + std::to_string(q) + " n=" + std::to_string(n);
    CheckLine line{"K_D prefixes hit q^n times"};
    for (std::uint64_t h : hits) {
        ++line.checked;
        if (h != buckets) ++line.failures;
    }
    rep.lines = {line};
    return rep;
}

VerifyReport verify_translation(unsigned q, unsigned n) {
    const Field f = field_of_order(q);
    states(q, n);
    VerifyReport rep;
    rep.suite = "translation q=" + std::to_string(q) + " n=" + std::to_string(n);

    CheckLine rules{"one-step rules (forced descent, unique down-step)"};
    std::function<void(const ElbmdState&, unsigned)> dfs = [&](const ElbmdState& st, unsigned s) {
        if (s == n) return;
        const int m = st.m();
        unsigned down = 0, up = 0;
        for (Elem x = 0; x < q; ++x) {
            ElbmdState c = st;
            c.step(x);
            if (c.m() == m - 1)
                ++down;
            else if (m <= 0 && c.m() == 1 - m)
                ++up;
            dfs(c, s + 1);
        }
        ++rules.checked;
        const bool good = m > 0 ? down == q : (down == 1 && up == q - 1);
        if (!good) ++rules.failures;
    };
    dfs(ElbmdState(f, false), 0);

    CheckLine law{"deviation law depends only on the current m"};
    const unsigned plen = std::min(4u, n), horizon = std::min(6u, n);
    std::map<int, Dist> reference;
    std::function<void(const ElbmdState&, unsigned)> prefixes = [&](const ElbmdState& st, unsigned s) {
        // Compare laws after shifting by the prefix length: only m matters.
        const Dist d = deviation_law(st, q, horizon);
        auto [it, fresh] = reference.emplace(st.m(), d);
        ++law.checked;
        if (!fresh && it->second != d) ++law.failures;
        if (s == plen) return;
        for (Elem x = 0; x < q; ++x) {
            ElbmdState c = st;
            c.step(x);
            prefixes(c, s + 1);
        }
    };
    prefixes(ElbmdState(f, false), 0);

    CheckLine table{"law after prefix 10 equals law after the empty prefix"};
    if (n >= 2) {
        ElbmdState s10(f, false);
        s10.step(1);
        s10.step(0);
        const unsigned len = std::min(3u, n);
        ++table.checked;
        if (deviation_law(s10, q, len) != deviation_law(ElbmdState(f, false), q, len)) ++table.failures;
    }
    rep.lines = {rules, law, table};
    return rep;
}

VerifyReport verify_isometry(unsigned q, unsigned n) {
    const Field f = field_of_order(q);
    const std::uint64_t N = states(q, n);
    require(N <= (std::uint64_t{1} << 13), ErrorCode::Limit, "all-pairs isometry check limited to q^n <= 2^13");
    std::vector<Word> words(N), images(N);
    VerifyReport rep;
    rep.suite = "isometry q=" + std::to_string(q) + " n=" + std::to_string(n);
    CheckLine ref{"ELBMD discrepancies equal the Euclid encoding"}, inv{"K_inverse round trips"},
        pairs{"first-difference positions preserved"};
    for (std::uint64_t i = 0; i < N; ++i) {
        Word w(n);
        std::uint64_t x = i;
        for (unsigned j = 0; j < n; ++j, x /= q) w[j] = static_cast<Elem>(x % q);
        words[i] = w;
        images[i] = K(f, w);
        ++ref.checked;
        if (images[i] != K_reference(f, w)) ++ref.failures;
        ++inv.checked;
        if (K_inverse(f, images[i]) != w || K(f, K_inverse(f, w)) != w) ++inv.failures;
    }
    auto first_diff = [n](const Word& a, const Word& b) {
        for (unsigned j = 0; j < n; ++j)
            if (a[j] != b[j]) return j;
        return n;
    };
    if (q == 2) {
        std::vector<std::uint32_t> img(N);
        for (std::uint64_t i = 0; i < N; ++i) {
            std::uint32_t v = 0;
            for (unsigned j = 0; j < n; ++j) v |= images[i][j] << j;
            img[i] = v;
        }
        for (std::uint64_t i = 0; i < N; ++i)
            for (std::uint64_t j = i + 1; j < N; ++j) {
                ++pairs.checked;
                const auto da = std::countr_zero(static_cast<std::uint32_t>(i ^ j));
                const auto db = std::countr_zero(img[i] ^ img[j]);
                if (da != db) ++pairs.failures;
            }
    } else {
        for (std::uint64_t i = 0; i < N; ++i)
            for (std::uint64_t j = i + 1; j < N; ++j) {
                ++pairs.checked;
                if (first_diff(words[i], words[j]) != first_diff(images[i], images[j])) ++pairs.failures;
            }
    }
    rep.lines = {ref, inv, pairs};
    return rep;
}

VerifyReport verify_adic_oracle(unsigned k) {
    require(k >= 1 && k <= 20, ErrorCode::Limit, "adic oracle supports 1 <= k <= 20");
    VerifyReport rep;
    rep.suite = "adic-oracle k=" + std::to_string(k);
    CheckLine phi_line{"reduced Phi equals brute-force Phi"}, canon{"canonical pair equals brute-force pair"},
        sticky{"incremental sticky pairs match the oracle"}, iso{"A preserves first-difference positions"},
        tie{"A unchanged under the alternate tie-break"}, even{"lattice minima below the odd-q minimum"};

    // Brute-force table: oracle[k'][a] for every a of k' bits.
    std::vector<std::vector<LatticeVec>> oracle(k + 1);
    std::uint64_t even_count = 0;
    for (unsigned kk = 1; kk <= k; ++kk) {
        const std::uint64_t N = std::uint64_t{1} << kk;
        oracle[kk].resize(N);
        for (std::uint64_t a = 0; a < N; ++a) {
            const mpz_class ak(static_cast<unsigned long>(a));
            const LatticeVec bf = brute_force_minimal_pair(ak, kk);
            const LatticeVec red = minimal_pair(ak, kk);
            ++phi_line.checked;
            if (phi(bf) != phi(red)) ++phi_line.failures;
            ++canon.checked;
            if (!(bf == red)) ++canon.failures;
            oracle[kk][a] = bf;
            // Smallest Phi over all nonzero lattice vectors, even q included.
            ++even.checked;
            const long B = 1L << ((kk + 1) / 2 + 1);
            mpz_class lattice_min = mpz_class(1) << kk;
            for (long q = -B; q <= B; ++q) {
                mpz_class r = q * ak;
                mpz_fdiv_r_2exp(r.get_mpz_t(), r.get_mpz_t(), kk);
                const mpz_class alt = r - (mpz_class(1) << kk);
                for (const mpz_class& p : {r, alt}) {
                    if (q == 0 && p == 0) continue;
                    const mpz_class f = phi(LatticeVec{p, q});
                    if (f < lattice_min) lattice_min = f;
                }
            }
            if (lattice_min < phi(bf)) ++even_count;
        }
    }

    const std::uint64_t N = std::uint64_t{1} << k;
    std::vector<std::uint32_t> A_canon(N), A_alt(N);
    std::function<void(const AdicState&, const AdicState&, unsigned, std::uint64_t, LatticeVec, std::uint32_t,
                       std::uint32_t)>
        dfs = [&](const AdicState& st, const AdicState& alt, unsigned s, std::uint64_t a, LatticeVec prev,
                  std::uint32_t acc, std::uint32_t acc_alt) {
            if (s == k) {
                A_canon[a] = acc;
                A_alt[a] = acc_alt;
                return;
            }
            for (unsigned bit = 0; bit < 2; ++bit) {
                AdicState c = st, c2 = alt;
                const unsigned out = c.step(bit);
                const unsigned out2 = c2.step(bit);
                const std::uint64_t na = a | (std::uint64_t{bit} << s);
                const unsigned kk = s + 1;
                // Sticky oracle: keep prev when it still lies in the lattice.
                mpz_class mod = 1;
                mod <<= kk;
                mpz_class r = prev.q * mpz_class(static_cast<unsigned long>(na)) - prev.p;
                mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
                const bool keep = r == 0;
                const LatticeVec expect = keep ? prev : oracle[kk][na];
                ++sticky.checked;
                if (!(c.pair() == expect) || out != (keep ? 0u : 1u)) ++sticky.failures;
                dfs(c, c2, kk, na, c.pair(), acc | (out << s), acc_alt | (out2 << s));
            }
        };
    dfs(AdicState(TieBreak::canonical), AdicState(TieBreak::alternate), 0, 0, LatticeVec{0, 1}, 0, 0);

    std::uint64_t diverged = 0;
    for (std::uint64_t i = 0; i < N; ++i) {
        ++tie.checked;
        if (A_canon[i] != A_alt[i]) ++diverged;
        for (std::uint64_t j = i + 1; j < N; ++j) {
            ++iso.checked;
            if (std::countr_zero(static_cast<std::uint32_t>(i ^ j)) != std::countr_zero(A_canon[i] ^ A_canon[j]))
                ++iso.failures;
        }
    }
    tie.note = std::to_string(diverged) + " words with a different A";
    even.note = std::to_string(even_count) + " prefixes where an even q would be strictly shorter";
    rep.lines = {phi_line, canon, sticky, iso, tie, even};
    return rep;
}

}  // namespace kfrac
