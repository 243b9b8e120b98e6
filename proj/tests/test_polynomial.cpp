#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "kfrac/cfrac.hpp"
#include "kfrac/polynomial.hpp"
#include "support.hpp"

using namespace kfrac;

namespace {

Polynomial random_poly(kfrac::SplitMix64& eng, unsigned q, int maxdeg) {
    std::uniform_int_distribution<int> dd(-1, maxdeg);
    std::uniform_int_distribution<Elem> c(0, q - 1);
    const int d = dd(eng);
    std::vector<Elem> v(static_cast<std::size_t>(d + 1));
    for (auto& x : v) x = c(eng);
    return Polynomial(v);
}

// Degree of a series difference: -(first index where they differ).
int series_degree(const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i]) return -static_cast<int>(i + 1);
    return kNegInf;
}

}  // namespace

TEST_CASE("division examples") {
    const Field f2 = field_of_order(2);
    auto [qt, r] = divmod(f2, Polynomial{0, 1, 1, 1}, Polynomial{1, 0, 1});
    CHECK(qt == Polynomial{1, 1});
    CHECK(r == Polynomial{1});
    CHECK(integral_part(f2, Polynomial{0, 0, 1}, Polynomial{1, 1}) == Polynomial{1, 1});
    CHECK(integral_part(f2, Polynomial{1}, Polynomial{0, 1}).is_zero());
    CHECK(integral_part(f2, Polynomial{0, 1, 1, 1}, Polynomial{1, 0, 1}) == Polynomial{1, 1});
    CHECK_THROWS_AS(divmod(f2, Polynomial{1}, Polynomial{}), Error);

    const Field f3 = field_of_order(3);
    CHECK(mul(f3, Polynomial{2, 1}, Polynomial{1, 1}) == Polynomial{2, 0, 1});
    const Polynomial a{1, 2, 0, 1};
    const Polynomial z = sub(f3, a, a);
    CHECK(z.is_zero());
    CHECK(z.degree() == kNegInf);
    CHECK(z.lc() == 0);
}

TEST_CASE("to_string") {
    CHECK(to_string(Polynomial{1, 1, 0, 1}) == "x^3+x+1");
    CHECK(to_string(Polynomial{}) == "0");
    CHECK(to_string(Polynomial{2, 0, 2}) == "2x^2+2");
}

TEST_CASE("divmod and ultrametric properties") {
    kfrac::SplitMix64 eng(7);
    for (unsigned q : {2u, 3u, 5u}) {
        const Field f = field_of_order(q);
        for (int it = 0; it < 300; ++it) {
            const Polynomial a = random_poly(eng, q, 9), b = random_poly(eng, q, 5);
            const Polynomial s = add(f, a, b);
            CHECK(s.degree() <= std::max(a.degree(), b.degree()));
            if (a.degree() != b.degree()) CHECK(s.degree() == std::max(a.degree(), b.degree()));
            if (b.is_zero()) continue;
            auto [qt, r] = divmod(f, a, b);
            CHECK(r.degree() < b.degree());
            CHECK(add(f, mul(f, qt, b), r) == a);
            CHECK(integral_part(f, a, b) == qt);
        }
        // Series: |u - v| <= max(|u|, |v|) on random prefixes.
        for (int it = 0; it < 200; ++it) {
            const SeriesPrefix u(testing::random_word(eng, q, 12)), v(testing::random_word(eng, q, 12));
            const SeriesPrefix d = sub(f, u, v);
            CHECK(d.degree() <= std::max(u.degree(), v.degree()));
            if (u.degree() != v.degree()) CHECK(d.degree() == std::max(u.degree(), v.degree()));
        }
    }
}

TEST_CASE("series prefix precision") {
    const SeriesPrefix s(testing::word("0010"));
    CHECK(s.degree() == -3);
    CHECK(s.at(3) == 1);
    CHECK_THROWS_AS(s.at(5), Error);
    CHECK_THROWS_AS(s.require_precision(6), Error);
    CHECK(s.padded(6).word() == testing::word("001000"));
    CHECK(SeriesPrefix(testing::word("000")).degree() == kNegInf);
}

TEST_CASE("expand_rational") {
    const Field f2 = field_of_order(2);
    // 1/(x+1) = x^-1 + x^-2 + ...
    CHECK(expand_rational(f2, Polynomial{1}, Polynomial{1, 1}, 5).word() == testing::word("11111"));
    // (x^2+1)/(x^3+x^2+x) is G(1(110)^inf).
    CHECK(expand_rational(f2, Polynomial{1, 0, 1}, Polynomial{0, 1, 1, 1}, 10).word() ==
          testing::word("1110110110"));
}

TEST_CASE("convergent recursion") {
    const Field f2 = field_of_order(2);
    auto [m1, c0] = initial_convergents();
    const ConvergentPair c1 = convergent_step(f2, Polynomial{1, 1}, c0, m1);
    CHECK(c1.P == Polynomial{1});
    CHECK(c1.Q == Polynomial{1, 1});
    const ConvergentPair c2 = convergent_step(f2, Polynomial{1, 0, 1}, c1, c0);
    CHECK(c2.P == Polynomial{1, 0, 1});
    CHECK(c2.Q == Polynomial{0, 1, 1, 1});
    CHECK(c2.index == 2);
    // Multiplying back reproduces the example series.
    CHECK(expand_rational(f2, c2.P, c2.Q, 10).word() == testing::word("1110110110"));
}

TEST_CASE("determinant identity for random expansions") {
    kfrac::SplitMix64 eng(11);
    for (unsigned q : {2u, 3u, 5u}) {
        const Field f = field_of_order(q);
        for (int it = 0; it < 100; ++it) {
            const Word a = testing::random_word(eng, q, 24);
            auto [prev2, prev] = initial_convergents();
            CHECK(convergent_determinant(f, prev, prev2) == Polynomial::constant(sign_power(f, -1)));
            for (const Polynomial& A : quotients_of_prefix(f, a)) {
                ConvergentPair cur = convergent_step(f, A, prev, prev2);
                CHECK(convergent_determinant(f, cur, prev) == Polynomial::constant(sign_power(f, cur.index - 1)));
                prev2 = prev;
                prev = cur;
            }
        }
    }
}

TEST_CASE("approximation quality of convergents") {
    kfrac::SplitMix64 eng(5);
    for (unsigned q : {2u, 3u}) {
        const Field f = field_of_order(q);
        for (int it = 0; it < 100; ++it) {
            const Word a = testing::random_word(eng, q, 16);
            const std::vector<Polynomial> A = quotients_of_prefix(f, a);
            auto [prev2, prev] = initial_convergents();
            std::vector<ConvergentPair> cs;
            for (const Polynomial& d : A) {
                ConvergentPair cur = convergent_step(f, d, prev, prev2);
                cs.push_back(cur);
                prev2 = prev;
                prev = cur;
            }
            // |G - P_k/Q_k| = -|Q_k| - |Q_k+1| for every non-final convergent.
            for (std::size_t k = 0; k + 1 < cs.size(); ++k) {
                const int need = cs[k].Q.degree() + cs[k + 1].Q.degree();
                const std::size_t prec = static_cast<std::size_t>(need) + 2;
                const SeriesPrefix G = SeriesPrefix(a).padded(std::max(prec, a.size()));
                const SeriesPrefix approx = expand_rational(f, cs[k].P, cs[k].Q, G.precision());
                CHECK(series_degree(sub(f, G, approx).word()) == -need);
            }
        }
    }
}

TEST_CASE("no better approximation with a smaller denominator") {
    // Exhaustive over Z, N with |N| < |Q_(k+1)| <= 4 for q = 2.
    kfrac::SplitMix64 eng(3);
    const Field f = field_of_order(2);
    int checked = 0;
    for (int it = 0; it < 40; ++it) {
        const Word a = testing::random_word(eng, 2, 14);
        const auto A = quotients_of_prefix(f, a);
        auto [prev2, prev] = initial_convergents();
        std::vector<ConvergentPair> cs;
        for (const auto& d : A) {
            ConvergentPair cur = convergent_step(f, d, prev, prev2);
            cs.push_back(cur);
            prev2 = prev;
            prev = cur;
        }
        const SeriesPrefix G = SeriesPrefix(a).padded(40);
        for (std::size_t k = 0; k + 1 < cs.size(); ++k) {
            const int dn = cs[k + 1].Q.degree();
            if (dn > 4) break;
            const int best = series_degree(sub(f, G, expand_rational(f, cs[k].P, cs[k].Q, 40)).word());
            for (unsigned N = 1; N < (1u << dn); ++N) {
                Polynomial Np(testing::word_of_index(N, 2, static_cast<std::size_t>(dn)));
                for (unsigned Z = 0; Z < (1u << std::max(Np.degree(), 0)); ++Z) {
                    Polynomial Zp(testing::word_of_index(Z, 2, static_cast<std::size_t>(std::max(Np.degree(), 0))));
                    const int got = series_degree(sub(f, G, expand_rational(f, Zp, Np, 40)).word());
                    CHECK(got >= best);
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 0);
}
