#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "kfrac/cfrac.hpp"
#include "kfrac/elbmd.hpp"
#include "kfrac/profiles.hpp"
#include "support.hpp"

using namespace kfrac;
using testing::word;

namespace {

const Field& F2() {
    static const Field f = field_of_order(2);
    return f;
}

int m_end(const char* bits) { return profile(F2(), word(bits)).m.back(); }

// Zero runs of K_D closed by a nonzero symbol, in order.
std::vector<std::size_t> closed_zero_runs(const Word& b) {
    std::vector<std::size_t> out;
    std::size_t run = 0;
    for (Elem x : b) {
        if (x == 0) {
            ++run;
        } else {
            out.push_back(run);
            run = 0;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("deviation table after the empty prefix and after 10") {
    const char* suffix[] = {"000", "001", "010", "011", "100", "101", "110", "111"};
    const int empty[] = {-3, 3, 1, 1, -1, 1, 1, -1};
    const int ten[] = {-3, 3, 1, 1, 1, -1, -1, 1};
    for (int i = 0; i < 8; ++i) {
        CHECK(m_end(suffix[i]) == empty[i]);
        CHECK(m_end((std::string("10") + suffix[i]).c_str()) == ten[i]);
    }
}

TEST_CASE("type invariants") {
    kfrac::SplitMix64 eng(21);
    for (unsigned q : {2u, 3u, 4u}) {
        const Field f = field_of_order(q);
        for (int it = 0; it < 50; ++it) {
            const Word a = testing::random_word(eng, q, 120);
            const ProfileSeries p = profile(f, a);
            REQUIRE(p.L.size() == a.size() + 1);
            CHECK(p.L[0] == 0);
            CHECK(p.m[0] == 0);
            CHECK(p.J[0] == 0);
            CHECK(p.m_prime[0] == 0);
            int total = 0;
            for (const auto& [pos, h] : p.jumps) {
                CHECK(h >= 1);
                total += h;
            }
            CHECK(total == p.L.back());
            for (std::size_t n = 1; n <= a.size(); ++n) {
                const int nn = static_cast<int>(n);
                CHECK(p.m[n] == 2 * p.L[n] - nn);
                CHECK(p.m_prime[n] == p.m[n - 1] - 1);
                CHECK(p.L[n] >= p.L[n - 1]);
                CHECK(p.J[n] - p.J[n - 1] == (p.L[n] != p.L[n - 1] ? 1 : 0));
            }
        }
    }
}

TEST_CASE("jump heights mirror zero runs of K_D") {
    // Denominator degrees 1, 1, 3, 1.
    const ProfileSeries p = profile(F2(), word("110110010010"));
    const auto h = jump_heights(p);
    CHECK(h.at(1) == 3);
    CHECK(h.at(3) == 1);
    CHECK(h.size() == 2);
    CHECK(jump_heights(profile(F2(), Word(20, 0))).empty());

    kfrac::SplitMix64 eng(22);
    for (unsigned q : {2u, 3u}) {
        const Field f = field_of_order(q);
        for (int it = 0; it < 100; ++it) {
            const Word a = testing::random_word(eng, q, 80);
            std::map<int, std::size_t> runs;
            for (std::size_t r : closed_zero_runs(split_dc(f, a).D)) ++runs[static_cast<int>(r) + 1];
            CHECK(jump_heights(profile(f, a)) == runs);
        }
    }
}

TEST_CASE("jump height frequencies are geometric") {
    kfrac::SplitMix64 eng(23);
    const Word a = testing::random_word(eng, 2, 2000);
    const auto h = jump_heights(profile(F2(), a));
    std::size_t total = 0;
    for (const auto& [k, c] : h) total += c;
    for (int k = 1; k <= 5; ++k) {
        const double p = std::ldexp(1.0, -k);
        const double sigma = std::sqrt(static_cast<double>(total) * p * (1 - p));
        const double got = h.count(k) ? static_cast<double>(h.at(k)) : 0.0;
        CHECK(std::abs(got - static_cast<double>(total) * p) <= 3 * sigma);
    }
}

TEST_CASE("J_prime") {
    CHECK(J_prime(profile(F2(), word("01")), 2) == 0);
    CHECK(profile(F2(), word("01")).J[2] == 1);
    CHECK(J_prime(profile(F2(), word("00")), 2) == 0);
    CHECK_THROWS_AS(J_prime(profile(F2(), word("011")), 3), Error);
    // Over F_q^{2n} the count of words with J' = j is q^n C(n,j) (q-1)^j.
    for (unsigned q : {2u, 3u}) {
        const Field f = field_of_order(q);
        const std::size_t n = q == 2 ? 3 : 2;
        std::vector<std::size_t> count(n + 1, 0);
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < 2 * n; ++i) total *= q;
        for (std::uint64_t i = 0; i < total; ++i) ++count[static_cast<std::size_t>(J_prime(profile(f, testing::word_of_index(i, q, 2 * n)), 2 * n))];
        std::uint64_t qn = 1;
        for (std::size_t i = 0; i < n; ++i) qn *= q;
        std::uint64_t binom = 1, unit = 1;
        for (std::size_t j = 0; j <= n; ++j) {
            CHECK(count[j] == qn * binom * unit);
            binom = binom * (n - j) / (j + 1);
            unit *= q - 1;
        }
    }
}

TEST_CASE("zero runs") {
    CHECK(longest_zero_run(word("0101"), 4) == 1);
    CHECK(longest_zero_run(word("1001000"), 7) == 3);
    CHECK(longest_zero_run(word("1001000"), 5) == 2);
    CHECK(longest_zero_run(word(""), 0) == 0);
    CHECK(kth_longest_zero_run(word("1001000101"), 1) == 3);
    CHECK(kth_longest_zero_run(word("1001000101"), 2) == 2);
    CHECK(kth_longest_zero_run(word("1001000101"), 3) == 1);
    CHECK(kth_longest_zero_run(word("1001000101"), 4) == 0);
}

TEST_CASE("largest deviation is the longest K_D zero run plus one") {
    for (std::size_t n = 1; n <= 7; ++n) {
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << (2 * n)); ++i) {
            const Word a = testing::word_of_index(i, 2, 2 * n);
            const ProfileSeries p = profile(F2(), a);
            if (p.m[2 * n] != 0) continue;
            int mx = 0;
            for (int v : p.m) mx = std::max(mx, std::abs(v));
            REQUIRE(static_cast<std::size_t>(mx) == longest_zero_run(split_dc(F2(), a).D, n) + 1);
        }
    }
}

TEST_CASE("deviations occur at K_D patterns") {
    for (std::size_t n = 1; n <= 10; ++n) {
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
            const Word a = testing::word_of_index(i, 2, n);
            const ProfileSeries p = profile(F2(), a);
            const DCSplit s = split_dc(F2(), a);
            // Each D position records the current run: a leading coefficient
            // after r zeros gives m = r + 1, the r-th zero after a leading
            // coefficient (or from the start) gives m = -r.
            std::size_t run = 0;
            bool any = false;
            for (std::size_t t = 1; t <= n; ++t) {
                const auto [part, idx] = s.map[t - 1];
                if (part != Part::D) continue;
                const Elem x = s.D[idx - 1];
                if (x == 0) {
                    ++run;
                    CHECK(p.m[t] == -static_cast<int>(run));
                } else {
                    CHECK(p.m[t] == static_cast<int>(run) + 1);
                    run = 0;
                    any = true;
                }
            }
            (void)any;
        }
    }
}

TEST_CASE("jump count is the number of nonzero K_D symbols") {
    for (std::size_t t = 0; t <= 6; ++t) {
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << (2 * t)); ++i) {
            const Word a = testing::word_of_index(i, 2, 2 * t);
            const ProfileSeries p = profile(F2(), a);
            const Word D = split_dc(F2(), a).D;
            long S = 0;
            for (std::size_t k = 0; k < t; ++k) S += 2 * static_cast<long>(D[k]) - 1;
            const int delta = p.m[2 * t] > 0 ? 1 : 0;
            REQUIRE(2 * (p.J[2 * t] - delta) == S + static_cast<long>(t));
        }
    }
}

TEST_CASE("d_k follows the completed degrees") {
    // K_D(110110010010) = 110011: degrees 1, 1, 3, 1.
    const Word KD = word("110011");
    CHECK(d_k(KD, 1, 12) == 3);
    CHECK(d_k(KD, 2, 12) == 1);
    CHECK(d_k(KD, 1, 4) == 1);
    CHECK(d_k(KD, 1, 9) == 1);
    CHECK(d_k(KD, 1, 10) == 3);
    CHECK(d_k(KD, 5, 12) == 0);
    CHECK(d_k(word("000"), 1, 6) == 0);
}

TEST_CASE("classification") {
    Word alt;
    for (int i = 0; i < 50; ++i) {
        alt.push_back(1);
        alt.push_back(0);
    }
    const ProfileSeries pa = profile(F2(), alt);
    int mx = 0;
    for (int v : pa.m) mx = std::max(mx, std::abs(v));
    CHECK(classify(pa).d_perfect == mx);
    // Linear complexity stays at 2, so the deviation grows like -n.
    CHECK(classify(pa).d_perfect == 96);

    const Classification z = classify(profile(F2(), Word(40, 0)));
    CHECK(z.d_perfect == 40);
    CHECK_FALSE(z.good);

    kfrac::SplitMix64 eng(24);
    const Classification r = classify(profile(F2(), testing::random_word(eng, 2, 4096)));
    CHECK(r.good);
    CHECK(r.C <= 2.0);
}

TEST_CASE("profile recovered from the discrepancy stream") {
    kfrac::SplitMix64 eng(25);
    for (unsigned q : {2u, 3u, 5u}) {
        const Field f = field_of_order(q);
        for (int it = 0; it < 40; ++it) {
            const Word a = testing::random_word(eng, q, 100);
            const ProfileSeries p = profile(f, a);
            const ProfileSeries r = profile_from_discrepancies(p.K);
            CHECK(r.L == p.L);
            CHECK(r.m == p.m);
            CHECK(r.J == p.J);
            CHECK(r.jumps == p.jumps);
        }
    }
}
