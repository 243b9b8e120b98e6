#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "kfrac/cfrac.hpp"
#include "kfrac/elbmd.hpp"
#include "support.hpp"

using namespace kfrac;
using testing::str;
using testing::word;

TEST_CASE("expansion of the worked examples") {
    const Field f = field_of_order(2);
    const CFExpansion e1 = expand(f, word("1110110110"));
    REQUIRE(e1.denominators.size() == 2);
    CHECK(e1.denominators[0] == Polynomial{1, 1});
    CHECK(e1.denominators[1] == Polynomial{1, 0, 1});
    CHECK(e1.terminated);

    const CFExpansion e2 = expand(f, word("11011001001011"));
    REQUIRE(e2.denominators.size() >= 4);
    CHECK(e2.denominators[0] == Polynomial{1, 1});
    CHECK(e2.denominators[1] == Polynomial{0, 1});
    CHECK(e2.denominators[2] == Polynomial{1, 1, 0, 1});
    CHECK(e2.denominators[3] == Polynomial{1, 1});

    const CFExpansion z = expand(f, Word(9, 0));
    CHECK(z.denominators.empty());
    CHECK(z.terminated);
    CHECK(z.pending_zero_run == 9);
}

TEST_CASE("pending metadata of an incomplete denominator") {
    const Field f = field_of_order(2);
    // K(11101) = 11010: x+1 complete, x^2+1 missing its last coefficient.
    const CFExpansion e = expand(f, word("11101"));
    REQUIRE(e.denominators.size() == 1);
    CHECK(e.determined_prefix_length == 2);
    CHECK_FALSE(e.terminated);
    CHECK(e.pending_degree == 2);
    CHECK(e.pending_head == word("10"));
    // Every listed encoding fits inside the prefix.
    std::size_t used = 0;
    for (const auto& A : e.denominators) used += 2 * static_cast<std::size_t>(A.degree());
    CHECK(used <= 5);
}

TEST_CASE("pi encoding") {
    CHECK(str(encode_pi(Polynomial{1, 1})) == "11");
    CHECK(str(encode_pi(Polynomial{1, 0, 1})) == "0101");
    CHECK(str(encode_pi(Polynomial{1, 1, 0, 1})) == "001011");
    CHECK_THROWS_AS(encode_pi(Polynomial{1}), Error);
    CHECK(decode_pi(word("001011")) == Polynomial{1, 1, 0, 1});
    CHECK_THROWS_AS(decode_pi(word("0001")), Error);
    CHECK_THROWS_AS(decode_pi(word("101")), Error);
    CHECK_THROWS_AS(decode_pi(word("")), Error);
    kfrac::SplitMix64 eng(9);
    const Field f3 = field_of_order(3);
    for (int it = 0; it < 200; ++it) {
        Word c = testing::random_word(eng, 3, 1 + it % 6);
        if (c.back() == 0) c.back() = 2;
        const Polynomial A(c);
        if (A.degree() < 1) continue;
        const Word w = encode_pi(A);
        CHECK(w.size() == 2 * static_cast<std::size_t>(A.degree()));
        CHECK(decode_pi(w) == A);
    }
    (void)f3;
}

TEST_CASE("K on the worked examples") {
    const Field f = field_of_order(2);
    CHECK(str(K(f, word("1110110110"))) == "1101010000");
    CHECK(str(K(f, word("110110010010"))) == "111000101111");
    CHECK(str(K(f, Word(6, 0))) == "000000");
    CHECK(str(K_reference(f, word("110110010010"))) == "111000101111");
    CHECK(str(K_inverse(f, word("1101010"))) == "1110110");
    CHECK(str(K_inverse(f, Word(5, 0))) == "00000");
}

TEST_CASE("K_inverse round trips for every binary word up to length 14") {
    const Field f = field_of_order(2);
    for (std::size_t n = 1; n <= 14; ++n) {
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
            const Word a = testing::word_of_index(i, 2, n);
            REQUIRE(K_inverse(f, K(f, a)) == a);
            REQUIRE(K(f, K_inverse(f, a)) == a);
        }
    }
}

TEST_CASE("isometry for random pairs over F_3, F_4, F_5") {
    kfrac::SplitMix64 eng(12);
    for (unsigned q : {3u, 4u, 5u}) {
        const Field f = field_of_order(q);
        std::uniform_int_distribution<std::size_t> pos(0, 63);
        for (int it = 0; it < 300; ++it) {
            const Word a = testing::random_word(eng, q, 64);
            Word b = testing::random_word(eng, q, 64);
            const std::size_t k = pos(eng);
            std::copy(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k), b.begin());
            if (b[k] == a[k]) b[k] = (a[k] + 1) % q;
            CHECK(testing::first_difference(K(f, a), K(f, b)) == k);
            CHECK(testing::first_difference(K_inverse(f, a), K_inverse(f, b)) == k);
            CHECK(K_inverse(f, K(f, a)) == a);
        }
    }
}

TEST_CASE("prefix stability") {
    kfrac::SplitMix64 eng(13);
    for (unsigned q : {2u, 3u, 4u}) {
        const Field f = field_of_order(q);
        for (int it = 0; it < 100; ++it) {
            const Word a = testing::random_word(eng, q, 30);
            Word ext = a;
            const Word tail = testing::random_word(eng, q, 20);
            ext.insert(ext.end(), tail.begin(), tail.end());
            const Word kb = K(f, ext);
            CHECK(Word(kb.begin(), kb.begin() + 30) == K(f, a));
        }
    }
}

TEST_CASE("D/C split") {
    const Field f = field_of_order(2);
    const DCSplit s = split_dc(f, word("110110010010"));
    CHECK(str(s.D) == "110011");
    CHECK(str(s.C) == "100111");
    const DCSplit e = split_dc(f, word("111011"));
    CHECK(str(e.D) == "101");
    CHECK(str(e.C) == "101");
    // The trailing zero after x^2+1 opens the next degree block.
    CHECK(str(split_dc(f, word("1110110")).D) == "1010");
    const DCSplit z = split_dc(f, Word(5, 0));
    CHECK(str(z.D) == "00000");
    CHECK(z.C.empty());
}

TEST_CASE("D/C split agrees with the blockwise encoding") {
    kfrac::SplitMix64 eng(14);
    for (unsigned q : {2u, 3u}) {
        const Field f = field_of_order(q);
        for (int it = 0; it < 200; ++it) {
            const Word a = testing::random_word(eng, q, 40);
            const DCSplit s = split_dc(f, a);
            Word D, C;
            for (const auto& A : quotients_of_prefix(f, a)) {
                const Word w = encode_pi(A);
                const std::size_t d = w.size() / 2;
                D.insert(D.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d));
                C.insert(C.end(), w.begin() + static_cast<std::ptrdiff_t>(d), w.end());
            }
            // The blockwise words continue with zeros beyond the last denominator.
            D.resize(std::max(D.size(), s.D.size()), 0);
            C.resize(std::max(C.size(), s.C.size()), 0);
            CHECK(Word(D.begin(), D.begin() + static_cast<std::ptrdiff_t>(s.D.size())) == s.D);
            CHECK(Word(C.begin(), C.begin() + static_cast<std::ptrdiff_t>(s.C.size())) == s.C);
            // Each position appears once and indices count up per part.
            std::size_t nd = 0, nc = 0;
            for (const auto& [part, idx] : s.map) CHECK(idx == (part == Part::D ? ++nd : ++nc));
            CHECK(nd + nc == a.size());
        }
    }
}

TEST_CASE("iterated K and the diagonal") {
    const Field f = field_of_order(2);
    const Word a = word("110110010010");
    CHECK(iterate_K(f, a, 0) == a);
    CHECK(iterate_K(f, a, 1) == K(f, a));
    CHECK(iterate_K(f, a, 3) == K(f, K(f, K(f, a))));
    // Diagonal oracle: the k-th symbol of K^k(a).
    Word diag, cur = a;
    for (std::size_t k = 1; k <= a.size(); ++k) {
        cur = K(f, cur);
        diag.push_back(cur[k - 1]);
    }
    CHECK(K_infinity(f, a) == diag);
    kfrac::SplitMix64 eng(15);
    const Field f3 = field_of_order(3);
    const Word b = testing::random_word(eng, 3, 25);
    Word diag3, cur3 = b;
    for (std::size_t k = 1; k <= b.size(); ++k) {
        cur3 = K(f3, cur3);
        diag3.push_back(cur3[k - 1]);
    }
    CHECK(K_infinity(f3, b) == diag3);
}

TEST_CASE("shifted profiles") {
    const Field f = field_of_order(2);
    const auto s = shifted_profiles(f, word("110"));
    REQUIRE(s.size() == 3);
    CHECK(str(s[0]) == "111");
    CHECK(str(s[1]) == "10");
    CHECK(str(s[2]) == "0");
    CHECK(shifted_profiles(f, word("1")).size() == 1);
    for (std::uint64_t i = 0; i < 64; ++i) {
        const Word a = testing::word_of_index(i, 2, 6);
        const auto all = shifted_profiles(f, a);
        for (std::size_t j = 0; j < 6; ++j) CHECK(all[j] == K(f, Word(a.begin() + static_cast<std::ptrdiff_t>(j), a.end())));
    }
}
