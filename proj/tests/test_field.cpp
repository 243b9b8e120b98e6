#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "kfrac/field.hpp"

using kfrac::Elem;
using kfrac::Field;

TEST_CASE("prime field basics") {
    const Field f2 = Field::make(2);
    CHECK(f2.add(1, 1) == 0);
    CHECK(f2.div(1, 1) == 1);
    const Field f3 = Field::make(3);
    CHECK(f3.mul(2, 2) == 1);
    CHECK(f3.sub(1, 2) == 2);
    const Field f5 = Field::make(5);
    CHECK(f5.div(2, 3) == 4);
}

TEST_CASE("F_4 with x^2+x+1") {
    const Field f = Field::make(2, 2, {1, 1, 1});
    // Index 2 is x, index 3 is x+1.
    CHECK(f.mul(2, 2) == 3);
    CHECK(f.mul(2, 3) == 1);
    CHECK(f.mul(3, 3) == 2);
    CHECK(f.add(2, 3) == 1);
    CHECK(Field::make(2, 2) == f);
}

TEST_CASE("default moduli") {
    CHECK(Field::make(2, 3).modulus() == kfrac::moduli::kF8);
    CHECK(Field::make(3, 2).modulus() == kfrac::moduli::kF9);
    CHECK(kfrac::field_of_order(4) == Field::make(2, 2));
    CHECK(kfrac::field_of_order(7).q() == 7);
    const Field f16 = Field::make(2, 4);
    CHECK(kfrac::is_irreducible(2, f16.modulus()));
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Field::make(4), kfrac::Error);
    CHECK_THROWS_AS(Field::make(2, 0), kfrac::Error);
    CHECK_THROWS_AS(Field::make(2, 2, {1, 0, 1}), kfrac::Error);  // (x+1)^2
    CHECK_THROWS_AS(Field::make(3, 1, {1, 1}), kfrac::Error);
    CHECK_THROWS_AS(kfrac::field_of_order(6), kfrac::Error);
    CHECK_THROWS_AS(Field::make(3).inv(0), kfrac::Error);
}

TEST_CASE("irreducibility by root and factor search") {
    CHECK(kfrac::is_irreducible(2, {1, 1, 1}));
    CHECK_FALSE(kfrac::is_irreducible(2, {1, 0, 1}));
    CHECK(kfrac::is_irreducible(2, {1, 1, 0, 1}));
    CHECK_FALSE(kfrac::is_irreducible(2, {1, 0, 0, 0, 1}));
    CHECK_FALSE(kfrac::is_irreducible(2, {1, 0, 1, 0, 1}));  // (x^2+x+1)^2
    CHECK(kfrac::is_irreducible(3, {1, 0, 1}));
    CHECK_FALSE(kfrac::is_irreducible(3, {2, 0, 1}));  // x^2 - 1
}

TEST_CASE("inverses for every q <= 16") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        const Field f = kfrac::field_of_order(q);
        for (Elem a = 1; a < q; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    }
}

TEST_CASE("group and ring laws for every q <= 9") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        CAPTURE(q);
        const Field f = kfrac::field_of_order(q);
        bool ok = true;
        for (Elem a = 0; a < q; ++a) {
            ok &= f.add(a, 0) == a && f.mul(a, 1) == a && f.add(a, f.neg(a)) == 0;
            for (Elem b = 0; b < q; ++b) {
                ok &= f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
                ok &= f.sub(f.add(a, b), b) == a;
                for (Elem c = 0; c < q; ++c) {
                    ok &= f.add(f.add(a, b), c) == f.add(a, f.add(b, c));
                    ok &= f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
                    ok &= f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
                }
            }
        }
        CHECK(ok);
    }
}

TEST_CASE("large field without tables") {
    const Field f = Field::make(2, 9);
    CHECK(f.q() == 512);
    for (Elem a = 1; a < 512; a += 37) CHECK(f.mul(a, f.inv(a)) == 1);
}
