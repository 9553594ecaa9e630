#include <doctest.h>

#include <random>

#include "necc/galois.hpp"

using namespace necc;

namespace {

void check_axioms_exhaustive(const Field& f) {
    const int q = f.q();
    CHECK(f.add(0, 0) == 0);
    for (int a = 0; a < q; ++a) {
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(a, 1) == a);
        CHECK(f.mul(a, 0) == 0);
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a != 0) {
            CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.inv(f.inv(a)) == a);
        }
        for (int b = 0; b < q; ++b) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
            for (int c = 0; c < q; ++c) {
                CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
}

int element_order(const Field& f, int a) {
    int order = 1;
    int acc = a;
    while (acc != 1) {
        acc = f.mul(acc, a);
        ++order;
        REQUIRE(order <= f.q());
    }
    return order;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    Field f3 = make_field(3);
    CHECK(f3.add(2, 2) == 1);
    CHECK(f3.mul(2, 2) == 1);
    CHECK(f3.inv(2) == 2);

    Field f2 = make_field(2);
    CHECK(f2.add(1, 1) == 0);

    Field f7 = make_field(7);
    CHECK(f7.mul(3, 5) == 1);
    CHECK(f7.inv(3) == 5);
}

TEST_CASE("extension field arithmetic in F_4") {
    // x * x = x + 1 under the modulus x^2 + x + 1; encoded 2 * 2 = 3.
    // Verified against the multiplicative group: 2 has order 3 = q - 1.
    Field f4 = make_field(2, 2);
    CHECK(f4.spec().primitive_poly() == std::vector<int>{1, 1, 1});
    CHECK(f4.mul(2, 2) == 3);
    CHECK(element_order(f4, 2) == 3);
    CHECK(f4.mul(2, 3) == 1);  // x * (x+1) = x^2 + x = 1
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1},
                        {13, 1}, {2, 4}})
        check_axioms_exhaustive(make_field(p, m));
}

TEST_CASE("multiplicative group is cyclic for q <= 256") {
    for (auto [p, m] : {std::pair{2, 8}, {3, 5}, {5, 3}, {13, 2}, {2, 4}, {17, 1}, {251, 1}}) {
        Field f = make_field(p, m);
        bool found = false;
        for (int a = 1; a < f.q() && !found; ++a) found = element_order(f, a) == f.q() - 1;
        CHECK(found);
    }
}

TEST_CASE("sampled axioms for large fields") {
    std::mt19937 rng(42);
    for (auto [p, m] : {std::pair{2, 16}, {3, 10}, {13, 4}, {65521, 1}}) {
        Field f = make_field(p, m);
        for (int trial = 0; trial < 500; ++trial) {
            int a = static_cast<int>(rng() % f.q());
            int b = static_cast<int>(rng() % f.q());
            int c = static_cast<int>(rng() % f.q());
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.add(a, f.neg(a)) == 0);
        }
    }
}

TEST_CASE("inverses are exhaustive for q <= 256") {
    for (auto [p, m] : {std::pair{2, 8}, {3, 5}, {61, 1}}) {
        Field f = make_field(p, m);
        for (int a = 1; a < f.q(); ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    }
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(make_field(4, 1), NotPrime);
    CHECK_THROWS_AS(make_field(1, 1), NotPrime);
    CHECK_THROWS_AS(make_field(2, 17), UnsupportedSize);
    CHECK_THROWS_AS(make_field(65537, 1), UnsupportedSize);
    CHECK_THROWS_AS(make_field(127, 2), NoPrimitivePoly);
    CHECK_THROWS_AS(make_field(2).inv(0), Error);
}

TEST_CASE("field equality is structural") {
    CHECK(make_field(3) == make_field(3));
    CHECK(make_field(2, 2) == make_field(2, 2));
    CHECK(make_field(2) != make_field(3));
    CHECK(make_field(2) != make_field(2, 2));
}
