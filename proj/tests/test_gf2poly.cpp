#include "doctest.h"

#include <stdexcept>
#include "qrcss/gf2poly.hpp"

using namespace qrcss;

TEST_CASE("gcd basics over GF(2)") {
    // x^2 + 1 = (x + 1)^2 in characteristic 2
    Gf2Poly a = Gf2Poly::from_exponents({2, 0});
    Gf2Poly b = Gf2Poly::from_exponents({1, 0});
    CHECK(poly_gcd(a, b) == b);

    Gf2Poly f = Gf2Poly::from_exponents({5, 3, 0});
    CHECK(poly_gcd(f, Gf2Poly{}) == f);
    CHECK(poly_gcd(Gf2Poly{}, f) == f);
    CHECK_THROWS_AS(poly_gcd(Gf2Poly{}, Gf2Poly{}), std::invalid_argument);
}

TEST_CASE("x^3+x+1 divides x^7-1") {
    Gf2Poly x7 = Gf2Poly::x_n_minus_1(7);
    Gf2Poly g = Gf2Poly::from_exponents({3, 1, 0});
    // long-division oracle
    auto [q, r] = Gf2Poly::divmod(x7, g);
    CHECK(r.is_zero());
    CHECK(q * g == x7);
    CHECK(poly_gcd(x7, g) == g);
    CHECK(poly_divides(g, x7));
    CHECK_FALSE(poly_divides(Gf2Poly::from_exponents({2, 1, 0}), x7));
}

TEST_CASE("divmod identity on random polynomials") {
    uint64_t s = 0x2545F4914F6CDD1DULL;
    auto next = [&]() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    };
    for (int t = 0; t < 100; t++) {
        Gf2Poly n, d;
        for (int i = 0; i < 40; i++) {
            if (next() & 1) n.flip_coeff(i % 37);
            if (next() & 1) d.flip_coeff(i % 19);
        }
        if (d.is_zero()) d = Gf2Poly::one();
        auto [q, r] = Gf2Poly::divmod(n, d);
        CHECK(q * d + r == n);
        CHECK(r.degree() < d.degree());
    }
}

TEST_CASE("mulmod wraps around") {
    Gf2Poly m = Gf2Poly::x_n_minus_1(7);
    Gf2Poly a = Gf2Poly::x_pow(5);
    Gf2Poly b = Gf2Poly::x_pow(4);
    CHECK(poly_mulmod(a, b, m) == Gf2Poly::x_pow(2));  // x^9 mod (x^7 - 1)
}

TEST_CASE("to_string renders sparse polys") {
    CHECK(Gf2Poly{}.to_string() == "0");
    CHECK(Gf2Poly::from_exponents({3, 1, 0}).to_string() == "x^3 + x + 1");
}
