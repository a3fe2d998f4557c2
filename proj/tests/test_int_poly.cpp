#include "doctest.h"
#include "matchmult/errors.hpp"
#include "matchmult/int_poly.hpp"

using namespace matchmult;

TEST_CASE("zero polynomial has degree -1 and empty storage") {
    IntPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(IntPoly{0, 0, 0}.is_zero());
    CHECK(IntPoly{1, 2, 0}.degree() == 1);
}

TEST_CASE("ring operations") {
    const IntPoly a{-1, 0, 1};  // x^2 - 1
    const IntPoly b{1, 1};      // x + 1
    CHECK(a * b == IntPoly{-1, -1, 1, 1});
    CHECK(a - a == IntPoly{});
    CHECK(a + b == IntPoly{0, 1, 1});
    CHECK(derivative(IntPoly{0, -4, 0, 10, 0, -6, 0, 1}) == IntPoly{-4, 0, 30, 0, -30, 0, 7});
    CHECK(pow(b, 3) == IntPoly{1, 3, 3, 1});
}

TEST_CASE("division") {
    const IntPoly p{0, -4, 0, 10, 0, -6, 0, 1};
    auto d = divmod_monic(p, IntPoly{-3, 0, 1});
    CHECK(d.quotient * IntPoly{-3, 0, 1} + d.remainder == p);
    CHECK(d.remainder.degree() < 2);
    CHECK_FALSE(d.remainder.is_zero());

    CHECK(divide_exact(IntPoly{-1, 0, 4}, IntPoly{1, 2}) == IntPoly{-1, 2});
    CHECK_FALSE(divide_exact(IntPoly{-1, 0, 4}, IntPoly{1, 3}).has_value());
    CHECK_THROWS_AS(divmod_monic(p, IntPoly{1, 2}), Error);
}

TEST_CASE("gcd, content, primitive part") {
    CHECK(content(IntPoly{6, -4, 8}) == 2);
    CHECK(primitive_part(IntPoly{-6, 4, -8}) == IntPoly{3, -2, 4});
    // (x-1)(x+2) and (x-1)(2x+3)
    CHECK(gcd(IntPoly{-2, 1, 1}, IntPoly{-3, 1, 2}) == IntPoly{-1, 1});
    CHECK(gcd(IntPoly{-1, 0, 1}, IntPoly{0, 1}) == IntPoly{1});
    CHECK(gcd(IntPoly{}, IntPoly{4, 2}) == IntPoly{2, 1});
    // x^8 + x^6 - 3x^4 - 3x^3 + 8x^2 + 2x - 5 and 3x^6 + 5x^4 - 4x^2 - 9x + 21 are coprime.
    CHECK(gcd(IntPoly{-5, 2, 8, -3, -3, 0, 1, 0, 1}, IntPoly{21, -9, -4, 0, 5, 0, 3}) == IntPoly{1});
}

TEST_CASE("exact sign evaluation at rationals") {
    const IntPoly p{-2, 0, 1};
    CHECK(sign_at(p, Rational(1)) == -1);
    CHECK(sign_at(p, Rational(3, 2)) == 1);
    CHECK(sign_at(p, Rational(-7, 5)) == -1);
    CHECK(evaluate(p, Rational(3, 2)) == Rational(1, 4));
}

TEST_CASE("text and JSON forms") {
    const IntPoly p{0, -4, 0, 10, 0, -6, 0, 1};
    CHECK(to_string(p) == "x^7 - 6*x^5 + 10*x^3 - 4*x");
    CHECK(parse_poly("x^7 - 6*x^5 + 10*x^3 - 4*x") == p);
    CHECK(parse_poly("x^2-3") == IntPoly{-3, 0, 1});
    CHECK(parse_poly("-x + 2x^2 + 7") == IntPoly{7, -1, 2});
    CHECK(parse_poly("[-3, 0, 1]") == IntPoly{-3, 0, 1});
    CHECK(parse_poly("[\"-3\", 0, 1]") == IntPoly{-3, 0, 1});
    CHECK(to_json(p).dump() == "[0,-4,0,10,0,-6,0,1]");
    CHECK(to_string(IntPoly{}) == "0");
    CHECK_THROWS_AS(parse_poly("x^"), Error);
    CHECK_THROWS_AS(parse_poly("3y"), Error);
    CHECK_THROWS_AS(parse_poly(""), Error);
}
