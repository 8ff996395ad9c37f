#include <catch_amalgamated.hpp>

#include "lmchar/poly.hpp"

using namespace lmchar;

namespace {
const RationalPoly q = RationalPoly::q();
}

TEST_CASE("zero polynomial basics") {
    RationalPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z.coeff(0) == 0);
    CHECK(z == RationalPoly(0));
    CHECK(RationalPoly(1) - RationalPoly(1) == z);
}

TEST_CASE("arithmetic keeps the no-zero-coefficient invariant") {
    RationalPoly p = q * q + q + RationalPoly(1);
    p -= q;
    CHECK(p.terms().size() == 2);
    CHECK(p.coeff(1) == 0);
    CHECK(p.degree() == 2);
    CHECK((p * RationalPoly(0)).is_zero());
    CHECK(p * RationalPoly(1) == p);
    CHECK(-(-p) == p);
}

TEST_CASE("multiplication and evaluation") {
    const RationalPoly a = q + RationalPoly(1);
    const RationalPoly b = q - RationalPoly(1);
    CHECK(a * b == q * q - RationalPoly(1));
    CHECK(a.evaluate(2) == 3);
    CHECK((a * b).evaluate(3) == 8);
    CHECK(RationalPoly::monomial(3, Rational(1, 2)).evaluate(2) == 4);
}

TEST_CASE("geometric sums") {
    CHECK(RationalPoly::geometric(0, 2) == RationalPoly(1) + q + q * q);
    CHECK(RationalPoly::geometric(1, 1) == q);
    CHECK(RationalPoly::geometric(2, 1).is_zero());
}

TEST_CASE("exponent scaling substitutes q -> q^r") {
    const RationalPoly p = q * q + RationalPoly(2) * q;
    CHECK(p.exponents_scaled(3) == RationalPoly::monomial(6) + RationalPoly(2) * RationalPoly::monomial(3));
    CHECK(p.exponents_scaled(1) == p);
}

TEST_CASE("exact division") {
    const RationalPoly num = (q + RationalPoly(1)) * (q * q + RationalPoly(3));
    auto quot = divide_exact(num, q + RationalPoly(1));
    REQUIRE(quot.has_value());
    CHECK(*quot == q * q + RationalPoly(3));
    CHECK(divide_exact(num, RationalPoly()) == std::nullopt);
    CHECK(divide_exact(q * q + RationalPoly(1), q + RationalPoly(1)) == std::nullopt);
    // (1 - q^2) / (1 - q) = 1 + q, the cancellation the series engine relies on
    auto c = divide_exact(RationalPoly(1) - q * q, RationalPoly(1) - q);
    REQUIRE(c.has_value());
    CHECK(*c == RationalPoly(1) + q);
}

TEST_CASE("coefficient reversal") {
    const RationalPoly p = q * q + RationalPoly(2) * q + RationalPoly(3);
    CHECK(p.reversed(2) == RationalPoly(3) * q * q + RationalPoly(2) * q + RationalPoly(1));
    CHECK(p.reversed(3) ==
          RationalPoly(3) * RationalPoly::monomial(3) + RationalPoly(2) * q * q + q);
    CHECK(p.reversed_signed(2) ==
          RationalPoly(3) * q * q - RationalPoly(2) * q + RationalPoly(1));
    CHECK_THROWS_AS(p.reversed(1), std::invalid_argument);
}

TEST_CASE("palindromicity and coefficient predicates") {
    const RationalPoly pal = q * q + RationalPoly(4) * q + RationalPoly(1);
    CHECK(pal.palindromic(2));
    CHECK_FALSE(pal.palindromic(3));
    CHECK((q + q * q).palindromic(3));
    CHECK(pal.integer_coefficients());
    CHECK(pal.nonnegative_integer_coefficients());
    CHECK_FALSE((q - RationalPoly(1)).nonnegative_integer_coefficients());
    CHECK_FALSE(RationalPoly(Rational(1, 2)).integer_coefficients());
    CHECK(RationalPoly().nonnegative_integer_coefficients());
}
