#include "doctest.h"
#include "minorsign/rational.hpp"

#include "minorsign/generate.hpp"

using minorsign::Rational;
using minorsign::Sign;
using minorsign::SplitMix64;

TEST_CASE("sign follows the three-way rule") {
    CHECK(Rational(3, 7).sign() == Sign::positive);
    CHECK(Rational(0).sign() == Sign::zero);
    CHECK(Rational(-5).sign() == Sign::negative);
}

TEST_CASE("sign is multiplicative and odd") {
    SplitMix64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Rational a(rng.next_in(-20, 20), rng.next_in(1, 9));
        Rational b(rng.next_in(-20, 20), rng.next_in(1, 9));
        CHECK(sign(a) * sign(b) == sign(a * b));
        CHECK(sign(-a) == -sign(a));
    }
}

TEST_CASE("canonical form") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-1, 3).denominator() == 3);
}

TEST_CASE("arithmetic is exact: (a+b)-b == a") {
    SplitMix64 rng(7);
    for (int i = 0; i < 500; ++i) {
        Rational a(rng.next_in(-1000, 1000), rng.next_in(1, 97));
        Rational b(rng.next_in(-1000, 1000), rng.next_in(1, 97));
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("parsing") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("3/-4") == Rational(-3, 4));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse(" -17 ") == Rational(-17));
    CHECK(Rational::parse("3.25") == Rational(13, 4));
    CHECK(Rational::parse("-0.04") == Rational(-1, 25));
    CHECK(Rational::parse("0.1") == Rational(1, 10));  // decimal, not binary
    CHECK(Rational::parse("0.25") == Rational(1, 4));  // leading zero is decimal, never octal
    CHECK(Rational::parse("007") == Rational(7));
    CHECK(Rational::parse("010/020") == Rational(1, 2));

    CHECK_FALSE(Rational::parse("").has_value());
    CHECK_FALSE(Rational::parse("1/0").has_value());
    CHECK_FALSE(Rational::parse("2.").has_value());
    CHECK_FALSE(Rational::parse("1e3").has_value());
    CHECK_FALSE(Rational::parse("a/b").has_value());
    CHECK_FALSE(Rational::parse("1/2/3").has_value());
}

TEST_CASE("doubles convert exactly") {
    CHECK(Rational::from_double(0.5) == Rational(1, 2));
    CHECK(Rational::from_double(-2.75) == Rational(-11, 4));
    // 0.1 is not representable; the conversion preserves the actual dyadic
    CHECK(Rational::from_double(0.1).str() == "3602879701896397/36028797018963968");
    CHECK_THROWS_AS(Rational::from_double(1.0 / 0.0), std::invalid_argument);
}

TEST_CASE("division and inverse guard zero") {
    CHECK(Rational(1, 3).inverse() == Rational(3));
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}
