#include "doctest.h"

#include <stdexcept>

#include "cevian/rational.hpp"
#include "cevian/sampling.hpp"

using cevian::Rational;

TEST_CASE("construction reduces to canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 5).to_string() == "0");
    CHECK(Rational(0, 5).denominator() == cevian::BigInt(1));
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational(3, -6).denominator() > cevian::BigInt(0));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("printing and parsing") {
    CHECK(Rational(42).to_string() == "42");
    CHECK(Rational(-3, 7).to_string() == "-3/7");
    CHECK(Rational::parse("1/3") == Rational(1, 3));
    CHECK(Rational::parse("-14") == Rational(-14));
    CHECK(Rational::parse("2/6") == Rational(1, 3));

    std::string why;
    CHECK(!Rational::parse("1/0", &why));
    CHECK(why == "zero denominator");
    CHECK(!Rational::parse("", &why));
    CHECK(why == "syntax");
    CHECK(!Rational::parse("1/3x", &why));
    CHECK(why == "syntax");
    CHECK(!Rational::parse("--1", &why));
    CHECK(!Rational::parse("1/", &why));
    CHECK(!Rational::parse("/3", &why));
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) / Rational(3) == Rational(1, 9));
    CHECK(Rational(-1, 2).abs() == Rational(1, 2));
    CHECK(Rational(3, 7).reciprocal() == Rational(7, 3));
    CHECK(Rational(-3, 7).reciprocal() == Rational(-7, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("ordering by cross-multiplication") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(-1) < Rational(0));
    CHECK(Rational(7, 21) == Rational(1, 3));
    CHECK(Rational(2, 3) > Rational(3, 5));
}

TEST_CASE("results stay canonical on random operands") {
    cevian::Sampler sampler(41);
    for (int i = 0; i < 200; ++i) {
        const Rational a = sampler.rational();
        const Rational b = sampler.rational();
        for (const Rational& v : {a + b, a - b, a * b}) {
            CHECK(v.denominator() > cevian::BigInt(0));
            CHECK(cevian::BigInt::gcd(v.numerator(), v.denominator()) == cevian::BigInt(1));
            if (v.is_zero()) CHECK(v.denominator() == cevian::BigInt(1));
        }
        if (!b.is_zero()) {
            const Rational q = a / b;
            CHECK(q * b == a);
        }
    }
}

TEST_CASE("decimal rendering rounds half to even") {
    CHECK(Rational(1, 7).to_decimal(12) == "0.142857142857");
    CHECK(Rational(1).to_decimal(12) == "1.00000000000");
    CHECK(Rational(0).to_decimal(12) == "0");
    CHECK(Rational(4, 13).to_decimal(12) == "0.307692307692");
    CHECK(Rational(-1, 7).to_decimal(3) == "-0.143");
    CHECK(Rational(1, 700).to_decimal(3) == "0.00143");
    CHECK(Rational(12345).to_decimal(3) == "12300");
    CHECK(Rational(999999, 1000).to_decimal(3) == "1000");
    // ties
    CHECK(Rational(25, 100).to_decimal(1) == "0.2");  // 0.25 -> even digit 2
    CHECK(Rational(35, 100).to_decimal(1) == "0.4");  // 0.35 -> even digit 4
    CHECK(Rational(5, 4).to_decimal(2) == "1.2");     // 1.25 -> 1.2
}

TEST_CASE("fixed rendering") {
    CHECK(Rational(0).to_fixed(6) == "0.000000");
    CHECK(Rational(1, 3).to_fixed(6) == "0.333333");
    CHECK(Rational(2, 3).to_fixed(6) == "0.666667");
    CHECK(Rational(-7, 2).to_fixed(6) == "-3.500000");
    CHECK(Rational(1, 2000000).to_fixed(6) == "0.000000");   // rounds to zero, no sign
    CHECK(Rational(-1, 2000000).to_fixed(6) == "0.000000");
    CHECK(Rational(15, 10).to_fixed(0) == "2");   // 1.5 -> even 2
    CHECK(Rational(25, 10).to_fixed(0) == "2");   // 2.5 -> even 2
    CHECK(Rational(740).to_fixed(6) == "740.000000");
}

TEST_CASE("to_double is faithful") {
    CHECK(Rational(1, 2).to_double() == 0.5);
    CHECK(Rational(0).to_double() == 0.0);
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(Rational(-355, 113).to_double() == doctest::Approx(-355.0 / 113.0).epsilon(1e-15));
}
