#include "doctest.h"

#include <stdexcept>

#include "cevian/gaussian.hpp"
#include "cevian/sampling.hpp"

using cevian::GaussianRational;
using cevian::Rational;

namespace {

GaussianRational g(long long re, long long im) { return {re, im}; }

}  // namespace

TEST_CASE("field arithmetic") {
    CHECK(g(1, 1) * g(1, -1) == g(2, 0));
    CHECK(g(0, 1) * g(0, 1) == g(-1, 0));
    // (2/3 + 2/3 i)(1/3 - 1/3 i) = 4/9 + 0i
    const GaussianRational a(Rational(2, 3), Rational(2, 3));
    const GaussianRational b(Rational(1, 3), Rational(-1, 3));
    CHECK(a * b == GaussianRational(Rational(4, 9), Rational(0)));

    CHECK(g(1, 2) + g(3, -5) == g(4, -3));
    CHECK(g(1, 2) - g(3, -5) == g(-2, 7));
    CHECK(g(4, 2) / g(2, 0) == g(2, 1));
    CHECK_THROWS_AS(g(1, 0) / g(0, 0), std::domain_error);
}

TEST_CASE("conjugate") {
    CHECK(conj(GaussianRational(Rational(1, 3), Rational(-1))) ==
          GaussianRational(Rational(1, 3), Rational(1)));
    CHECK(conj(g(5, 0)) == g(5, 0));
    CHECK(conj(g(0, 0)) == g(0, 0));
    CHECK(conj(conj(g(3, -4))) == g(3, -4));
}

TEST_CASE("norm_sq") {
    CHECK(norm_sq(g(3, 4)) == Rational(25));
    CHECK(norm_sq(g(0, 0)) == Rational(0));
    CHECK(norm_sq(GaussianRational(Rational(1, 3), Rational(1, 3))) == Rational(2, 9));
}

TEST_CASE("printing") {
    CHECK(g(0, 0).to_string() == "0+0i");
    CHECK(g(7, 0).to_string() == "7+0i");
    CHECK(GaussianRational(Rational(7, 3), Rational(14, 3)).to_string() == "7/3+14/3i");
    CHECK(g(1, -2).to_string() == "1-2i");
    CHECK(GaussianRational(Rational(-1, 2), Rational(-3, 4)).to_string() == "-1/2-3/4i");
}

TEST_CASE("parsing") {
    CHECK(GaussianRational::parse("3") == g(3, 0));
    CHECK(GaussianRational::parse("-3/4") == GaussianRational(Rational(-3, 4), Rational(0)));
    CHECK(GaussianRational::parse("3i") == g(0, 3));
    CHECK(GaussianRational::parse("-7i") == g(0, -7));
    CHECK(GaussianRational::parse("1+2i") == g(1, 2));
    CHECK(GaussianRational::parse("1-2i") == g(1, -2));
    CHECK(GaussianRational::parse("7/3+14/3i") ==
          GaussianRational(Rational(7, 3), Rational(14, 3)));
    CHECK(GaussianRational::parse("-1/2-3/4i") ==
          GaussianRational(Rational(-1, 2), Rational(-3, 4)));

    std::string why;
    CHECK(!GaussianRational::parse("", &why));
    CHECK(!GaussianRational::parse("i", &why));
    CHECK(!GaussianRational::parse("1+2", &why));
    CHECK(why == "syntax");
    CHECK(!GaussianRational::parse("1+2i3", &why));
    CHECK(!GaussianRational::parse("1 + 2i", &why));
    CHECK(!GaussianRational::parse("1/0+2i", &why));
    CHECK(why == "zero denominator");
    CHECK(!GaussianRational::parse("1+2/0i", &why));
    CHECK(why == "zero denominator");
}

TEST_CASE("round-trip through text on random values") {
    cevian::Sampler sampler(7);
    for (int i = 0; i < 100; ++i) {
        const GaussianRational v = sampler.point();
        CHECK(GaussianRational::parse(v.to_string()) == v);
    }
}

TEST_CASE("field properties on random values") {
    cevian::Sampler sampler(11);
    const GaussianRational one(1, 0);
    for (int i = 0; i < 100; ++i) {
        const GaussianRational a = sampler.point(50);
        const GaussianRational b = sampler.point(50);
        const GaussianRational c = sampler.point(50);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        // results stay canonical componentwise
        for (const Rational& part : {(a * b).re(), (a * b).im(), (a + b).re(), (a + b).im()}) {
            CHECK(part.denominator() > cevian::BigInt(0));
            CHECK(cevian::BigInt::gcd(part.numerator(), part.denominator()) == cevian::BigInt(1));
        }
        // norm is multiplicative and matches a * conj(a)
        const GaussianRational n = a * conj(a);
        CHECK(n.im() == Rational(0));
        CHECK(n.re() == norm_sq(a));
        if (!a.is_zero()) CHECK(a * (one / a) == one);
    }
}
