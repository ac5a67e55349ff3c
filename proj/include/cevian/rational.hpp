#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "cevian/bigint.hpp"

namespace cevian {

// Exact rational number in canonical form: denominator > 0,
// gcd(|numerator|, denominator) = 1, zero stored as 0/1.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    // Reduces to canonical form; throws std::invalid_argument on d == 0.
    Rational(long long n, long long d);
    Rational(BigInt n, BigInt d);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }
    int sign() const { return num_.sign(); }

    Rational abs() const;
    Rational negated() const;
    // Throws std::domain_error on zero.
    Rational reciprocal() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    // Throws std::domain_error on division by zero.
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    // Total order by cross-multiplication (denominators are positive).
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // "-3/7", "42"; the denominator is printed only when it is not 1.
    std::string to_string() const;

    // Decimal expansion with `significant` significant digits, round half to
    // even, plain notation (no exponent). "0" for zero.
    std::string to_decimal(int significant) const;
    // Fixed-point expansion with exactly `fraction_digits` digits after the
    // point, round half to even.
    std::string to_fixed(int fraction_digits) const;

    double to_double() const;

    // Accepts "-?digits(/digits)?". On failure returns nullopt and, when
    // `error` is non-null, stores "syntax" or "zero denominator".
    static std::optional<Rational> parse(std::string_view text, std::string* error = nullptr);

  private:
    BigInt num_;
    BigInt den_;

    void canonicalize();
};

}  // namespace cevian
