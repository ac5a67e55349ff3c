#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cevian/rational.hpp"

namespace cevian {

// Complex number with rational real and imaginary parts; the field Q(i).
// Doubles as a point or direction vector in the plane.
class GaussianRational {
  public:
    GaussianRational() = default;
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long long re, long long im = 0) : re_(re), im_(im) {}

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
    // Exact field division; throws std::domain_error on b == 0.
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
    GaussianRational operator-() const { return {re_.negated(), im_.negated()}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

    // "7/3+14/3i", "1-2i"; both components always printed.
    std::string to_string() const;

    // Accepts "3", "3i", "1+2i", "-1/2-3/4i". On failure returns nullopt and,
    // when `error` is non-null, stores "syntax" or "zero denominator".
    static std::optional<GaussianRational> parse(std::string_view text,
                                                 std::string* error = nullptr);

  private:
    Rational re_;
    Rational im_;
};

GaussianRational conj(const GaussianRational& a);
// a * conj(a) = re^2 + im^2, purely real and non-negative.
Rational norm_sq(const GaussianRational& a);

GaussianRational operator*(const Rational& s, const GaussianRational& a);

}  // namespace cevian
