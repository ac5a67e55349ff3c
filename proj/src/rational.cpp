#include "cevian/rational.hpp"

#include <cstdlib>
#include <stdexcept>

namespace cevian {

namespace {

// Exact division, used only where divisibility is guaranteed (gcd factors).
BigInt exact_div(const BigInt& a, const BigInt& b) { return BigInt::div_mod(a, b).quotient; }

// Rounds q (the floor quotient) given remainder r against divisor d, half to
// even on the last decimal digit of q.
BigInt round_half_even(BigInt q, const BigInt& r, const BigInt& d) {
    const BigInt twice = r + r;
    if (twice > d || (twice == d && (BigInt::div_mod(q, BigInt(10)).remainder).is_odd())) {
        q = q + BigInt(1);
    }
    return q;
}

}  // namespace

Rational::Rational(long long n, long long d) : num_(n), den_(d) { canonicalize(); }

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    canonicalize();
}

void Rational::canonicalize() {
    if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
    if (den_.is_negative()) {
        num_ = num_.negated();
        den_ = den_.negated();
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
}

Rational Rational::abs() const {
    Rational r = *this;
    r.num_ = r.num_.abs();
    return r;
}

Rational Rational::negated() const {
    Rational r = *this;
    r.num_ = r.num_.negated();
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    Rational r;
    if (num_.is_negative()) {
        r.num_ = den_.negated();
        r.den_ = num_.negated();
    } else {
        r.num_ = den_;
        r.den_ = num_;
    }
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    Rational out;
    BigInt g = BigInt::gcd(a.den_, b.den_);
    if (g == BigInt(1)) {
        // Coprime denominators: the sum is already in lowest terms.
        out.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        out.den_ = a.den_ * b.den_;
        if (out.num_.is_zero()) out.den_ = BigInt(1);
        return out;
    }
    BigInt bg = exact_div(b.den_, g);
    BigInt t = a.num_ * bg + b.num_ * exact_div(a.den_, g);
    BigInt den = a.den_ * bg;
    BigInt g2 = BigInt::gcd(t, g);
    if (g2 != BigInt(1)) {
        t = exact_div(t, g2);
        den = exact_div(den, g2);
    }
    out.num_ = std::move(t);
    out.den_ = std::move(den);
    if (out.num_.is_zero()) out.den_ = BigInt(1);
    return out;
}

Rational operator-(const Rational& a, const Rational& b) { return a + b.negated(); }

Rational operator*(const Rational& a, const Rational& b) {
    BigInt g1 = BigInt::gcd(a.num_, b.den_);
    BigInt g2 = BigInt::gcd(b.num_, a.den_);
    Rational out;
    out.num_ = exact_div(a.num_, g1) * exact_div(b.num_, g2);
    out.den_ = exact_div(a.den_, g2) * exact_div(b.den_, g1);
    if (out.num_.is_zero()) out.den_ = BigInt(1);
    return out;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return a * b.reciprocal();
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return (a.num_ * b.den_) <=> (b.num_ * a.den_);
}

std::string Rational::to_string() const {
    std::string out = num_.to_string();
    if (!is_integer()) {
        out += '/';
        out += den_.to_string();
    }
    return out;
}

std::string Rational::to_decimal(int significant) const {
    if (is_zero()) return "0";
    const BigInt n = num_.abs();
    const BigInt& d = den_;

    // Decimal exponent of the leading digit: value in [10^e, 10^(e+1)).
    long long e = static_cast<long long>(n.to_string().size()) -
                  static_cast<long long>(d.to_string().size());
    auto less_than_pow10 = [&](long long k) {
        // n/d < 10^k
        if (k >= 0) return n < d * BigInt::pow10(static_cast<unsigned>(k));
        return n * BigInt::pow10(static_cast<unsigned>(-k)) < d;
    };
    if (less_than_pow10(e)) --e;
    if (!less_than_pow10(e + 1)) ++e;

    // digits = round(value * 10^(significant-1-e)), which has exactly
    // `significant` digits unless rounding carries into one more.
    const long long k = significant - 1 - e;
    const BigInt divisor = k >= 0 ? d : d * BigInt::pow10(static_cast<unsigned>(-k));
    const BigInt dividend = k >= 0 ? n * BigInt::pow10(static_cast<unsigned>(k)) : n;
    BigIntDivMod dm = BigInt::div_mod(dividend, divisor);
    BigInt digits = round_half_even(dm.quotient, dm.remainder, divisor);
    std::string ds = digits.to_string();
    if (static_cast<int>(ds.size()) > significant) {
        // 99...9 rounded up to 100...0
        ds.pop_back();
        ++e;
    }

    std::string out;
    if (sign() < 0) out.push_back('-');
    if (e >= significant - 1) {
        out += ds;
        out.append(static_cast<std::size_t>(e - significant + 1), '0');
    } else if (e >= 0) {
        out += ds.substr(0, static_cast<std::size_t>(e + 1));
        out.push_back('.');
        out += ds.substr(static_cast<std::size_t>(e + 1));
    } else {
        out += "0.";
        out.append(static_cast<std::size_t>(-e - 1), '0');
        out += ds;
    }
    return out;
}

std::string Rational::to_fixed(int fraction_digits) const {
    const BigInt scale = BigInt::pow10(static_cast<unsigned>(fraction_digits));
    BigIntDivMod dm = BigInt::div_mod(num_.abs() * scale, den_);
    BigInt scaled = round_half_even(dm.quotient, dm.remainder, den_);
    std::string ds = scaled.to_string();
    if (static_cast<int>(ds.size()) <= fraction_digits) {
        ds.insert(0, static_cast<std::size_t>(fraction_digits + 1) - ds.size(), '0');
    }
    std::string out;
    if (sign() < 0 && !scaled.is_zero()) out.push_back('-');
    out += ds.substr(0, ds.size() - static_cast<std::size_t>(fraction_digits));
    if (fraction_digits > 0) {
        out.push_back('.');
        out += ds.substr(ds.size() - static_cast<std::size_t>(fraction_digits));
    }
    return out;
}

double Rational::to_double() const {
    if (is_zero()) return 0.0;
    // 17 significant decimal digits pin a double to within one ulp.
    return std::strtod(to_decimal(17).c_str(), nullptr);
}

std::optional<Rational> Rational::parse(std::string_view text, std::string* error) {
    auto fail = [&](const char* why) -> std::optional<Rational> {
        if (error) *error = why;
        return std::nullopt;
    };
    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '-') ++pos;
    std::size_t num_begin = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == num_begin) return fail("syntax");
    std::string_view num_digits = text.substr(0, pos);
    if (pos == text.size()) {
        return Rational(BigInt::from_decimal(num_digits), BigInt(1));
    }
    if (text[pos] != '/') return fail("syntax");
    ++pos;
    std::size_t den_begin = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == den_begin || pos != text.size()) return fail("syntax");
    BigInt den = BigInt::from_decimal(text.substr(den_begin));
    if (den.is_zero()) return fail("zero denominator");
    return Rational(BigInt::from_decimal(num_digits), std::move(den));
}

}  // namespace cevian
