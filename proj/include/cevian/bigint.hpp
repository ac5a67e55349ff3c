#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cevian {

class BigInt;

struct BigIntDivMod;

// Arbitrary-precision signed integer.
//
// Sign-magnitude representation over little-endian 32-bit limbs. The
// representation is canonical: no trailing zero limbs, and zero is never
// negative, so defaulted equality is exact value equality.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long value);

    // Parses an optionally signed decimal string. Throws std::invalid_argument
    // on anything else (empty string, stray characters, lone "-").
    static BigInt from_decimal(std::string_view text);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }
    bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }

    BigInt abs() const;
    BigInt negated() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Truncated division: quotient rounds toward zero, remainder takes the
    // dividend's sign, |remainder| < |divisor|. Throws std::domain_error on
    // division by zero.
    static BigIntDivMod div_mod(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    // Greatest common divisor of the magnitudes; gcd(0, 0) = 0.
    static BigInt gcd(const BigInt& a, const BigInt& b);

    static BigInt pow10(unsigned exponent);

    friend bool operator==(const BigInt& a, const BigInt& b) = default;
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    std::string to_string() const;

    // Number of significant bits in the magnitude; 0 for zero.
    std::size_t bit_length() const;

  private:
    std::vector<std::uint32_t> limbs_;
    bool negative_ = false;

    void trim();
    static int compare_magnitude(const BigInt& a, const BigInt& b);
    static std::vector<std::uint32_t> add_magnitude(
        const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    // Requires magnitude(a) >= magnitude(b).
    static std::vector<std::uint32_t> sub_magnitude(
        const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_magnitude(
        const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static void divmod_magnitude(const std::vector<std::uint32_t>& a,
                                 const std::vector<std::uint32_t>& b,
                                 std::vector<std::uint32_t>& quotient,
                                 std::vector<std::uint32_t>& remainder);
};

struct BigIntDivMod {
    BigInt quotient;
    BigInt remainder;
};

}  // namespace cevian
