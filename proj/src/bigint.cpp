#include "cevian/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <stdexcept>

namespace cevian {

namespace {

constexpr std::uint64_t kLimbBase = 1ull << 32;
constexpr std::uint64_t kLimbMask = 0xFFFFFFFFull;

void trim_vec(std::vector<std::uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

int compare_vec(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

// Divides a multi-limb magnitude by a single nonzero limb.
void divmod_single(const std::vector<std::uint32_t>& a, std::uint32_t d,
                   std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    q.assign(a.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | a[i];
        q[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    trim_vec(q);
    r.clear();
    if (rem != 0) r.push_back(static_cast<std::uint32_t>(rem));
}

std::size_t trailing_zero_bits(const std::vector<std::uint32_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) return i * 32 + std::countr_zero(v[i]);
    }
    return 0;
}

void shift_right_bits(std::vector<std::uint32_t>& v, std::size_t bits) {
    const std::size_t limb_shift = bits / 32;
    const unsigned bit_shift = bits % 32;
    if (limb_shift >= v.size()) {
        v.clear();
        return;
    }
    if (limb_shift > 0) v.erase(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(limb_shift));
    if (bit_shift > 0) {
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            v[i] = (v[i] >> bit_shift) | (v[i + 1] << (32 - bit_shift));
        }
        v.back() >>= bit_shift;
    }
    trim_vec(v);
}

void shift_left_bits(std::vector<std::uint32_t>& v, std::size_t bits) {
    if (v.empty() || bits == 0) return;
    const std::size_t limb_shift = bits / 32;
    const unsigned bit_shift = bits % 32;
    if (bit_shift > 0) {
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            std::uint32_t next = v[i] >> (32 - bit_shift);
            v[i] = (v[i] << bit_shift) | carry;
            carry = next;
        }
        if (carry != 0) v.push_back(carry);
    }
    v.insert(v.begin(), limb_shift, 0u);
}

void sub_in_place(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t rhs = borrow + (i < b.size() ? b[i] : 0);
        if (a[i] >= rhs) {
            a[i] = static_cast<std::uint32_t>(a[i] - rhs);
            borrow = 0;
        } else {
            a[i] = static_cast<std::uint32_t>(kLimbBase + a[i] - rhs);
            borrow = 1;
        }
    }
    trim_vec(a);
}

}  // namespace

BigInt::BigInt(long long value) {
    negative_ = value < 0;
    // Avoids overflow on LLONG_MIN.
    std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(value) + 1
                                  : static_cast<std::uint64_t>(value);
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag & kLimbMask));
        mag >>= 32;
    }
    if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::from_decimal(std::string_view text) {
    bool negative = false;
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) throw std::invalid_argument("BigInt: empty decimal string");
    BigInt result;
    const BigInt chunk_scale(1000000000ll);
    while (pos < text.size()) {
        std::size_t take = std::min<std::size_t>(9, text.size() - pos);
        std::uint64_t chunk = 0;
        std::uint64_t scale = 1;
        for (std::size_t i = 0; i < take; ++i, ++pos) {
            char c = text[pos];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: invalid decimal digit");
            chunk = chunk * 10 + static_cast<std::uint64_t>(c - '0');
            scale *= 10;
        }
        result = result * (take == 9 ? chunk_scale : BigInt(static_cast<long long>(scale))) +
                 BigInt(static_cast<long long>(chunk));
    }
    result.negative_ = negative && !result.is_zero();
    return result;
}

void BigInt::trim() {
    trim_vec(limbs_);
    if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

BigInt BigInt::negated() const {
    BigInt r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
    return compare_vec(a.limbs_, b.limbs_);
}

std::vector<std::uint32_t> BigInt::add_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint64_t sum = carry;
        if (i < a.size()) sum += a[i];
        if (i < b.size()) sum += b[i];
        out.push_back(static_cast<std::uint32_t>(sum & kLimbMask));
        carry = sum >> 32;
    }
    if (carry != 0) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

std::vector<std::uint32_t> BigInt::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out = a;
    sub_in_place(out, b);
    return out;
}

std::vector<std::uint32_t> BigInt::mul_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + out[i + j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur & kLimbMask);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry != 0) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur & kLimbMask);
            carry = cur >> 32;
            ++k;
        }
    }
    trim_vec(out);
    return out;
}

// Knuth algorithm D over 32-bit limbs, following the classic divmnu layout.
void BigInt::divmod_magnitude(const std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b,
                              std::vector<std::uint32_t>& quotient,
                              std::vector<std::uint32_t>& remainder) {
    if (compare_vec(a, b) < 0) {
        quotient.clear();
        remainder = a;
        return;
    }
    if (b.size() == 1) {
        divmod_single(a, b[0], quotient, remainder);
        return;
    }

    const std::size_t n = b.size();
    const std::size_t m = a.size() - n;
    const unsigned shift = static_cast<unsigned>(std::countl_zero(b.back()));

    std::vector<std::uint32_t> vn = b;
    shift_left_bits(vn, shift);
    std::vector<std::uint32_t> un = a;
    shift_left_bits(un, shift);
    un.resize(a.size() + 1, 0);

    quotient.assign(m + 1, 0);
    const std::uint64_t vhi = vn[n - 1];
    const std::uint64_t vlo = vn[n - 2];

    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
        std::uint64_t qhat = num / vhi;
        std::uint64_t rhat = num % vhi;
        while (qhat >= kLimbBase ||
               qhat * vlo > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vhi;
            if (rhat >= kLimbBase) break;
        }

        // Multiply-subtract qhat * vn from un[j .. j+n].
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t prod = qhat * vn[i] + carry;
            carry = prod >> 32;
            std::int64_t diff = static_cast<std::int64_t>(un[i + j]) - borrow -
                                static_cast<std::int64_t>(prod & kLimbMask);
            un[i + j] = static_cast<std::uint32_t>(diff);
            borrow = diff < 0 ? 1 : 0;
        }
        std::int64_t top = static_cast<std::int64_t>(un[j + n]) - borrow -
                           static_cast<std::int64_t>(carry);
        un[j + n] = static_cast<std::uint32_t>(top);

        if (top < 0) {
            // qhat was one too large.
            --qhat;
            std::uint64_t carry2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t sum = static_cast<std::uint64_t>(un[i + j]) + vn[i] + carry2;
                un[i + j] = static_cast<std::uint32_t>(sum & kLimbMask);
                carry2 = sum >> 32;
            }
            un[j + n] = static_cast<std::uint32_t>(un[j + n] + carry2);
        }
        quotient[j] = static_cast<std::uint32_t>(qhat);
    }

    trim_vec(quotient);
    remainder.assign(un.begin(), un.begin() + static_cast<std::ptrdiff_t>(n));
    trim_vec(remainder);
    shift_right_bits(remainder, shift);
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt out;
    if (a.negative_ == b.negative_) {
        out.limbs_ = BigInt::add_magnitude(a.limbs_, b.limbs_);
        out.negative_ = a.negative_;
    } else {
        int cmp = BigInt::compare_magnitude(a, b);
        if (cmp == 0) return BigInt();
        const BigInt& big = cmp > 0 ? a : b;
        const BigInt& small = cmp > 0 ? b : a;
        out.limbs_ = BigInt::sub_magnitude(big.limbs_, small.limbs_);
        out.negative_ = big.negative_;
    }
    out.trim();
    return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + b.negated(); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt out;
    out.limbs_ = BigInt::mul_magnitude(a.limbs_, b.limbs_);
    out.negative_ = !out.limbs_.empty() && (a.negative_ != b.negative_);
    return out;
}

BigIntDivMod BigInt::div_mod(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    BigIntDivMod out;
    divmod_magnitude(a.limbs_, b.limbs_, out.quotient.limbs_, out.remainder.limbs_);
    out.quotient.negative_ = !out.quotient.limbs_.empty() && (a.negative_ != b.negative_);
    out.remainder.negative_ = !out.remainder.limbs_.empty() && a.negative_;
    return out;
}

BigInt operator/(const BigInt& a, const BigInt& b) { return BigInt::div_mod(a, b).quotient; }

BigInt operator%(const BigInt& a, const BigInt& b) { return BigInt::div_mod(a, b).remainder; }

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    // Binary gcd on magnitudes; no divisions needed.
    std::vector<std::uint32_t> u = a.limbs_;
    std::vector<std::uint32_t> v = b.limbs_;
    if (u.empty()) {
        BigInt r;
        r.limbs_ = v;
        return r;
    }
    if (v.empty()) {
        BigInt r;
        r.limbs_ = u;
        return r;
    }
    const std::size_t tz_u = trailing_zero_bits(u);
    const std::size_t tz_v = trailing_zero_bits(v);
    const std::size_t common = std::min(tz_u, tz_v);
    shift_right_bits(u, tz_u);
    shift_right_bits(v, tz_v);
    while (true) {
        int cmp = compare_vec(u, v);
        if (cmp == 0) break;
        if (cmp < 0) u.swap(v);
        sub_in_place(u, v);
        shift_right_bits(u, trailing_zero_bits(u));
    }
    shift_left_bits(u, common);
    BigInt r;
    r.limbs_ = std::move(u);
    return r;
}

BigInt BigInt::pow10(unsigned exponent) {
    BigInt result(1);
    const BigInt chunk(1000000000ll);
    while (exponent >= 9) {
        result = result * chunk;
        exponent -= 9;
    }
    long long tail = 1;
    for (unsigned i = 0; i < exponent; ++i) tail *= 10;
    return result * BigInt(tail);
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.negative_ != b.negative_) {
        return a.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    int cmp = BigInt::compare_magnitude(a, b);
    if (a.negative_) cmp = -cmp;
    if (cmp < 0) return std::strong_ordering::less;
    if (cmp > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> mag = limbs_;
    std::vector<std::uint32_t> chunks;
    std::vector<std::uint32_t> q, r;
    while (!mag.empty()) {
        divmod_single(mag, 1000000000u, q, r);
        chunks.push_back(r.empty() ? 0u : r[0]);
        mag = q;
    }
    std::string out;
    if (negative_) out.push_back('-');
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%u", chunks.back());
    out += buf;
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof(buf), "%09u", chunks[i]);
        out += buf;
    }
    return out;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    return limbs_.size() * 32 - static_cast<std::size_t>(std::countl_zero(limbs_.back()));
}

}  // namespace cevian
