#include "cevian/gaussian.hpp"

#include <stdexcept>

namespace cevian {

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    const Rational n = norm_sq(b);
    const GaussianRational t = a * conj(b);
    return {t.re() / n, t.im() / n};
}

GaussianRational conj(const GaussianRational& a) { return {a.re(), a.im().negated()}; }

Rational norm_sq(const GaussianRational& a) { return a.re() * a.re() + a.im() * a.im(); }

GaussianRational operator*(const Rational& s, const GaussianRational& a) {
    return {s * a.re(), s * a.im()};
}

std::string GaussianRational::to_string() const {
    std::string out = re_.to_string();
    out += im_.sign() < 0 ? '-' : '+';
    out += im_.abs().to_string();
    out += 'i';
    return out;
}

std::optional<GaussianRational> GaussianRational::parse(std::string_view text,
                                                        std::string* error) {
    auto fail = [&](const char* why) -> std::optional<GaussianRational> {
        if (error) *error = why;
        return std::nullopt;
    };
    // Span of a rational literal starting at `pos`: -?digits(/digits)?
    auto scan_rational = [&](std::size_t pos) -> std::size_t {
        std::size_t p = pos;
        if (p < text.size() && (text[p] == '-' || text[p] == '+')) ++p;
        std::size_t digits = p;
        while (p < text.size() && text[p] >= '0' && text[p] <= '9') ++p;
        if (p == digits) return pos;
        if (p < text.size() && text[p] == '/') {
            std::size_t den = ++p;
            while (p < text.size() && text[p] >= '0' && text[p] <= '9') ++p;
            if (p == den) return pos;
        }
        return p;
    };
    auto parse_part = [&](std::size_t begin, std::size_t end,
                          Rational& out) -> const char* {
        std::string_view part = text.substr(begin, end - begin);
        std::string_view unsigned_part = part;
        bool negative = false;
        if (!unsigned_part.empty() && (unsigned_part[0] == '+' || unsigned_part[0] == '-')) {
            negative = unsigned_part[0] == '-';
            unsigned_part.remove_prefix(1);
        }
        std::string why;
        auto value = Rational::parse(unsigned_part, &why);
        if (!value) return why == "zero denominator" ? "zero denominator" : "syntax";
        out = negative ? value->negated() : *value;
        return nullptr;
    };

    std::size_t end1 = scan_rational(0);
    if (end1 == 0) return fail("syntax");
    Rational first;
    if (const char* why = parse_part(0, end1, first)) return fail(why);

    if (end1 == text.size()) return GaussianRational(first, Rational(0));
    if (text[end1] == 'i' && end1 + 1 == text.size()) {
        return GaussianRational(Rational(0), first);
    }
    if (text[end1] != '+' && text[end1] != '-') return fail("syntax");

    std::size_t end2 = scan_rational(end1);
    if (end2 == end1) return fail("syntax");
    Rational second;
    if (const char* why = parse_part(end1, end2, second)) return fail(why);
    if (end2 + 1 != text.size() || text[end2] != 'i') return fail("syntax");
    return GaussianRational(first, second);
}

}  // namespace cevian
