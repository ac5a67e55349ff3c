#include "cevian/polynomial.hpp"

#include <stdexcept>

namespace cevian {

MultivariatePolynomial MultivariatePolynomial::constant(Rational value) {
    return term(std::move(value), Monomial{});
}

MultivariatePolynomial MultivariatePolynomial::term(Rational coefficient, Monomial monomial) {
    MultivariatePolynomial p;
    if (!coefficient.is_zero()) p.terms_.emplace(monomial, std::move(coefficient));
    return p;
}

MultivariatePolynomial MultivariatePolynomial::var_b() { return term(Rational(1), {1, 0, 0}); }
MultivariatePolynomial MultivariatePolynomial::var_x() { return term(Rational(1), {0, 1, 0}); }
MultivariatePolynomial MultivariatePolynomial::var_y() { return term(Rational(1), {0, 0, 1}); }

unsigned MultivariatePolynomial::degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

void MultivariatePolynomial::insert_term(const Monomial& m, const Rational& coefficient) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!coefficient.is_zero()) terms_.emplace(m, coefficient);
        return;
    }
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
}

MultivariatePolynomial operator+(const MultivariatePolynomial& a,
                                 const MultivariatePolynomial& b) {
    MultivariatePolynomial out = a;
    for (const auto& [m, c] : b.terms_) out.insert_term(m, c);
    return out;
}

MultivariatePolynomial operator-(const MultivariatePolynomial& a,
                                 const MultivariatePolynomial& b) {
    MultivariatePolynomial out = a;
    for (const auto& [m, c] : b.terms_) out.insert_term(m, c.negated());
    return out;
}

MultivariatePolynomial MultivariatePolynomial::operator-() const {
    MultivariatePolynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.negated());
    return out;
}

MultivariatePolynomial MultivariatePolynomial::scaled(const Rational& factor) const {
    MultivariatePolynomial out;
    if (factor.is_zero()) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * factor);
    return out;
}

MultivariatePolynomial operator*(const MultivariatePolynomial& a,
                                 const MultivariatePolynomial& b) {
    MultivariatePolynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m{ma.eb + mb.eb, ma.ex + mb.ex, ma.ey + mb.ey};
            if (m.total_degree() > MultivariatePolynomial::kDegreeCap) {
                throw std::overflow_error("MultivariatePolynomial: degree cap exceeded");
            }
            out.insert_term(m, ca * cb);
        }
    }
    return out;
}

Rational MultivariatePolynomial::evaluate(const Rational& b, const Rational& x,
                                          const Rational& y) const {
    auto pow = [](const Rational& base, unsigned e) {
        Rational r(1);
        for (unsigned i = 0; i < e; ++i) r *= base;
        return r;
    };
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
        sum += c * pow(b, m.eb) * pow(x, m.ex) * pow(y, m.ey);
    }
    return sum;
}

std::string MultivariatePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        const Rational& c = it->second;
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = c.abs();
        std::string vars;
        auto append_var = [&vars](char name, unsigned e) {
            if (e == 0) return;
            if (!vars.empty()) vars += '*';
            vars += name;
            if (e > 1) {
                vars += '^';
                vars += std::to_string(e);
            }
        };
        append_var('b', m.eb);
        append_var('x', m.ex);
        append_var('y', m.ey);
        if (vars.empty()) {
            out += mag.to_string();
        } else {
            if (mag != Rational(1)) {
                out += mag.to_string();
                out += '*';
            }
            out += vars;
        }
    }
    return out;
}

GaussianRational evaluate(const SymbolicPoint& pt, const Rational& b, const Rational& x,
                          const Rational& y) {
    return {pt.re.evaluate(b, x, y), pt.im.evaluate(b, x, y)};
}

SymbolicTriangle canonical_symbolic_triangle() {
    using P = MultivariatePolynomial;
    return {
        {P{}, P{}},
        {P::var_b(), P{}},
        {P::var_x(), P::var_y()},
    };
}

SymbolicFeet symbolic_feet() {
    using P = MultivariatePolynomial;
    const Rational third(1, 3);
    const Rational two_thirds(2, 3);
    return {
        {P::var_x().scaled(two_thirds) + P::var_b().scaled(third), P::var_y().scaled(two_thirds)},
        {P::var_x().scaled(third), P::var_y().scaled(third)},
        {P::var_b().scaled(two_thirds), P{}},
    };
}

SymbolicInner symbolic_inner_vertices() {
    using P = MultivariatePolynomial;
    auto point = [](long long cb, long long cx, long long cy) -> SymbolicPoint {
        return {P::var_b().scaled(Rational(cb, 7)) + P::var_x().scaled(Rational(cx, 7)),
                P::var_y().scaled(Rational(cy, 7))};
    };
    return {
        point(1, 2, 2),
        point(4, 1, 1),
        point(2, 4, 4),
    };
}

MultivariatePolynomial point_determinant(const SymbolicPoint& a, const SymbolicPoint& b,
                                         const SymbolicPoint& c) {
    // | a.re a.im 1 |
    // | b.re b.im 1 |  expanded along the last column
    // | c.re c.im 1 |
    return (b.re * c.im - c.re * b.im) - (a.re * c.im - c.re * a.im) +
           (a.re * b.im - b.re * a.im);
}

bool IdentityReport::all_pass() const {
    for (const IdentityFinding& f : findings) {
        if (!f.pass) return false;
    }
    return true;
}

std::string IdentityReport::to_text() const {
    std::string out;
    for (const IdentityFinding& f : findings) {
        out += f.name;
        out += ": residual=";
        out += f.residual.to_string();
        out += f.pass ? ": PASS\n" : ": FAIL\n";
    }
    return out;
}

IdentityReport verify_collinearity() {
    const SymbolicTriangle tri = canonical_symbolic_triangle();
    const SymbolicFeet feet = symbolic_feet();
    const SymbolicInner inner = symbolic_inner_vertices();

    auto finding = [](std::string name, MultivariatePolynomial det) -> IdentityFinding {
        const bool pass = det.is_zero();
        return {std::move(name), std::move(det), pass};
    };
    IdentityReport report;
    report.findings = {
        finding("alpha on cevian p->P", point_determinant(inner.alpha, tri.p, feet.P)),
        finding("alpha on cevian q->Q", point_determinant(inner.alpha, tri.q, feet.Q)),
        finding("beta on cevian q->Q", point_determinant(inner.beta, tri.q, feet.Q)),
        finding("beta on cevian r->R", point_determinant(inner.beta, tri.r, feet.R)),
        finding("gamma on cevian p->P", point_determinant(inner.gamma, tri.p, feet.P)),
        finding("gamma on cevian r->R", point_determinant(inner.gamma, tri.r, feet.R)),
    };
    return report;
}

IdentityReport verify_one_seventh() {
    const SymbolicTriangle tri = canonical_symbolic_triangle();
    const SymbolicInner inner = symbolic_inner_vertices();
    const MultivariatePolynomial by = MultivariatePolynomial::var_b() * MultivariatePolynomial::var_y();

    const MultivariatePolynomial twice_outer = point_determinant(tri.p, tri.q, tri.r);
    const MultivariatePolynomial twice_inner =
        point_determinant(inner.alpha, inner.beta, inner.gamma);

    MultivariatePolynomial outer_residual = twice_outer - by;
    MultivariatePolynomial inner_residual = twice_inner.scaled(Rational(7)) - by;

    IdentityReport report;
    const bool outer_pass = outer_residual.is_zero();
    const bool inner_pass = inner_residual.is_zero();
    report.findings = {
        {"outer area determinant equals b*y", std::move(outer_residual), outer_pass},
        {"seven times inner area determinant equals b*y", std::move(inner_residual), inner_pass},
    };
    return report;
}

}  // namespace cevian
