#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "cevian/gaussian.hpp"

namespace cevian {

// Exponents of b^eb * x^ex * y^ey, the three canonical-triangle symbols.
// Ordered graded-lexicographically with b > x > y.
struct Monomial {
    unsigned eb = 0;
    unsigned ex = 0;
    unsigned ey = 0;

    unsigned total_degree() const { return eb + ex + ey; }

    friend bool operator==(const Monomial& a, const Monomial& b) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
        if (auto c = a.eb <=> b.eb; c != 0) return c;
        if (auto c = a.ex <=> b.ex; c != 0) return c;
        return a.ey <=> b.ey;
    }
};

// Sparse polynomial in (b, x, y) over the rationals. Zero coefficients are
// never stored; terms are kept in graded-lex order, so equality is exact and
// printing is canonical. The total degree of any term is capped at 8 -- the
// identities proved here stay at degree <= 3, so hitting the cap means a
// runaway expression, and multiplication throws std::overflow_error.
class MultivariatePolynomial {
  public:
    static constexpr unsigned kDegreeCap = 8;

    MultivariatePolynomial() = default;
    static MultivariatePolynomial constant(Rational value);
    static MultivariatePolynomial term(Rational coefficient, Monomial monomial);
    static MultivariatePolynomial var_b();
    static MultivariatePolynomial var_x();
    static MultivariatePolynomial var_y();

    bool is_zero() const { return terms_.empty(); }
    unsigned degree() const;

    friend MultivariatePolynomial operator+(const MultivariatePolynomial& a,
                                            const MultivariatePolynomial& b);
    friend MultivariatePolynomial operator-(const MultivariatePolynomial& a,
                                            const MultivariatePolynomial& b);
    friend MultivariatePolynomial operator*(const MultivariatePolynomial& a,
                                            const MultivariatePolynomial& b);
    MultivariatePolynomial operator-() const;
    MultivariatePolynomial scaled(const Rational& factor) const;

    friend bool operator==(const MultivariatePolynomial& a,
                           const MultivariatePolynomial& b) = default;

    Rational evaluate(const Rational& b, const Rational& x, const Rational& y) const;

    // Canonical rendering, leading term first: "b^2 - x^2", "2/7*b*y".
    std::string to_string() const;

  private:
    std::map<Monomial, Rational> terms_;

    void insert_term(const Monomial& m, const Rational& coefficient);
};

struct SymbolicPoint {
    MultivariatePolynomial re;
    MultivariatePolynomial im;

    friend bool operator==(const SymbolicPoint& a, const SymbolicPoint& b) = default;
};

GaussianRational evaluate(const SymbolicPoint& pt, const Rational& b, const Rational& x,
                          const Rational& y);

// The canonical triangle p = (0,0), q = (b,0), r = (x,y) and its one-third
// cevian feet P, Q, R as polynomial points.
struct SymbolicTriangle {
    SymbolicPoint p;
    SymbolicPoint q;
    SymbolicPoint r;
};
struct SymbolicFeet {
    SymbolicPoint P;
    SymbolicPoint Q;
    SymbolicPoint R;
};
struct SymbolicInner {
    SymbolicPoint alpha;
    SymbolicPoint beta;
    SymbolicPoint gamma;
};

SymbolicTriangle canonical_symbolic_triangle();
SymbolicFeet symbolic_feet();
// alpha = ((2x+b)/7, 2y/7), beta = ((x+4b)/7, y/7), gamma = ((4x+2b)/7, 4y/7).
SymbolicInner symbolic_inner_vertices();

// The 3x3 determinant of rows (re_i, im_i, 1): twice the signed area of the
// three points, identically zero iff they are always collinear.
MultivariatePolynomial point_determinant(const SymbolicPoint& a, const SymbolicPoint& b,
                                         const SymbolicPoint& c);

struct IdentityFinding {
    std::string name;
    MultivariatePolynomial residual;
    bool pass = false;
};

struct IdentityReport {
    std::vector<IdentityFinding> findings;

    bool all_pass() const;
    std::string to_text() const;
};

// Each inner vertex against both cevians through it: six point determinants,
// all required to be the zero polynomial.
IdentityReport verify_collinearity();

// The area identity as polynomials: the outer determinant equals b*y, and
// seven times the inner determinant equals b*y.
IdentityReport verify_one_seventh();

}  // namespace cevian
