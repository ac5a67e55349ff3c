#include "cevian/triangle.hpp"

#include <stdexcept>

namespace cevian {

Triangle::Triangle(GaussianRational p, GaussianRational q, GaussianRational r)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)) {
    if (signed_area(p_, q_, r_).is_zero()) {
        throw std::invalid_argument("Triangle: vertices are collinear");
    }
}

Rational signed_area(const GaussianRational& a, const GaussianRational& b,
                     const GaussianRational& c) {
    const Rational det = (b.re() - a.re()) * (c.im() - a.im()) -
                         (b.im() - a.im()) * (c.re() - a.re());
    return det / Rational(2);
}

Rational signed_area(const Triangle& tri) { return signed_area(tri.p(), tri.q(), tri.r()); }

GaussianRational edge_point(const GaussianRational& from, const GaussianRational& to,
                            const Rational& t) {
    return from + t * (to - from);
}

CevianFeet cevian_feet(const Triangle& tri, const Rational& t) {
    return {
        edge_point(tri.r(), tri.q(), t),
        edge_point(tri.p(), tri.r(), t),
        edge_point(tri.q(), tri.p(), t),
        t,
    };
}

Triangle translate(const Triangle& tri, const GaussianRational& w) {
    return {tri.p() + w, tri.q() + w, tri.r() + w};
}

GaussianRational pythagorean_unit(const Rational& s) {
    const Rational s2 = s * s;
    const Rational den = Rational(1) + s2;
    return {(Rational(1) - s2) / den, (Rational(2) * s) / den};
}

Triangle rotate(const Triangle& tri, const GaussianRational& unit) {
    if (norm_sq(unit) != Rational(1)) {
        throw std::invalid_argument("rotate: multiplier must have unit norm");
    }
    return {tri.p() * unit, tri.q() * unit, tri.r() * unit};
}

}  // namespace cevian
