#pragma once

#include "cevian/gaussian.hpp"

namespace cevian {

// Ordered vertex triple; construction rejects collinear vertices, so every
// Triangle has nonzero signed area.
class Triangle {
  public:
    // Throws std::invalid_argument when p, q, r are collinear.
    Triangle(GaussianRational p, GaussianRational q, GaussianRational r);

    const GaussianRational& p() const { return p_; }
    const GaussianRational& q() const { return q_; }
    const GaussianRational& r() const { return r_; }

    friend bool operator==(const Triangle& a, const Triangle& b) = default;

  private:
    GaussianRational p_;
    GaussianRational q_;
    GaussianRational r_;
};

// Half the 3x3 determinant of rows (x_i, y_i, 1): positive for
// counter-clockwise order, zero iff collinear.
Rational signed_area(const GaussianRational& a, const GaussianRational& b,
                     const GaussianRational& c);
Rational signed_area(const Triangle& tri);

// from + t*(to - from).
GaussianRational edge_point(const GaussianRational& from, const GaussianRational& to,
                            const Rational& t);

// The cevian feet at fraction t, taken rotationally: P on r->q, Q on p->r,
// R on q->p.
struct CevianFeet {
    GaussianRational P;
    GaussianRational Q;
    GaussianRational R;
    Rational t;
};

CevianFeet cevian_feet(const Triangle& tri, const Rational& t);

// Inner vertices; may be coincident (all medians meet at the centroid when
// t = 1/2) or collinear, so this is a plain triple rather than a Triangle.
struct PointTriple {
    GaussianRational alpha;
    GaussianRational beta;
    GaussianRational gamma;

    friend bool operator==(const PointTriple& a, const PointTriple& b) = default;
};

Triangle translate(const Triangle& tri, const GaussianRational& w);

// Unit-modulus Gaussian rational ((1 - s^2) + 2s*i) / (1 + s^2); rational
// points of the unit circle, usable as exact rotation multipliers.
GaussianRational pythagorean_unit(const Rational& s);

// Multiplies every vertex by `unit`; throws std::invalid_argument unless
// norm_sq(unit) == 1.
Triangle rotate(const Triangle& tri, const GaussianRational& unit);

}  // namespace cevian
