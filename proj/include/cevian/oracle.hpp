#pragma once

#include "cevian/solver.hpp"
#include "cevian/triangle.hpp"

namespace cevian {

// Independent double-precision verification path. Everything in this header
// recomputes results of the exact kernel with ordinary floating point and a
// plain real 2x2 solve, sharing no code with the exact route.

struct FloatPoint {
    double x = 0.0;
    double y = 0.0;
};

struct FloatTriangle {
    FloatPoint p;
    FloatPoint q;
    FloatPoint r;
};

FloatPoint to_float(const GaussianRational& z);
FloatTriangle to_float(const Triangle& tri);

// Arg((r-p)/(q-p)) in (-pi, pi], from the expanded real and imaginary parts
// of the quotient. The single-argument arctan of their ratio would lose the
// quadrant whenever the real part is <= 0 (wedge angles of pi/2 or more);
// atan2 over the same two expansions keeps it. Throws std::domain_error when
// r or q coincides with p.
double angle_theta(FloatPoint p, FloatPoint q, FloatPoint r);

struct HeightComputation {
    double theta = 0.0;  // wedge angle at p, radians
    double h = 0.0;      // signed height of r over the base p->q
    double base = 0.0;   // |q - p|
};

// Height of r over the base p->q via the closed form
// ((a-c)(y-d) - (b-d)(x-c)) / sqrt((a-c)^2 + (b-d)^2) with p = (c,d),
// q = (a,b), r = (x,y); sign follows triangle orientation. Throws
// std::domain_error on a zero base.
HeightComputation height(FloatPoint p, FloatPoint q, FloatPoint r);

// Signed area as one-half base times height.
double area_base_height(FloatPoint p, FloatPoint q, FloatPoint r);

struct Intersection2D {
    double u = 0.0;
    double v = 0.0;
    FloatPoint point;
};

// Crossing of a0 + u*d0 and a1 + v*d1 by Cramer's rule on the real 2x2
// system. Throws DegenerateIntersection when |det| <= 1e-12 * |d0| * |d1|
// (the degeneracy test scales with the input).
Intersection2D intersect_real_2x2(FloatPoint a0, FloatPoint d0, FloatPoint a1, FloatPoint d1);

// Maps p to the origin and q onto the positive real axis; area is preserved.
// Throws std::domain_error on a degenerate triangle.
FloatTriangle canonical_placement(const FloatTriangle& tri);

// Float twin of solve_inner: feet by linear interpolation, vertices by three
// 2x2 solves.
struct FloatInner {
    FloatPoint alpha;
    FloatPoint beta;
    FloatPoint gamma;
    double u_alpha = 0.0;
    double u_beta = 0.0;
    double u_gamma = 0.0;
};

FloatInner float_inner_triangle(const FloatTriangle& tri, double t);

// |area(inner)| / |area(outer)| with every step in floating point.
double float_area_ratio(const FloatTriangle& tri, double t);

}  // namespace cevian
