#include "cevian/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace cevian {

namespace {

double hypot2(FloatPoint a, FloatPoint b) { return std::hypot(b.x - a.x, b.y - a.y); }

FloatPoint lerp(FloatPoint from, FloatPoint to, double t) {
    return {from.x + t * (to.x - from.x), from.y + t * (to.y - from.y)};
}

}  // namespace

FloatPoint to_float(const GaussianRational& z) {
    return {z.re().to_double(), z.im().to_double()};
}

FloatTriangle to_float(const Triangle& tri) {
    return {to_float(tri.p()), to_float(tri.q()), to_float(tri.r())};
}

double angle_theta(FloatPoint p, FloatPoint q, FloatPoint r) {
    if ((q.x == p.x && q.y == p.y) || (r.x == p.x && r.y == p.y)) {
        throw std::domain_error("angle_theta: coincident points");
    }
    const double a = q.x, b = q.y, c = p.x, d = p.y, x = r.x, y = r.y;
    const double imag = (a - c) * (y - d) - (b - d) * (x - c);
    const double real = (x - c) * (a - c) + (b - d) * (y - d);
    return std::atan2(imag, real);
}

HeightComputation height(FloatPoint p, FloatPoint q, FloatPoint r) {
    const double base = hypot2(p, q);
    if (base == 0.0) throw std::domain_error("height: zero base");
    const double a = q.x, b = q.y, c = p.x, d = p.y, x = r.x, y = r.y;
    const double h = ((a - c) * (y - d) - (b - d) * (x - c)) / base;
    return {angle_theta(p, q, r), h, base};
}

double area_base_height(FloatPoint p, FloatPoint q, FloatPoint r) {
    const HeightComputation hc = height(p, q, r);
    return 0.5 * hc.base * hc.h;
}

Intersection2D intersect_real_2x2(FloatPoint a0, FloatPoint d0, FloatPoint a1,
                                  FloatPoint d1) {
    // u*d0 - v*d1 = a1 - a0, solved by Cramer's rule.
    const double det = d1.x * d0.y - d0.x * d1.y;
    const double scale = std::hypot(d0.x, d0.y) * std::hypot(d1.x, d1.y);
    if (std::fabs(det) <= 1e-12 * scale) {
        throw DegenerateIntersection("intersect_real_2x2: near-singular system");
    }
    const double dx = a1.x - a0.x;
    const double dy = a1.y - a0.y;
    const double u = (d1.x * dy - d1.y * dx) / det;
    const double v = (d0.x * dy - d0.y * dx) / det;
    return {u, v, {a0.x + u * d0.x, a0.y + u * d0.y}};
}

FloatTriangle canonical_placement(const FloatTriangle& tri) {
    const double base = hypot2(tri.p, tri.q);
    if (base == 0.0) throw std::domain_error("canonical_placement: degenerate triangle");
    // Rotate by the conjugate of (q - p)/|q - p| after shifting p to 0.
    const double cos_t = (tri.q.x - tri.p.x) / base;
    const double sin_t = (tri.q.y - tri.p.y) / base;
    auto place = [&](FloatPoint v) -> FloatPoint {
        const double dx = v.x - tri.p.x;
        const double dy = v.y - tri.p.y;
        return {cos_t * dx + sin_t * dy, -sin_t * dx + cos_t * dy};
    };
    // p and q land on exact axis points by construction.
    FloatTriangle out{{0.0, 0.0}, {base, 0.0}, place(tri.r)};
    if (std::fabs(out.r.y) == 0.0) {
        throw std::domain_error("canonical_placement: degenerate triangle");
    }
    return out;
}

FloatInner float_inner_triangle(const FloatTriangle& tri, double t) {
    const FloatPoint P = lerp(tri.r, tri.q, t);
    const FloatPoint Q = lerp(tri.p, tri.r, t);
    const FloatPoint R = lerp(tri.q, tri.p, t);
    auto dir = [](FloatPoint from, FloatPoint to) -> FloatPoint {
        return {to.x - from.x, to.y - from.y};
    };
    const Intersection2D alpha = intersect_real_2x2(tri.p, dir(tri.p, P), tri.q, dir(tri.q, Q));
    const Intersection2D beta = intersect_real_2x2(tri.q, dir(tri.q, Q), tri.r, dir(tri.r, R));
    const Intersection2D gamma = intersect_real_2x2(tri.p, dir(tri.p, P), tri.r, dir(tri.r, R));
    return {alpha.point, beta.point, gamma.point, alpha.u, beta.u, gamma.u};
}

double float_area_ratio(const FloatTriangle& tri, double t) {
    const FloatInner inner = float_inner_triangle(tri, t);
    const double inner_area = area_base_height(inner.alpha, inner.beta, inner.gamma);
    const double outer_area = area_base_height(tri.p, tri.q, tri.r);
    return std::fabs(inner_area / outer_area);
}

}  // namespace cevian
