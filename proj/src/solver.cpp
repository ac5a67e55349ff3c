#include "cevian/solver.hpp"

namespace cevian {

LineParametric::LineParametric(GaussianRational anchor, GaussianRational direction)
    : anchor_(std::move(anchor)), direction_(std::move(direction)) {
    if (direction_.is_zero()) {
        throw std::invalid_argument("LineParametric: zero direction");
    }
}

CevianParams conjugate_eliminate(const LineParametric& l0, const LineParametric& l1) {
    // Im(d0 * conj(d1)) is the cross product of the two directions.
    const Rational denom = (l0.direction() * conj(l1.direction())).im();
    if (denom.is_zero()) {
        throw DegenerateIntersection("conjugate_eliminate: parallel directions");
    }
    const GaussianRational delta = l1.anchor() - l0.anchor();
    CevianParams params{
        (delta * conj(l1.direction())).im() / denom,
        (delta * conj(l0.direction())).im() / denom,
    };
    if (l0.at(params.u) != l1.at(params.v)) {
        throw std::logic_error("conjugate_eliminate: substitution identity violated");
    }
    return params;
}

InnerSolution solve_inner(const Triangle& tri, const Rational& t) {
    const CevianFeet feet = cevian_feet(tri, t);
    const LineParametric to_P(tri.p(), feet.P - tri.p());
    const LineParametric to_Q(tri.q(), feet.Q - tri.q());
    const LineParametric to_R(tri.r(), feet.R - tri.r());

    InnerSolution out{feet, {}, {}, {}, {}};
    out.alpha_params = conjugate_eliminate(to_P, to_Q);
    out.beta_params = conjugate_eliminate(to_Q, to_R);
    out.gamma_params = conjugate_eliminate(to_P, to_R);
    out.points.alpha = to_P.at(out.alpha_params.u);
    out.points.beta = to_Q.at(out.beta_params.u);
    out.points.gamma = to_P.at(out.gamma_params.u);
    return out;
}

PointTriple inner_triangle(const Triangle& tri, const Rational& t) {
    return solve_inner(tri, t).points;
}

}  // namespace cevian
