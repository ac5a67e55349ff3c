#pragma once

#include <stdexcept>

#include "cevian/triangle.hpp"

namespace cevian {

struct DegenerateIntersection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Infinite line anchor + t*direction; direction must be nonzero.
class LineParametric {
  public:
    // Throws std::invalid_argument on a zero direction.
    LineParametric(GaussianRational anchor, GaussianRational direction);

    const GaussianRational& anchor() const { return anchor_; }
    const GaussianRational& direction() const { return direction_; }

    GaussianRational at(const Rational& t) const { return anchor_ + t * direction_; }

  private:
    GaussianRational anchor_;
    GaussianRational direction_;
};

// Line parameters of one intersection: anchor0 + u*dir0 = anchor1 + v*dir1.
struct CevianParams {
    Rational u;
    Rational v;
};

// Solves two parametric complex lines for their crossing by multiplying
// through by direction conjugates and equating imaginary parts, which drops
// one real unknown per equation. Both parameters are computed and the
// substitution identity is re-checked before returning. Throws
// DegenerateIntersection when the directions are parallel.
CevianParams conjugate_eliminate(const LineParametric& l0, const LineParametric& l1);

// Full cevian-crossing solve: the feet, the three inner vertices, and the
// line parameters that produced each vertex (alpha from p->P x q->Q, beta
// from q->Q x r->R, gamma from p->P x r->R).
struct InnerSolution {
    CevianFeet feet;
    PointTriple points;
    CevianParams alpha_params;
    CevianParams beta_params;
    CevianParams gamma_params;
};

InnerSolution solve_inner(const Triangle& tri, const Rational& t);

PointTriple inner_triangle(const Triangle& tri, const Rational& t);

}  // namespace cevian
