#pragma once

#include <string>
#include <vector>

#include "cevian/solver.hpp"

namespace cevian {

// |area(inner)| / |area(outer)| at cevian fraction t; the value depends only
// on t, never on the triangle.
Rational area_ratio(const Triangle& tri, const Rational& t);

struct RatioRecord {
    Rational t;
    Rational ratio;

    friend bool operator==(const RatioRecord& a, const RatioRecord& b) = default;
};

// steps+1 evenly spaced t values over [t_min, t_max], endpoints included,
// each with its exact ratio evaluated on a fixed reference triangle. Throws
// std::invalid_argument unless t_min < t_max and steps >= 1.
std::vector<RatioRecord> ratio_sweep(const Rational& t_min, const Rational& t_max, int steps);

// CSV with header "t,ratio" (plus "ratio_decimal" rounded to 12 significant
// digits when requested); exact textual rational values, LF line endings.
std::string sweep_to_csv(const std::vector<RatioRecord>& records, bool with_decimal);

// The fixed sweep reference (0, 7, 7i) and a structurally different second
// reference (0, 6, 1+5i) for triangle-independence checks.
Triangle reference_triangle();
Triangle skew_reference_triangle();

struct InvarianceFinding {
    std::string name;
    bool pass = false;
};

struct InvarianceReport {
    std::vector<InvarianceFinding> findings;

    bool all_pass() const;
    std::string to_text() const;
};

// Exact-equality audit of translation by w and rotation by pythagorean_unit(s):
// signed area, area ratio, and covariant transport of the inner vertices.
// Failures are findings in the report, never exceptions.
InvarianceReport invariance_check(const Triangle& tri, const Rational& t,
                                  const GaussianRational& w, const Rational& s);

}  // namespace cevian
