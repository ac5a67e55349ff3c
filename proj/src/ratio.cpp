#include "cevian/ratio.hpp"

#include <stdexcept>

namespace cevian {

Rational area_ratio(const Triangle& tri, const Rational& t) {
    const PointTriple inner = inner_triangle(tri, t);
    const Rational inner_area = signed_area(inner.alpha, inner.beta, inner.gamma);
    return (inner_area / signed_area(tri)).abs();
}

Triangle reference_triangle() {
    return {GaussianRational(0, 0), GaussianRational(7, 0), GaussianRational(0, 7)};
}

Triangle skew_reference_triangle() {
    return {GaussianRational(0, 0), GaussianRational(6, 0), GaussianRational(1, 5)};
}

std::vector<RatioRecord> ratio_sweep(const Rational& t_min, const Rational& t_max, int steps) {
    if (t_min >= t_max) throw std::invalid_argument("ratio_sweep: empty range");
    if (steps < 1) throw std::invalid_argument("ratio_sweep: steps must be >= 1");
    const Triangle ref = reference_triangle();
    const Rational width = t_max - t_min;
    std::vector<RatioRecord> out;
    out.reserve(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i) {
        const Rational t = t_min + width * Rational(i, steps);
        out.push_back({t, area_ratio(ref, t)});
    }
    return out;
}

std::string sweep_to_csv(const std::vector<RatioRecord>& records, bool with_decimal) {
    std::string out = with_decimal ? "t,ratio,ratio_decimal\n" : "t,ratio\n";
    for (const RatioRecord& rec : records) {
        out += rec.t.to_string();
        out += ',';
        out += rec.ratio.to_string();
        if (with_decimal) {
            out += ',';
            out += rec.ratio.to_decimal(12);
        }
        out += '\n';
    }
    return out;
}

bool InvarianceReport::all_pass() const {
    for (const InvarianceFinding& f : findings) {
        if (!f.pass) return false;
    }
    return true;
}

std::string InvarianceReport::to_text() const {
    std::string out;
    for (const InvarianceFinding& f : findings) {
        out += f.name;
        out += f.pass ? ": PASS\n" : ": FAIL\n";
    }
    return out;
}

namespace {

PointTriple map_points(const PointTriple& pts, const GaussianRational& w, bool rotate_by) {
    if (rotate_by) {
        return {pts.alpha * w, pts.beta * w, pts.gamma * w};
    }
    return {pts.alpha + w, pts.beta + w, pts.gamma + w};
}

}  // namespace

InvarianceReport invariance_check(const Triangle& tri, const Rational& t,
                                  const GaussianRational& w, const Rational& s) {
    const GaussianRational unit = pythagorean_unit(s);
    const Triangle shifted = translate(tri, w);
    const Triangle turned = rotate(tri, unit);

    const Rational area = signed_area(tri);
    const Rational ratio = area_ratio(tri, t);
    const PointTriple inner = inner_triangle(tri, t);

    InvarianceReport report;
    report.findings = {
        {"signed area preserved by translation", signed_area(shifted) == area},
        {"signed area preserved by rotation", signed_area(turned) == area},
        {"area ratio preserved by translation", area_ratio(shifted, t) == ratio},
        {"area ratio preserved by rotation", area_ratio(turned, t) == ratio},
        {"inner vertices covariant under translation",
         inner_triangle(shifted, t) == map_points(inner, w, false)},
        {"inner vertices covariant under rotation",
         inner_triangle(turned, t) == map_points(inner, unit, true)},
    };
    return report;
}

}  // namespace cevian
