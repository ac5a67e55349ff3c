#pragma once

#include <string>
#include <utility>

#include "cevian/scene.hpp"
#include "cevian/triangle.hpp"

namespace cevian {

// Viewport geometry for one diagram. The world-to-screen map is a uniform
// scale plus translation with the y axis flipped, chosen so that every drawn
// point lands inside the viewport minus the margin. Screen coordinates stay
// rational until the final fixed-point print, so output bytes are identical
// across platforms.
struct RenderPlan {
    int width = 800;
    int height = 600;
    int margin = 40;
    bool labels = true;

    Rational scale;
    Rational min_x;
    Rational max_y;
    Rational offset_x;  // screen x of world min_x
    Rational offset_y;  // screen y of world max_y

    std::pair<Rational, Rational> to_screen(const GaussianRational& world) const;
};

// Computes the plan for a scene; honors the width/height/margin/labels
// options. Throws std::invalid_argument on malformed option values or a
// viewport too small for its margin.
RenderPlan build_render_plan(const SceneSpec& spec, const CevianFeet& feet,
                             const PointTriple& inner);

// SVG 1.1 diagram: three outer edges, three cevians, the shaded inner
// triangle (replaced by a centroid dot when the inner vertices coincide, or
// omitted when they are collinear), and optional labels. Coordinates are
// printed with exactly six fractional digits, round half to even, so equal
// scenes produce byte-identical output.
std::string render_svg(const SceneSpec& spec, const CevianFeet& feet, const PointTriple& inner);

}  // namespace cevian
