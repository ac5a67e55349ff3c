#include "cevian/svg.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cevian {

namespace {

int option_int(const SceneSpec& spec, const std::string& key, int fallback) {
    auto it = spec.options.find(key);
    if (it == spec.options.end()) return fallback;
    const std::string& v = it->second;
    if (v.empty() || v.size() > 5) {
        throw std::invalid_argument("render option '" + key + "' must be a positive integer");
    }
    int out = 0;
    for (char c : v) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("render option '" + key + "' must be a positive integer");
        }
        out = out * 10 + (c - '0');
    }
    if (out <= 0) {
        throw std::invalid_argument("render option '" + key + "' must be a positive integer");
    }
    return out;
}

std::string fmt(const Rational& v) { return v.to_fixed(6); }

void append_line(std::string& out, const RenderPlan& plan, const GaussianRational& from,
                 const GaussianRational& to) {
    auto [x1, y1] = plan.to_screen(from);
    auto [x2, y2] = plan.to_screen(to);
    out += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
           "\" y2=\"" + fmt(y2) + "\"/>\n";
}

void append_label(std::string& out, const RenderPlan& plan, const GaussianRational& at,
                  const std::string& name) {
    auto [x, y] = plan.to_screen(at);
    out += "<text x=\"" + fmt(x + Rational(6)) + "\" y=\"" + fmt(y - Rational(6)) + "\">" +
           name + "</text>\n";
}

}  // namespace

std::pair<Rational, Rational> RenderPlan::to_screen(const GaussianRational& world) const {
    return {offset_x + scale * (world.re() - min_x), offset_y + scale * (max_y - world.im())};
}

RenderPlan build_render_plan(const SceneSpec& spec, const CevianFeet& feet,
                             const PointTriple& inner) {
    RenderPlan plan;
    plan.width = option_int(spec, "width", plan.width);
    plan.height = option_int(spec, "height", plan.height);
    plan.margin = option_int(spec, "margin", plan.margin);
    auto labels_it = spec.options.find("labels");
    if (labels_it != spec.options.end()) {
        if (labels_it->second != "on" && labels_it->second != "off") {
            throw std::invalid_argument("render option 'labels' must be on or off");
        }
        plan.labels = labels_it->second == "on";
    }
    const int avail_w = plan.width - 2 * plan.margin;
    const int avail_h = plan.height - 2 * plan.margin;
    if (avail_w <= 0 || avail_h <= 0) {
        throw std::invalid_argument("render viewport is smaller than twice its margin");
    }

    const std::array<const GaussianRational*, 9> pts = {
        &spec.triangle.p(), &spec.triangle.q(), &spec.triangle.r(),
        &feet.P, &feet.Q, &feet.R,
        &inner.alpha, &inner.beta, &inner.gamma,
    };
    Rational min_x = pts[0]->re(), max_x = pts[0]->re();
    Rational min_y = pts[0]->im(), max_y = pts[0]->im();
    for (const GaussianRational* pt : pts) {
        min_x = std::min(min_x, pt->re());
        max_x = std::max(max_x, pt->re());
        min_y = std::min(min_y, pt->im());
        max_y = std::max(max_y, pt->im());
    }
    const Rational box_w = max_x - min_x;
    const Rational box_h = max_y - min_y;
    // Non-collinear vertices guarantee spread along both axes.
    plan.scale = std::min(Rational(avail_w) / box_w, Rational(avail_h) / box_h);
    plan.min_x = min_x;
    plan.max_y = max_y;
    const Rational two(2);
    plan.offset_x = Rational(plan.margin) + (Rational(avail_w) - plan.scale * box_w) / two;
    plan.offset_y = Rational(plan.margin) + (Rational(avail_h) - plan.scale * box_h) / two;
    return plan;
}

std::string render_svg(const SceneSpec& spec, const CevianFeet& feet, const PointTriple& inner) {
    const RenderPlan plan = build_render_plan(spec, feet, inner);
    const Triangle& tri = spec.triangle;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(plan.width) +
           "\" height=\"" + std::to_string(plan.height) + "\" viewBox=\"0 0 " +
           std::to_string(plan.width) + " " + std::to_string(plan.height) + "\">\n";

    out += "<g stroke=\"#202020\" stroke-width=\"2\" fill=\"none\">\n";
    append_line(out, plan, tri.p(), tri.q());
    append_line(out, plan, tri.q(), tri.r());
    append_line(out, plan, tri.r(), tri.p());
    out += "</g>\n";

    out += "<g stroke=\"#7a7a7a\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\" fill=\"none\">\n";
    append_line(out, plan, tri.p(), feet.P);
    append_line(out, plan, tri.q(), feet.Q);
    append_line(out, plan, tri.r(), feet.R);
    out += "</g>\n";

    const bool coincident = inner.alpha == inner.beta && inner.beta == inner.gamma;
    const bool degenerate = signed_area(inner.alpha, inner.beta, inner.gamma).is_zero();
    if (!degenerate) {
        auto [x1, y1] = plan.to_screen(inner.alpha);
        auto [x2, y2] = plan.to_screen(inner.beta);
        auto [x3, y3] = plan.to_screen(inner.gamma);
        out += "<polygon points=\"" + fmt(x1) + "," + fmt(y1) + " " + fmt(x2) + "," + fmt(y2) +
               " " + fmt(x3) + "," + fmt(y3) +
               "\" fill=\"#4477aa\" fill-opacity=\"0.45\" stroke=\"#335588\" stroke-width=\"1.5\"/>\n";
    } else if (coincident) {
        auto [cx, cy] = plan.to_screen(inner.alpha);
        out += "<circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) +
               "\" r=\"4\" fill=\"#335588\"/>\n";
    }

    if (plan.labels) {
        out += "<g font-family=\"monospace\" font-size=\"16\" fill=\"#101010\">\n";
        append_label(out, plan, tri.p(), "p");
        append_label(out, plan, tri.q(), "q");
        append_label(out, plan, tri.r(), "r");
        append_label(out, plan, feet.P, "P");
        append_label(out, plan, feet.Q, "Q");
        append_label(out, plan, feet.R, "R");
        if (!degenerate) {
            append_label(out, plan, inner.alpha, "\xCE\xB1");
            append_label(out, plan, inner.beta, "\xCE\xB2");
            append_label(out, plan, inner.gamma, "\xCE\xB3");
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace cevian
