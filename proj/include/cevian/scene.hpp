#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cevian/triangle.hpp"

namespace cevian {

// A parsed scene: the triangle, the cevian fraction, and free-form string
// options (render size, labels, extrapolation opt-in).
struct SceneSpec {
    Triangle triangle;
    Rational t;
    std::map<std::string, std::string> options;

    bool allows_extrapolation() const { return options.contains("allow-extrapolation"); }

    friend bool operator==(const SceneSpec& a, const SceneSpec& b) = default;
};

struct ParseDiagnostic {
    int line = 1;    // 1-based
    int column = 1;  // 1-based
    std::string message;
};

struct ParseResult {
    std::optional<SceneSpec> scene;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return scene.has_value(); }
};

// Line-oriented key=value format:
//
//   p=0+0i        # required: triangle vertices (complex literals)
//   q=7+0i
//   r=0+7i
//   t=1/3         # required: cevian fraction (rational literal)
//   labels=off    # anything else is a string option
//
// '#' starts a comment line, blank lines are skipped, LF and CRLF both
// accepted. Duplicate keys are errors; t must lie in [0, 1] unless the
// allow-extrapolation option is present; the vertices must not be collinear.
// Never throws: every rejection is a positioned diagnostic.
ParseResult parse_scene(std::string_view text);

// Canonical rendering: p, q, r, t then options in key order, LF endings.
// parse_scene(format_scene(s)) reproduces s exactly.
std::string format_scene(const SceneSpec& spec);

}  // namespace cevian
