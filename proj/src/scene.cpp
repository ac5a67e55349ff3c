#include "cevian/scene.hpp"

#include <algorithm>
#include <stdexcept>

namespace cevian {

namespace {

bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9') || c == '-';
}

struct KeyedValue {
    int line = 0;
    int value_column = 0;
    std::string value;
};

}  // namespace

ParseResult parse_scene(std::string_view text) {
    ParseResult result;
    auto diagnose = [&](int line, int column, std::string message) {
        result.diagnostics.push_back({line, column, std::move(message)});
    };

    std::map<std::string, KeyedValue> entries;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos < text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::size_t end = eol == std::string_view::npos ? text.size() : eol;
        std::string_view line = text.substr(pos, end - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::size_t col = 0;
        while (col < line.size() && (line[col] == ' ' || line[col] == '\t')) ++col;
        if (col == line.size()) continue;      // blank
        if (line[col] == '#') continue;        // comment

        if (!is_ident_start(line[col])) {
            diagnose(line_no, static_cast<int>(col) + 1, "expected a key");
            continue;
        }
        const std::size_t key_begin = col;
        while (col < line.size() && is_ident_char(line[col])) ++col;
        std::string key(line.substr(key_begin, col - key_begin));

        while (col < line.size() && (line[col] == ' ' || line[col] == '\t')) ++col;
        if (col == line.size() || line[col] != '=') {
            diagnose(line_no, static_cast<int>(col) + 1, "expected '=' after key '" + key + "'");
            continue;
        }
        const std::size_t eq_col = col;
        ++col;
        while (col < line.size() && (line[col] == ' ' || line[col] == '\t')) ++col;
        std::size_t value_end = line.size();
        while (value_end > col && (line[value_end - 1] == ' ' || line[value_end - 1] == '\t')) {
            --value_end;
        }
        std::string value(line.substr(col, value_end - col));
        if (value.empty()) {
            diagnose(line_no, static_cast<int>(eq_col) + 1, "missing value for key '" + key + "'");
            continue;
        }

        if (entries.contains(key)) {
            diagnose(line_no, static_cast<int>(key_begin) + 1, "duplicate key '" + key + "'");
            continue;
        }
        entries.emplace(key, KeyedValue{line_no, static_cast<int>(col) + 1, std::move(value)});
    }

    // Values that are present get parsed (and diagnosed) even when other
    // required keys are missing.
    for (const char* required : {"p", "q", "r", "t"}) {
        if (!entries.contains(required)) {
            diagnose(1, 1, std::string("missing required key '") + required + "'");
        }
    }

    auto parse_vertex = [&](const char* key, std::optional<GaussianRational>& out) {
        auto it = entries.find(key);
        if (it == entries.end()) return;
        const KeyedValue& kv = it->second;
        std::string why;
        out = GaussianRational::parse(kv.value, &why);
        if (!out) {
            diagnose(kv.line, kv.value_column,
                     std::string("invalid complex value for '") + key + "': " + why);
        }
    };
    std::optional<GaussianRational> p, q, r;
    parse_vertex("p", p);
    parse_vertex("q", q);
    parse_vertex("r", r);

    std::optional<Rational> t;
    if (auto it = entries.find("t"); it != entries.end()) {
        std::string t_why;
        t = Rational::parse(it->second.value, &t_why);
        if (!t) {
            diagnose(it->second.line, it->second.value_column,
                     "invalid rational value for 't': " + t_why);
        }
    }

    std::map<std::string, std::string> options;
    for (const auto& [key, kv] : entries) {
        if (key == "p" || key == "q" || key == "r" || key == "t") continue;
        options.emplace(key, kv.value);
    }

    if (t && !options.contains("allow-extrapolation") &&
        (*t < Rational(0) || *t > Rational(1))) {
        const KeyedValue& kv = entries.at("t");
        diagnose(kv.line, kv.value_column,
                 "t=" + t->to_string() + " is outside [0, 1] (set allow-extrapolation to permit)");
    }

    if (!result.diagnostics.empty()) return result;

    try {
        Triangle triangle(*p, *q, *r);
        result.scene = SceneSpec{std::move(triangle), std::move(*t), std::move(options)};
    } catch (const std::invalid_argument&) {
        const int line = std::max({entries.at("p").line, entries.at("q").line, entries.at("r").line});
        diagnose(line, 1,
                 "vertices are collinear: p=" + p->to_string() + ", q=" + q->to_string() +
                     ", r=" + r->to_string());
    }
    return result;
}

std::string format_scene(const SceneSpec& spec) {
    std::string out;
    out += "p=" + spec.triangle.p().to_string() + "\n";
    out += "q=" + spec.triangle.q().to_string() + "\n";
    out += "r=" + spec.triangle.r().to_string() + "\n";
    out += "t=" + spec.t.to_string() + "\n";
    for (const auto& [key, value] : spec.options) {
        out += key + "=" + value + "\n";
    }
    return out;
}

}  // namespace cevian
