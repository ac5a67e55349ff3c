// cevian -- exact cevian-triangle calculator and diagram generator.
//
// Verbs: area, inner, ratio, sweep, verify, render. Exit codes: 0 success,
// 1 verification failure, 2 usage or parse error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cevian/oracle.hpp"
#include "cevian/polynomial.hpp"
#include "cevian/ratio.hpp"
#include "cevian/sampling.hpp"
#include "cevian/scene.hpp"
#include "cevian/solver.hpp"
#include "cevian/svg.hpp"

namespace {

using namespace cevian;

struct UsageError {
    std::string message;
};

struct SceneArgs {
    std::string file;
    std::string builtin;
    std::string p, q, r;
    std::string t;
    bool allow_extrapolation = false;
};

void add_scene_options(CLI::App* cmd, SceneArgs& args) {
    cmd->add_option("scene", args.file, "Scene file (*.tri)");
    cmd->add_option("--builtin", args.builtin, "Builtin scene: canonical or skew");
    cmd->add_option("-p", args.p, "Vertex p as a complex literal, e.g. 0+0i");
    cmd->add_option("-q", args.q, "Vertex q as a complex literal");
    cmd->add_option("-r", args.r, "Vertex r as a complex literal");
    cmd->add_option("-t", args.t, "Cevian fraction as a rational literal, e.g. 1/3");
    cmd->add_flag("--allow-extrapolation", args.allow_extrapolation,
                  "Accept t outside [0, 1]");
}

GaussianRational parse_vertex_flag(const std::string& flag, const std::string& text) {
    std::string why;
    auto value = GaussianRational::parse(text, &why);
    if (!value) throw UsageError{"invalid value for " + flag + " '" + text + "': " + why};
    return *value;
}

Rational parse_t_flag(const std::string& text) {
    std::string why;
    auto value = Rational::parse(text, &why);
    if (!value) throw UsageError{"invalid value for -t '" + text + "': " + why};
    return *value;
}

SceneSpec load_scene_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) throw UsageError{"cannot open scene file '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    const ParseResult result = parse_scene(buf.str());
    if (!result.ok()) {
        for (const ParseDiagnostic& d : result.diagnostics) {
            std::cerr << path << ":" << d.line << ":" << d.column << ": " << d.message << "\n";
        }
        throw UsageError{""};  // diagnostics already printed
    }
    return *result.scene;
}

SceneSpec resolve_scene(const SceneArgs& args) {
    const bool inline_vertices = !args.p.empty() || !args.q.empty() || !args.r.empty();
    const int sources = (!args.file.empty() ? 1 : 0) + (!args.builtin.empty() ? 1 : 0) +
                        (inline_vertices ? 1 : 0);
    if (sources != 1) {
        throw UsageError{
            "exactly one scene source is required: a scene file, --builtin, or -p/-q/-r"};
    }

    std::optional<SceneSpec> scene;
    if (!args.file.empty()) {
        scene = load_scene_file(args.file);
    } else {
        Triangle tri = [&]() -> Triangle {
            if (!args.builtin.empty()) {
                if (args.builtin == "canonical") return reference_triangle();
                if (args.builtin == "skew") return skew_reference_triangle();
                throw UsageError{"unknown builtin scene '" + args.builtin +
                                 "' (expected canonical or skew)"};
            }
            if (args.p.empty() || args.q.empty() || args.r.empty()) {
                throw UsageError{"inline scenes need all of -p, -q, -r"};
            }
            try {
                return {parse_vertex_flag("-p", args.p), parse_vertex_flag("-q", args.q),
                        parse_vertex_flag("-r", args.r)};
            } catch (const std::invalid_argument&) {
                throw UsageError{"vertices are collinear: p=" + args.p + ", q=" + args.q +
                                 ", r=" + args.r};
            }
        }();
        scene = SceneSpec{std::move(tri), Rational(1, 3), {}};
    }

    if (!args.t.empty()) scene->t = parse_t_flag(args.t);
    if (args.allow_extrapolation) scene->options["allow-extrapolation"] = "true";
    if (!scene->allows_extrapolation() && (scene->t < Rational(0) || scene->t > Rational(1))) {
        throw UsageError{"t=" + scene->t.to_string() +
                         " is outside [0, 1]; pass --allow-extrapolation to permit"};
    }
    return *scene;
}

bool is_extrapolated(const SceneSpec& scene) {
    return scene.t < Rational(0) || scene.t > Rational(1);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out.good()) throw UsageError{"cannot write to '" + path + "'"};
    out << content;
}

int run_area(const SceneSpec& scene) {
    const Rational area = signed_area(scene.triangle);
    std::cout << "signed_area=" << area.to_string() << "\n";
    std::cout << "area=" << area.abs().to_string() << "\n";
    return 0;
}

int run_inner(const SceneSpec& scene) {
    const InnerSolution sol = solve_inner(scene.triangle, scene.t);
    std::cout << "alpha=" << sol.points.alpha.to_string()
              << " beta=" << sol.points.beta.to_string()
              << " gamma=" << sol.points.gamma.to_string() << " u=["
              << sol.alpha_params.u.to_string() << "," << sol.beta_params.u.to_string() << ","
              << sol.gamma_params.u.to_string() << "]\n";
    return 0;
}

int run_ratio(const SceneSpec& scene) {
    const Rational ratio = area_ratio(scene.triangle, scene.t);
    std::cout << "ratio=" << ratio.to_string() << "\n";
    std::cout << "ratio_decimal=" << ratio.to_decimal(12) << "\n";
    if (is_extrapolated(scene)) std::cout << "extrapolated=true\n";
    return 0;
}

int run_sweep(const std::string& from, const std::string& to, int steps, bool decimal,
              bool allow_extrapolation, const std::string& out_path) {
    std::string why;
    auto t_min = Rational::parse(from, &why);
    if (!t_min) throw UsageError{"invalid value for --from '" + from + "': " + why};
    auto t_max = Rational::parse(to, &why);
    if (!t_max) throw UsageError{"invalid value for --to '" + to + "': " + why};
    if (*t_min < Rational(0) || *t_max > Rational(1)) {
        if (!allow_extrapolation) {
            throw UsageError{"sweep range extends outside [0, 1]; pass --allow-extrapolation"};
        }
        std::cerr << "note: sweep range extends outside [0, 1]; those ratios are extrapolated\n";
    }
    std::vector<RatioRecord> records;
    try {
        records = ratio_sweep(*t_min, *t_max, steps);
    } catch (const std::invalid_argument& e) {
        throw UsageError{e.what()};
    }
    write_output(out_path, sweep_to_csv(records, decimal));
    return 0;
}

int run_render(const SceneSpec& scene, const std::string& out_path) {
    const InnerSolution sol = solve_inner(scene.triangle, scene.t);
    std::string svg;
    try {
        svg = render_svg(scene, sol.feet, sol.points);
    } catch (const std::invalid_argument& e) {
        throw UsageError{e.what()};
    }
    write_output(out_path, svg);
    return 0;
}

// --- verify campaigns ------------------------------------------------------

struct CheckLine {
    std::string name;
    bool pass = false;
};

void report(std::vector<CheckLine>& lines, std::string name, bool pass) {
    std::cout << name << ": " << (pass ? "PASS" : "FAIL") << "\n";
    lines.push_back({std::move(name), pass});
}

void verify_symbolic(std::vector<CheckLine>& lines) {
    for (const IdentityReport& report_data : {verify_collinearity(), verify_one_seventh()}) {
        for (const IdentityFinding& f : report_data.findings) {
            report(lines, "symbolic/" + f.name + " (residual=" + f.residual.to_string() + ")",
                   f.pass);
        }
    }
}

void verify_oracle(std::vector<CheckLine>& lines) {
    Sampler sampler(0xce71a);
    const int rounds = 200;
    bool area_ok = true, inner_ok = true, height_ok = true, placement_ok = true, params_ok = true;
    for (int i = 0; i < rounds; ++i) {
        const Triangle tri = sampler.triangle();
        const FloatTriangle f = to_float(tri);

        const double exact_area = signed_area(tri).to_double();
        const double float_area = area_base_height(f.p, f.q, f.r);
        area_ok = area_ok && std::fabs(float_area - exact_area) <= 1e-9 * std::fabs(exact_area);

        const InnerSolution exact = solve_inner(tri, Rational(1, 3));
        const FloatInner approx = float_inner_triangle(f, 1.0 / 3.0);
        auto close = [](double got, const Rational& want) {
            return std::fabs(got - want.to_double()) <= 1e-9;
        };
        inner_ok = inner_ok && close(approx.alpha.x, exact.points.alpha.re()) &&
                   close(approx.alpha.y, exact.points.alpha.im()) &&
                   close(approx.beta.x, exact.points.beta.re()) &&
                   close(approx.beta.y, exact.points.beta.im()) &&
                   close(approx.gamma.x, exact.points.gamma.re()) &&
                   close(approx.gamma.y, exact.points.gamma.im());
        params_ok = params_ok && close(approx.u_alpha, exact.alpha_params.u) &&
                    close(approx.u_beta, exact.beta_params.u) &&
                    close(approx.u_gamma, exact.gamma_params.u);

        const FloatTriangle ccw = signed_area(tri).sign() < 0 ? FloatTriangle{f.p, f.r, f.q} : f;
        const HeightComputation hc = height(ccw.p, ccw.q, ccw.r);
        const double via_angle =
            std::hypot(ccw.r.x - ccw.p.x, ccw.r.y - ccw.p.y) * std::sin(hc.theta);
        height_ok = height_ok && std::fabs(hc.h - via_angle) <= 1e-12 * std::fabs(hc.h);

        const FloatTriangle placed = canonical_placement(f);
        const double placed_area = area_base_height(placed.p, placed.q, placed.r);
        placement_ok =
            placement_ok && std::fabs(placed_area - float_area) <= 1e-12 * std::fabs(float_area);
    }
    report(lines, "oracle/base-height area matches exact determinant (200 triangles, 1e-9 rel)",
           area_ok);
    report(lines, "oracle/2x2 inner vertices match exact solver (200 triangles, 1e-9 abs)",
           inner_ok);
    report(lines, "oracle/2x2 line parameters match exact solver (200 triangles, 1e-9 abs)",
           params_ok);
    report(lines, "oracle/dual-path height self-check (200 triangles, 1e-12 rel)", height_ok);
    report(lines, "oracle/canonical placement preserves area (200 triangles, 1e-12 rel)",
           placement_ok);
}

void verify_invariance(std::vector<CheckLine>& lines) {
    Sampler sampler(0x1457);
    const Rational ts[] = {Rational(1, 3), Rational(1, 4), Rational(2, 5), Rational(7, 10)};
    bool transforms_ok = true;
    bool seventh_ok = true;
    for (int i = 0; i < 50; ++i) {
        const Triangle tri = sampler.triangle();
        const GaussianRational w = sampler.point();
        const Rational s = sampler.rational();
        transforms_ok =
            transforms_ok && invariance_check(tri, ts[i % 4], w, s).all_pass();
        seventh_ok = seventh_ok && area_ratio(tri, Rational(1, 3)) == Rational(1, 7);
    }
    report(lines, "invariance/translation and rotation cases, exact (50 random draws)",
           transforms_ok);
    report(lines, "invariance/area ratio is exactly 1/7 at t=1/3 (50 random triangles)",
           seventh_ok);
}

// Scene and diagram checks run when every suite is enabled, so the full
// `verify` pass touches each stage of the pipeline.
void verify_pipeline(std::vector<CheckLine>& lines) {
    Sampler sampler(0x5ce9e);
    bool round_trips = true;
    for (int i = 0; i < 100; ++i) {
        Rational t = sampler.rational(40).abs();
        if (t > Rational(1)) t = t.reciprocal();
        const SceneSpec spec{sampler.triangle(), t, {}};
        const ParseResult reparsed = parse_scene(format_scene(spec));
        round_trips = round_trips && reparsed.ok() && *reparsed.scene == spec;
    }
    report(lines, "pipeline/scene format-parse round-trip, exact (100 random scenes)",
           round_trips);

    const SceneSpec scene{reference_triangle(), Rational(1, 3), {}};
    const InnerSolution sol = solve_inner(scene.triangle, scene.t);
    const std::string first = render_svg(scene, sol.feet, sol.points);
    const std::string second = render_svg(scene, sol.feet, sol.points);
    report(lines, "pipeline/render output is byte-deterministic",
           !first.empty() && first == second);
}

int run_verify(bool symbolic, bool oracle, bool invariance) {
    if (!symbolic && !oracle && !invariance) {
        symbolic = oracle = invariance = true;
    }
    std::vector<CheckLine> lines;
    if (symbolic) verify_symbolic(lines);
    if (oracle) verify_oracle(lines);
    if (invariance) verify_invariance(lines);
    if (symbolic && oracle && invariance) verify_pipeline(lines);
    int failures = 0;
    for (const CheckLine& line : lines) {
        if (!line.pass) ++failures;
    }
    if (failures == 0) {
        std::cout << "all " << lines.size() << " checks passed\n";
        return 0;
    }
    std::cout << failures << " of " << lines.size() << " checks failed\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cevian-triangle areas, ratios, proofs, and diagrams"};
    app.require_subcommand(1);

    SceneArgs area_args, inner_args, ratio_args, render_args;
    CLI::App* area_cmd = app.add_subcommand("area", "Exact signed and absolute triangle area");
    add_scene_options(area_cmd, area_args);
    CLI::App* inner_cmd =
        app.add_subcommand("inner", "Inner triangle vertices and line parameters");
    add_scene_options(inner_cmd, inner_args);
    CLI::App* ratio_cmd = app.add_subcommand("ratio", "Exact inner-to-outer area ratio");
    add_scene_options(ratio_cmd, ratio_args);

    std::string sweep_from, sweep_to, sweep_out;
    int sweep_steps = 0;
    bool sweep_decimal = false, sweep_extrapolate = false;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "CSV of the ratio over a range of t");
    sweep_cmd->add_option("--from", sweep_from, "Start of the t range (rational)")->required();
    sweep_cmd->add_option("--to", sweep_to, "End of the t range (rational)")->required();
    sweep_cmd->add_option("--steps", sweep_steps, "Number of grid intervals")->required();
    sweep_cmd->add_flag("--decimal", sweep_decimal, "Add a ratio_decimal column");
    sweep_cmd->add_flag("--allow-extrapolation", sweep_extrapolate,
                        "Accept ranges outside [0, 1]");
    sweep_cmd->add_option("--out", sweep_out, "Write CSV to a file instead of stdout");

    bool verify_symbolic_flag = false, verify_oracle_flag = false, verify_invariance_flag = false;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    verify_cmd->add_flag("--symbolic", verify_symbolic_flag, "Polynomial identity proofs");
    verify_cmd->add_flag("--oracle", verify_oracle_flag, "Floating-point cross-checks");
    verify_cmd->add_flag("--invariance", verify_invariance_flag, "Transform invariance checks");

    CLI::App* render_cmd = app.add_subcommand("render", "SVG diagram of a scene");
    add_scene_options(render_cmd, render_args);
    std::string render_out;
    render_cmd->add_option("--out", render_out, "Write SVG to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (area_cmd->parsed()) return run_area(resolve_scene(area_args));
        if (inner_cmd->parsed()) return run_inner(resolve_scene(inner_args));
        if (ratio_cmd->parsed()) return run_ratio(resolve_scene(ratio_args));
        if (sweep_cmd->parsed()) {
            return run_sweep(sweep_from, sweep_to, sweep_steps, sweep_decimal, sweep_extrapolate,
                             sweep_out);
        }
        if (verify_cmd->parsed()) {
            return run_verify(verify_symbolic_flag, verify_oracle_flag, verify_invariance_flag);
        }
        if (render_cmd->parsed()) return run_render(resolve_scene(render_args), render_out);
    } catch (const UsageError& e) {
        if (!e.message.empty()) std::cerr << "error: " << e.message << "\n";
        return 2;
    } catch (const DegenerateIntersection& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
