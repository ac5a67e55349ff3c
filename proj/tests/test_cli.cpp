#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
    const std::string command = std::string(CEVIAN_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buf[512];
    while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) {
        result.output.append(buf, n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("ratio on the canonical builtin") {
    const CliResult r = run_cli("ratio --builtin canonical -t 1/3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("ratio=1/7\n") != std::string::npos);
    CHECK(r.output.find("ratio_decimal=0.142857142857\n") != std::string::npos);
    CHECK(r.output.find("extrapolated") == std::string::npos);
}

TEST_CASE("inner on the canonical builtin") {
    const CliResult r = run_cli("inner --builtin canonical -t 1/3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "alpha=1+2i beta=4+1i gamma=2+4i u=[3/7,3/7,6/7]\n");
}

TEST_CASE("area from a scene file") {
    const auto path = write_temp("cevian_cli_area.tri", "p=0+0i\nq=7+0i\nr=0+7i\nt=1/3\n");
    const CliResult r = run_cli("area " + path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output == "signed_area=49/2\narea=49/2\n");
    // clockwise scene: signed negative, absolute positive
    const auto cw = write_temp("cevian_cli_area_cw.tri", "p=0+0i\nq=0+7i\nr=7+0i\nt=1/3\n");
    const CliResult r2 = run_cli("area " + cw.string());
    CHECK(r2.exit_code == 0);
    CHECK(r2.output == "signed_area=-49/2\narea=49/2\n");
}

TEST_CASE("area from inline vertices") {
    const CliResult r = run_cli("area -p 0 -q 6 -r 1+5i");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "signed_area=15\narea=15\n");
}

TEST_CASE("collinear scene file fails with a positioned diagnostic and exit 2") {
    const auto path = write_temp("cevian_cli_collinear.tri", "p=0\nq=1\nr=2\nt=1/3\n");
    const CliResult r = run_cli("area " + path.string());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find(path.string() + ":3:1: ") != std::string::npos);
    CHECK(r.output.find("collinear") != std::string::npos);
}

TEST_CASE("parse diagnostics are forwarded verbatim with positions") {
    const auto path = write_temp("cevian_cli_zeroden.tri", "p=0\nq=7\nr=7i\nt=1/0\n");
    const CliResult r = run_cli("ratio " + path.string());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find(":4:3: ") != std::string::npos);
    CHECK(r.output.find("zero denominator") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("ratio").exit_code == 2);                       // no scene source
    CHECK(run_cli("ratio --builtin canonical --no-such").exit_code == 2);
    CHECK(run_cli("ratio --builtin nope -t 1/3").exit_code == 2);
    CHECK(run_cli("area -p 0 -q 6").exit_code == 2);              // incomplete inline scene
    CHECK(run_cli("ratio --builtin canonical -t 1/0").exit_code == 2);
    CHECK(run_cli("ratio --builtin canonical -t 3/2").exit_code == 2);  // needs opt-in
    CHECK(run_cli("sweep --from 1/2 --to 1/4 --steps 3").exit_code == 2);
    CHECK(run_cli("sweep --from 0 --to 1 --steps 0").exit_code == 2);
}

TEST_CASE("help exits 0") {
    const CliResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("sweep") != std::string::npos);
}

TEST_CASE("extrapolated ratio is marked") {
    const CliResult r = run_cli("ratio --builtin canonical -t 3/2 --allow-extrapolation");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("extrapolated=true\n") != std::string::npos);
}

TEST_CASE("t flag overrides the scene file value") {
    const auto path = write_temp("cevian_cli_override.tri", "p=0\nq=7\nr=7i\nt=1/3\n");
    const CliResult r = run_cli("ratio " + path.string() + " -t 1/2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("ratio=0\n") != std::string::npos);
}

TEST_CASE("sweep emits csv") {
    const CliResult r = run_cli("sweep --from 0 --to 1/2 --steps 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "t,ratio\n0,1\n1/4,4/13\n1/2,0\n");

    const CliResult with_decimal = run_cli("sweep --from 0 --to 1/2 --steps 2 --decimal");
    CHECK(with_decimal.exit_code == 0);
    CHECK(with_decimal.output ==
          "t,ratio,ratio_decimal\n0,1,1.00000000000\n1/4,4/13,0.307692307692\n1/2,0,0\n");

    const auto out = std::filesystem::temp_directory_path() / "cevian_cli_sweep.csv";
    std::filesystem::remove(out);
    const CliResult to_file = run_cli("sweep --from 0 --to 1 --steps 4 --out " + out.string());
    CHECK(to_file.exit_code == 0);
    std::ifstream in(out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "t,ratio");
}

TEST_CASE("verify passes and exits 0") {
    const CliResult r = run_cli("verify");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("symbolic/") != std::string::npos);
    CHECK(r.output.find("oracle/") != std::string::npos);
    CHECK(r.output.find("invariance/") != std::string::npos);
    CHECK(r.output.find("all ") != std::string::npos);

    const CliResult symbolic_only = run_cli("verify --symbolic");
    CHECK(symbolic_only.exit_code == 0);
    CHECK(symbolic_only.output.find("oracle/") == std::string::npos);
}

TEST_CASE("render writes a diagram") {
    const auto out = std::filesystem::temp_directory_path() / "cevian_cli_render.svg";
    std::filesystem::remove(out);
    const CliResult r =
        run_cli("render --builtin canonical -t 1/3 --out " + out.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(out, std::ios::binary);
    std::string first_line;
    std::getline(in, first_line);
    CHECK(first_line == "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");

    const CliResult to_stdout = run_cli("render --builtin skew -t 1/4");
    CHECK(to_stdout.exit_code == 0);
    CHECK(to_stdout.output.find("</svg>") != std::string::npos);
}
