#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "umbral/curve.hpp"
#include "umbral/delta_op.hpp"
#include "umbral/json_io.hpp"

using nlohmann::json;
using namespace umbral;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(UMBRAL_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.stdout_text.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("binomial subcommand emits the curve") {
    const RunResult r = run_cli("binomial --op forward_difference --level 3");
    CHECK(r.exit_code == 0);
    const Curve curve = curve_from_json(json::parse(r.stdout_text));
    CHECK(curve == binomial_curve(DeltaOp::forward_difference(3)));
}

TEST_CASE("emitted JSON round-trips as input") {
    const RunResult curve_out = run_cli("binomial --op touchard --level 3");
    REQUIRE(curve_out.exit_code == 0);
    // feed the emitted curve back through the wronskian consumer
    const std::string quoted = "'" + json::parse(curve_out.stdout_text).dump() + "'";
    const RunResult w = run_cli("wronskian --op touchard --level 3 --curve " + quoted);
    CHECK(w.exit_code == 0);
    const WronskianForm form = wronskian_from_json(json::parse(w.stdout_text));
    CHECK(form.level == 3);
}

TEST_CASE("deviation --method all agrees across routes") {
    const RunResult r =
        run_cli("deviation --op forward_difference --level 2 --method all");
    REQUIRE(r.exit_code == 0);
    const json out = json::parse(r.stdout_text);
    REQUIRE(out.is_array());
    REQUIRE(out.size() == 3);
    for (const auto& item : out) {
        CHECK(poly_from_json(item) ==
              Poly({Rational(1, 2), Rational(1), Rational(1)}));
    }
    CHECK(out[0]["method"] == "solve");
    CHECK(out[1]["method"] == "appell");
    CHECK(out[2]["method"] == "closed_delta");
}

TEST_CASE("table and json outputs carry the same numbers") {
    const RunResult j =
        run_cli("deviation --op forward_difference --level 2 --method solve");
    const RunResult t = run_cli(
        "deviation --op forward_difference --level 2 --method solve --output table");
    CHECK(j.exit_code == 0);
    CHECK(t.exit_code == 0);
    CHECK(poly_from_json(json::parse(j.stdout_text)).str() == "t^2 + t + 1/2");
    CHECK(t.stdout_text.find("t^2 + t + 1/2") != std::string::npos);
}

TEST_CASE("verify walsh runs and reports") {
    const RunResult r =
        run_cli("verify walsh --level 3 --trials 25 --seed 42 --tol 1e-7");
    CHECK(r.exit_code == 0);
    const json report = json::parse(r.stdout_text);
    CHECK(report["trials"] == 25);
    CHECK(report["violations"] == 0);
    CHECK(report["seed"] == 42);
}

TEST_CASE("verify grace on an explicit apolar pair") {
    const RunResult r = run_cli(
        R"(verify grace --level 2 --poly '{"coeffs":["-1","1","1"]}' )"
        R"(--poly2 '{"coeffs":["0","0","1"]}')");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.stdout_text)["violations"] == 0);
}

TEST_CASE("operators from a coefficient file") {
    const std::string path = "/tmp/umbral_test_op.json";
    {
        std::FILE* f = std::fopen(path.c_str(), "w");
        REQUIRE(f != nullptr);
        std::fputs(R"({"level": 2, "coeffs": ["1", "1/2"]})", f);
        std::fclose(f);
    }
    const RunResult r = run_cli("binomial --op-file " + path);
    CHECK(r.exit_code == 0);
    const Curve curve = curve_from_json(json::parse(r.stdout_text));
    // S_2 = t^2 - 2 alpha t with alpha = 1/2
    CHECK(curve.component(2) == Poly({Rational(0), Rational(-1), Rational(1)}));
    std::remove(path.c_str());
}

TEST_CASE("convolve handles both kinds of input") {
    const RunResult seqs = run_cli(
        R"(convolve --seq '{"level":2,"entries":["1","1","1"]}' )"
        R"(--seq2 '{"level":2,"entries":["1","1","1"]}')");
    CHECK(seqs.exit_code == 0);
    const json out = json::parse(seqs.stdout_text);
    CHECK(out["entries"] == json::array({"1", "2", "4"}));

    const RunResult polys = run_cli(
        R"(convolve --op forward_difference --level 2 )"
        R"(--poly '{"coeffs":["0","0","1"]}' --poly2 '{"coeffs":["0","0","1"]}')");
    CHECK(polys.exit_code == 0);
    CHECK(poly_from_json(json::parse(polys.stdout_text)) ==
          Poly({Rational(1, 2), Rational(1), Rational(1)}));
}

TEST_CASE("exit codes") {
    CHECK(run_cli("no-such-command").exit_code == 1);
    CHECK(run_cli("binomial").exit_code == 2);  // missing operator

    // domain error with a machine-readable JSON object
    const RunResult dom = run_cli(
        R"(pairing --op forward_difference --level 2 --poly '{"coeffs":["0","0","0","1"]}' )"
        R"(--poly2 '{"coeffs":["1"]}')");
    CHECK(dom.exit_code == 2);
    const json err = json::parse(dom.stdout_text);
    CHECK(err["error"] == "DegreeExceedsLevel");

    // a failed verification exits 3
    CHECK(run_cli("verify deviation-line --level 12 --tol 1e-15").exit_code == 3);
}
