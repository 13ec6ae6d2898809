#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "maninforge/pipelines.hpp"

#include <cstdlib>
#include <string>

using namespace mforge;

namespace {

std::string fixture(const std::string& name) {
    const char* env = std::getenv("MANINFORGE_FIXTURES");
    const std::string dir = env ? env : "fixtures";
    return read_file(dir + "/" + name);
}

std::string replace_once(std::string text, const std::string& from,
                         const std::string& to) {
    const auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    return text.replace(pos, from.size(), to);
}

} // namespace

TEST_CASE("built-in examples pass every embedded expectation") {
    for (const char* name : {"sl2-forward", "sl2-reverse", "sl2-crosscheck"}) {
        const PipelineResult res = run_example(name);
        CHECK(res.report.passed());
        CHECK(!res.report.checks.empty());
        for (const CheckLine& c : res.report.checks) {
            INFO(name, ": ", c.tag, " ", c.detail);
            CHECK(c.passed);
        }
    }
    CHECK_THROWS_AS(run_example("nope"), ParseError);
}

TEST_CASE("verify reports intrinsic checks without throwing on math failures") {
    const PipelineResult ok = run_verify({fixture("sl2_manin.json")});
    CHECK(ok.report.passed());
    // A bracket table violating Jacobi fails verification but still parses.
    const PipelineResult bad = run_verify({R"({
      "format": "manin-forge/1",
      "objects": {
        "a": {"type": "lie_algebra", "dim": 3, "basis": ["e0", "e1", "e2"],
              "brackets": [{"x": "e0", "y": "e1", "value": {"e0": "1"}},
                           {"x": "e0", "y": "e2", "value": {"e1": "1"}}]}
      }
    })"});
    CHECK(!bad.report.passed());
}

TEST_CASE("forward pipeline from a serialized r-matrix") {
    const PipelineResult res =
        run_forward_r(fixture("sl2_manin.json"), fixture("sl2_r.json"));
    CHECK(res.report.passed());
    REQUIRE(res.out);
    // The derived workspace is itself a valid document.
    const std::string out = serialize_workspace(*res.out);
    CHECK(run_verify({out}).report.passed());
    CHECK(res.out->triples.count("gtilde_triple"));
    CHECK(res.out->maps.count("G"));
    CHECK(res.out->maps.count("B"));

    // A perturbed r-matrix is parsed fine but fails the math checks.
    const std::string bad = replace_once(fixture("sl2_r.json"), "1/4", "1/3");
    const PipelineResult rb = run_forward_r(fixture("sl2_manin.json"), bad);
    CHECK(!rb.report.passed());
}

TEST_CASE("forward pipeline from explicit metric and twist maps") {
    const PipelineResult res =
        run_forward_gb(fixture("sl2_manin.json"), fixture("sl2_metric.json"),
                       fixture("sl2_twist.json"));
    CHECK(res.report.passed());
    REQUIRE(res.out);
    // Swapping metric and twist maps is a usage error at the math level:
    // the skew map is not a valid metric.
    const PipelineResult swapped =
        run_forward_gb(fixture("sl2_manin.json"), fixture("sl2_twist.json"),
                       fixture("sl2_metric.json"));
    CHECK(!swapped.report.passed());
}

TEST_CASE("reverse pipeline from a serialized pair and twist") {
    const PipelineResult res =
        run_reverse(fixture("sl2_pair.json"), fixture("sl2_theta.json"));
    CHECK(res.report.passed());
    REQUIRE(res.out);
    CHECK(run_verify({serialize_workspace(*res.out)}).report.passed());

    // theta = 0 fails the modified Yang-Baxter condition but does not throw.
    const std::string zero = R"({
      "format": "manin-forge/1",
      "objects": {
        "th_space": {"type": "subspace", "ambient_dim": 3,
                     "basis": [["1","0","0"], ["0","1","0"], ["0","0","1"]]},
        "theta0": {"type": "linear_map", "source": "th_space",
                   "target": "th_space",
                   "matrix": [["0","0","0"], ["0","0","0"], ["0","0","0"]]}
      }
    })";
    const PipelineResult bad = run_reverse(fixture("sl2_pair.json"), zero);
    CHECK(!bad.report.passed());
}

TEST_CASE("document-level problems surface as ParseError") {
    CHECK_THROWS_AS(run_verify({"{"}), ParseError);
    // No r_matrix object in the second document.
    CHECK_THROWS_AS(
        run_forward_r(fixture("sl2_manin.json"), fixture("sl2_manin.json")),
        ParseError);
    // Metric map must go from the declared gplus to gminus.
    CHECK_THROWS_AS(
        run_forward_gb(fixture("sl2_manin.json"), fixture("sl2_theta.json"),
                       fixture("sl2_twist.json")),
        ParseError);
    // Theta shape mismatch.
    const std::string small = R"({
      "format": "manin-forge/1",
      "objects": {
        "line": {"type": "subspace", "ambient_dim": 2, "basis": [["1","0"]]},
        "tiny": {"type": "linear_map", "source": "line", "target": "line",
                 "matrix": [["1"]]}
      }
    })";
    CHECK_THROWS_AS(run_reverse(fixture("sl2_pair.json"), small), ParseError);
}

TEST_CASE("report rendering carries tags and the summary line") {
    RunReport rr;
    rr.command = "verify";
    rr.line("alpha", true, "ok");
    rr.line("beta", false, "left != right");
    CHECK(!rr.passed());
    const std::string human = rr.to_human();
    CHECK(human.find("PASS alpha") != std::string::npos);
    CHECK(human.find("FAIL beta") != std::string::npos);
    const std::string js = rr.to_json();
    CHECK(js.find("\"beta\"") != std::string::npos);
    CHECK(js.find("left != right") != std::string::npos);
}
