#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string bin() {
    const char* env = std::getenv("MANINFORGE_BIN");
    REQUIRE(env != nullptr);
    return env;
}

std::string fixtures() {
    const char* env = std::getenv("MANINFORGE_FIXTURES");
    REQUIRE(env != nullptr);
    return env;
}

int run(const std::string& args) {
    const std::string cmd = bin() + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in),
            std::istreambuf_iterator<char>()};
}

/// Writes a copy of a fixture with one substring replaced, under /tmp.
std::string perturbed(const std::string& name, const std::string& from,
                      const std::string& to) {
    std::string text = slurp(fixtures() + "/" + name);
    const auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    text.replace(pos, from.size(), to);
    const std::string path = "/tmp/maninforge_cli_" + name;
    std::ofstream out(path);
    out << text;
    REQUIRE(out.good());
    return path;
}

} // namespace

TEST_CASE("exit 0: verification and all pipelines on valid input") {
    const std::string fx = fixtures();
    CHECK(run("verify " + fx + "/sl2_manin.json") == 0);
    CHECK(run("verify " + fx + "/sl2_pair.json") == 0);
    CHECK(run("forward " + fx + "/sl2_manin.json --r " + fx + "/sl2_r.json") ==
          0);
    CHECK(run("forward " + fx + "/sl2_manin.json --metric " + fx +
              "/sl2_metric.json --twist " + fx + "/sl2_twist.json") == 0);
    CHECK(run("reverse " + fx + "/sl2_pair.json --theta " + fx +
              "/sl2_theta.json") == 0);
    CHECK(run("example sl2-forward") == 0);
    CHECK(run("example sl2-reverse") == 0);
    CHECK(run("example sl2-crosscheck") == 0);
    CHECK(run("example sl2-forward --human") == 0);
    CHECK(run("example sl2-forward --quiet") == 0);
}

TEST_CASE("--out writes a re-verifiable document") {
    const std::string fx = fixtures();
    const std::string out = "/tmp/maninforge_cli_out.json";
    CHECK(run("forward " + fx + "/sl2_manin.json --r " + fx +
              "/sl2_r.json --out " + out) == 0);
    CHECK(run("verify " + out) == 0);
    CHECK(slurp(out).find("gtilde_triple") != std::string::npos);
}

TEST_CASE("exit 1: well-formed input failing the mathematical checks") {
    const std::string fx = fixtures();
    const std::string bad_r = perturbed("sl2_r.json", "1/4", "1/3");
    CHECK(run("forward " + fx + "/sl2_manin.json --r " + bad_r) == 1);
    // A perturbed structure constant breaks Jacobi: caught by verify.
    const std::string bad_alg = perturbed("sl2_r.json", "\"H\": \"1\"",
                                          "\"H\": \"1\", \"X+\": \"1\"");
    CHECK(run("verify " + bad_alg) == 1);
}

TEST_CASE("exit 2: usage errors, missing files, malformed documents") {
    const std::string fx = fixtures();
    CHECK(run("") == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("verify /nonexistent.json") == 2);
    CHECK(run("forward " + fx + "/sl2_manin.json") == 2);
    CHECK(run("forward " + fx + "/sl2_manin.json --r " + fx +
              "/sl2_r.json --metric " + fx + "/sl2_metric.json --twist " + fx +
              "/sl2_twist.json") == 2);
    CHECK(run("reverse " + fx + "/sl2_pair.json") == 2);
    CHECK(run("example not-an-example") == 2);
    const std::string bad_json = perturbed("sl2_r.json", "{", "");
    CHECK(run("verify " + bad_json) == 2);
    const std::string bad_type =
        perturbed("sl2_r.json", "\"r_matrix\"", "\"mystery\"");
    CHECK(run("verify " + bad_type) == 2);
}
