#include "maninforge/pipelines.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw mforge::ParseError("cannot write file: " + path);
    out << content;
    if (!out) throw mforge::ParseError("write failed: " + path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"maninforge: exact-arithmetic toolkit for Manin triples, "
                 "extended O-operators, twilled extensions, and complex "
                 "product structures"};
    app.require_subcommand(1);

    bool human = false;
    bool quiet = false;
    app.add_flag("--human", human, "Render the report as text instead of JSON");
    app.add_flag("--quiet", quiet, "Suppress the report (exit code only)");

    auto* verify = app.add_subcommand("verify", "Run intrinsic checks on every "
                                                "object in a document");
    std::string verify_file;
    verify->add_option("file", verify_file, "Input document")->required();

    auto* forward = app.add_subcommand(
        "forward", "Build the gauged double from a Manin triple and either a "
                   "factorizable r-matrix or an explicit metric/twist pair");
    std::string manin_file, r_file, metric_file, twist_file, forward_out;
    forward->add_option("manin", manin_file, "Manin triple document")->required();
    forward->add_option("--r", r_file, "r-matrix document");
    forward->add_option("--metric", metric_file, "Metric linear_map document");
    forward->add_option("--twist", twist_file, "Twist linear_map document");
    forward->add_option("--out", forward_out, "Write the constructed objects");

    auto* reverse = app.add_subcommand(
        "reverse", "Build a Manin triple from an anti-isomorphic quadratic "
                   "pair and a theta twist");
    std::string pair_file, theta_file, reverse_out;
    reverse->add_option("pair", pair_file, "Anti-isomorphic pair document")
        ->required();
    reverse->add_option("--theta", theta_file, "Theta linear_map document")
        ->required();
    reverse->add_option("--out", reverse_out, "Write the constructed objects");

    auto* example = app.add_subcommand(
        "example", "Run a built-in worked example with embedded expected "
                   "values (sl2-forward, sl2-reverse, sl2-crosscheck)");
    std::string example_name;
    example->add_option("name", example_name, "Example name")->required();

    for (auto* sub : {verify, forward, reverse, example}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    mforge::PipelineResult res;
    std::string out_path;
    try {
        if (*verify) {
            res = mforge::run_verify({mforge::read_file(verify_file)});
        } else if (*forward) {
            const bool has_r = !r_file.empty();
            const bool has_gb = !metric_file.empty() || !twist_file.empty();
            if (has_r == has_gb)
                throw mforge::ParseError(
                    "forward: provide either --r or both --metric and --twist");
            if (has_gb && (metric_file.empty() || twist_file.empty()))
                throw mforge::ParseError(
                    "forward: --metric and --twist must be given together");
            res = has_r
                      ? mforge::run_forward_r(mforge::read_file(manin_file),
                                              mforge::read_file(r_file))
                      : mforge::run_forward_gb(mforge::read_file(manin_file),
                                               mforge::read_file(metric_file),
                                               mforge::read_file(twist_file));
            out_path = forward_out;
        } else if (*reverse) {
            res = mforge::run_reverse(mforge::read_file(pair_file),
                                      mforge::read_file(theta_file));
            out_path = reverse_out;
        } else {
            res = mforge::run_example(example_name);
        }
        if (!out_path.empty() && res.out)
            write_file(out_path, mforge::serialize_workspace(*res.out));
    } catch (const mforge::ParseError& e) {
        if (!quiet) std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        if (!quiet) std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }

    if (!quiet)
        std::cout << (human ? res.report.to_human() : res.report.to_json());
    return res.report.passed() ? 0 : 1;
}
