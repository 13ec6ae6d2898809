#pragma once

#include "maninforge/json_io.hpp"

#include <optional>

namespace mforge {

/// One verification line of a pipeline run.
struct CheckLine {
    std::string tag;
    bool passed = false;
    std::string detail;
};

/// Aggregated outcome of a CLI command.
struct RunReport {
    std::string command;
    std::vector<CheckLine> checks;
    std::map<std::string, std::string> outputs;

    bool passed() const;
    void line(const std::string& tag, bool ok, const std::string& detail = "");
    /// Expands a Report: one line per failure, or a single passing line.
    void note(const std::string& tag, const Report& r);

    /// Canonical JSON rendering (sorted keys, two-space indent).
    std::string to_json() const;
    /// One PASS/FAIL line per check plus a summary line.
    std::string to_human() const;
};

struct PipelineResult {
    RunReport report;
    std::optional<Workspace> out;
};

/// Intrinsic checks of every object in the given documents.
PipelineResult run_verify(const std::vector<std::string>& texts);

/// Manin triple + factorizable r-matrix: derives (G, B) and runs the full
/// forward construction.
PipelineResult run_forward_r(const std::string& manin_text,
                             const std::string& r_text);

/// Manin triple + explicit metric and twist maps.
PipelineResult run_forward_gb(const std::string& manin_text,
                              const std::string& metric_text,
                              const std::string& twist_text);

/// Anti-isomorphic pair + theta twist: reverse construction.
PipelineResult run_reverse(const std::string& pair_text,
                           const std::string& theta_text);

/// Built-in worked examples with embedded expected values:
/// "sl2-forward", "sl2-reverse", "sl2-crosscheck".
PipelineResult run_example(const std::string& name);

} // namespace mforge
