#pragma once

#include "maninforge/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mforge {

/// One failed identity: a stable check tag, the basis indices that witness
/// the failure, and both sides rendered exactly.
struct CheckFailure {
    std::string check;
    std::vector<std::size_t> witness;
    std::string lhs;
    std::string rhs;
};

/// Outcome of a verification: passed iff no failures were recorded.
class Report {
public:
    bool passed() const { return failures_.empty(); }
    const std::vector<CheckFailure>& failures() const { return failures_; }

    void fail(std::string check, std::vector<std::size_t> witness,
              std::string lhs, std::string rhs) {
        failures_.push_back({std::move(check), std::move(witness),
                             std::move(lhs), std::move(rhs)});
    }

    void require(bool ok, const std::string& check,
                 std::vector<std::size_t> witness, const std::string& detail) {
        if (!ok) fail(check, std::move(witness), detail, "");
    }

    void require_eq(const Matrix& lhs, const Matrix& rhs, const std::string& check,
                    std::vector<std::size_t> witness) {
        if (!(lhs == rhs)) fail(check, std::move(witness), lhs.str(), rhs.str());
    }

    void merge(const Report& other) {
        failures_.insert(failures_.end(), other.failures_.begin(),
                         other.failures_.end());
    }

    /// True when some failure's tag equals or starts with the given prefix.
    bool has_failure(const std::string& prefix) const {
        for (const auto& f : failures_)
            if (f.check.compare(0, prefix.size(), prefix) == 0) return true;
        return false;
    }

    std::string summary() const {
        if (passed()) return "passed";
        std::string s = "failed:";
        for (const auto& f : failures_) {
            s += " " + f.check + "(";
            for (std::size_t k = 0; k < f.witness.size(); ++k)
                s += (k ? "," : "") + std::to_string(f.witness[k]);
            s += ")";
        }
        return s;
    }

private:
    std::vector<CheckFailure> failures_;
};

} // namespace mforge
