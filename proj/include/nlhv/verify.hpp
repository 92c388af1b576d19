#pragma once

// Self-verification suites: the algebraic identities of the state layer and
// the integral/closed-form agreements of the bound layer, each reported as a
// named check with its worst observed deviation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nlhv {

enum class Suite { states, integrals, all };

struct CheckResult {
    std::string name;
    double measure = 0.0;    // worst deviation observed
    double threshold = 0.0;  // pass iff measure <= threshold
    bool passed = false;
};

struct VerifyOptions {
    /// Replaces every check's own tolerance when set. Checks measured in
    /// standard errors keep their sigma threshold.
    std::optional<double> tolerance;
    std::uint64_t seed = 20070419;
    int random_instances = 200;
};

[[nodiscard]] std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options = {});

[[nodiscard]] bool all_passed(const std::vector<CheckResult>& results) noexcept;

}  // namespace nlhv
