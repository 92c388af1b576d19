#pragma once

// Finite-statistics runs of the polarization-correlation experiment with
// ideal detectors: outcome pairs are drawn from the exact joint distribution.

#include <array>
#include <cstdint>
#include <optional>

#include "nlhv/two_photon.hpp"

namespace nlhv {

struct RunConfig {
    Parity parity = Parity::odd;
    BlochVector a{1.0, 0.0, 0.0};
    BlochVector b{1.0, 0.0, 0.0};
    std::uint64_t pairs = 1;
    std::uint64_t seed = 0;

    /// Throws InvalidConfig for pairs == 0 and InvalidDirection for non-unit analyzers.
    void validate() const;
};

struct SampleCounts {
    std::uint64_t n_pp = 0;
    std::uint64_t n_pm = 0;
    std::uint64_t n_mp = 0;
    std::uint64_t n_mm = 0;

    [[nodiscard]] std::uint64_t total() const noexcept { return n_pp + n_pm + n_mp + n_mm; }
    [[nodiscard]] std::array<std::uint64_t, 4> as_array() const noexcept { return {n_pp, n_pm, n_mp, n_mm}; }

    SampleCounts& operator+=(const SampleCounts& o) noexcept;
    friend bool operator==(const SampleCounts&, const SampleCounts&) = default;
};

/// Pairs per random substream. Block k of a run always draws from
/// SplitMix64::substream(seed, k), whichever worker executes it.
inline constexpr std::uint64_t kPairsPerBlock = 1u << 16;

/// Probabilities below this are treated as exact zeros and never sampled.
inline constexpr double kZeroProbability = 1e-15;

/// Inverse-CDF sampler over (++, +-, -+, --) in that fixed order.
class OutcomeSampler {
public:
    explicit OutcomeSampler(const OutcomeProbabilities& probs) noexcept;

    /// Category index 0..3 for a uniform draw on [0, 1).
    [[nodiscard]] int pick(double uniform) const noexcept;

private:
    std::array<double, 4> cumulative_{};
    int last_supported_ = 3;
};

/// Draws cfg.pairs outcome pairs. The counts depend only on the config, not on
/// the number of workers.
[[nodiscard]] SampleCounts sample_run(const RunConfig& cfg, unsigned workers = 1);

struct EstimateReport {
    double e_hat = 0.0;
    double std_err = 0.0;
    /// Signed distance of -e_hat beyond the nearer bound, in standard errors;
    /// positive means a violation.
    std::optional<double> violation_sigma;
};

/// e_hat = (n_pp - n_pm - n_mp + n_mm) / N and std_err = sqrt((1 - e_hat^2) / N),
/// with std_err = 1 / N when |e_hat| = 1. Throws InvalidConfig for empty counts.
[[nodiscard]] EstimateReport estimate_E(const SampleCounts& counts);

struct SimulatedRun {
    double phi = 0.0;
    Parity parity = Parity::odd;
    std::uint64_t pairs = 0;
    std::uint64_t seed = 0;
    SampleCounts counts;
    EstimateReport estimate;
};

/// Runs the experiment with linear analyzers separated by phi (radians) and
/// scores -e_hat against the closed-form bounds at phi.
[[nodiscard]] SimulatedRun simulate_at_angle(double phi, std::uint64_t pairs, std::uint64_t seed,
                                             Parity parity = Parity::odd, unsigned workers = 1);

[[nodiscard]] EstimateReport violation_significance(double phi, std::uint64_t pairs, std::uint64_t seed,
                                                    unsigned workers = 1);

}  // namespace nlhv
