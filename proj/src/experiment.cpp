#include "nlhv/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "nlhv/errors.hpp"
#include "nlhv/leggett.hpp"
#include "nlhv/random.hpp"

namespace nlhv {

void RunConfig::validate() const {
    if (pairs < 1) {
        throw InvalidConfig("a run needs at least one pair");
    }
    for (const BlochVector* n : {&a, &b}) {
        if (!std::isfinite(n->norm()) || !n->is_unit()) {
            throw InvalidDirection("analyzer settings must be unit vectors");
        }
    }
}

SampleCounts& SampleCounts::operator+=(const SampleCounts& o) noexcept {
    n_pp += o.n_pp;
    n_pm += o.n_pm;
    n_mp += o.n_mp;
    n_mm += o.n_mm;
    return *this;
}

OutcomeSampler::OutcomeSampler(const OutcomeProbabilities& probs) noexcept {
    std::array<double, 4> p = probs.as_array();
    for (double& x : p) {
        if (x < kZeroProbability) {
            x = 0.0;
        }
    }
    double running = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        running += p[k];
        cumulative_[k] = running;
        if (p[k] > 0.0) {
            last_supported_ = static_cast<int>(k);
        }
    }
    // normalize so a draw just below 1 cannot fall past the support
    for (double& c : cumulative_) {
        c /= running;
    }
}

int OutcomeSampler::pick(double uniform) const noexcept {
    for (int k = 0; k < last_supported_; ++k) {
        if (uniform < cumulative_[k]) {
            return k;
        }
    }
    return last_supported_;
}

namespace {

SampleCounts sample_block(const OutcomeSampler& sampler, std::uint64_t seed, std::uint64_t block,
                          std::uint64_t pairs_in_block) {
    SplitMix64 rng = SplitMix64::substream(seed, block);
    std::array<std::uint64_t, 4> tally{};
    for (std::uint64_t i = 0; i < pairs_in_block; ++i) {
        ++tally[sampler.pick(rng.uniform())];
    }
    return {tally[0], tally[1], tally[2], tally[3]};
}

}  // namespace

SampleCounts sample_run(const RunConfig& cfg, unsigned workers) {
    cfg.validate();
    const OutcomeSampler sampler(joint_probabilities(state_for(cfg.parity), cfg.a, cfg.b));
    const std::uint64_t blocks = (cfg.pairs + kPairsPerBlock - 1) / kPairsPerBlock;
    auto pairs_in = [&](std::uint64_t k) {
        return k + 1 < blocks ? kPairsPerBlock : cfg.pairs - k * kPairsPerBlock;
    };

    const std::uint64_t used = std::clamp<std::uint64_t>(workers, 1, blocks);
    std::vector<SampleCounts> partial(used);
    auto work = [&](std::uint64_t w) {
        for (std::uint64_t k = w; k < blocks; k += used) {
            partial[w] += sample_block(sampler, cfg.seed, k, pairs_in(k));
        }
    };
    if (used == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(used);
        for (std::uint64_t w = 0; w < used; ++w) {
            threads.emplace_back(work, w);
        }
    }

    SampleCounts total;
    for (const SampleCounts& c : partial) {
        total += c;
    }
    return total;
}

EstimateReport estimate_E(const SampleCounts& counts) {
    const std::uint64_t n = counts.total();
    if (n == 0) {
        throw InvalidConfig("cannot estimate a correlation from zero pairs");
    }
    const auto agree = static_cast<double>(counts.n_pp + counts.n_mm);
    const auto disagree = static_cast<double>(counts.n_pm + counts.n_mp);
    const auto total = static_cast<double>(n);
    EstimateReport r;
    r.e_hat = (agree - disagree) / total;
    r.std_err = std::abs(r.e_hat) >= 1.0 ? 1.0 / total : std::sqrt((1.0 - r.e_hat * r.e_hat) / total);
    return r;
}

SimulatedRun simulate_at_angle(double phi, std::uint64_t pairs, std::uint64_t seed, Parity parity,
                               unsigned workers) {
    const CorrelationBounds bounds = bounds_closed_form(phi);
    const auto [a, b] = analyzer_pair(phi);

    RunConfig cfg;
    cfg.parity = parity;
    cfg.a = a;
    cfg.b = b;
    cfg.pairs = pairs;
    cfg.seed = seed;

    SimulatedRun run;
    run.phi = phi;
    run.parity = parity;
    run.pairs = pairs;
    run.seed = seed;
    run.counts = sample_run(cfg, workers);
    run.estimate = estimate_E(run.counts);

    const double measured = -run.estimate.e_hat;
    const double se = run.estimate.std_err;
    run.estimate.violation_sigma = std::max((measured - bounds.upper) / se, (bounds.lower - measured) / se);
    return run;
}

EstimateReport violation_significance(double phi, std::uint64_t pairs, std::uint64_t seed, unsigned workers) {
    return simulate_at_angle(phi, pairs, seed, Parity::odd, workers).estimate;
}

}  // namespace nlhv
