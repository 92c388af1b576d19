#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nlhv/poincare.hpp"
#include "nlhv/random.hpp"

namespace nlhv {

/// Gauss-Legendre nodes and weights on [lo, hi].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Throws InvalidConfig for n < 1.
[[nodiscard]] GaussLegendreRule gauss_legendre(int n, double lo = -1.0, double hi = 1.0);

/// How a sphere average is computed.
struct QuadratureSpec {
    enum class Method { product_rule, monte_carlo };

    Method method = Method::product_rule;
    int order = 200;                  // product rule: nodes per dimension, >= 2
    std::uint64_t samples = 1000000;  // Monte Carlo: points, >= 1
    std::uint64_t seed = 0x4c656767ULL;

    [[nodiscard]] static QuadratureSpec product_rule(int order = 200) noexcept {
        QuadratureSpec q;
        q.order = order;
        return q;
    }
    [[nodiscard]] static QuadratureSpec monte_carlo(std::uint64_t samples = 1000000,
                                                    std::uint64_t seed = 0x4c656767ULL) noexcept {
        QuadratureSpec q;
        q.method = Method::monte_carlo;
        q.samples = samples;
        q.seed = seed;
        return q;
    }

    /// Throws InvalidConfig when order < 2 or samples < 1.
    void validate() const;
};

/// Hidden polarization pairs (u, v) with v = -u and u uniform on the sphere.
class AntipodalIsotropicSource {
public:
    [[nodiscard]] static std::pair<BlochVector, BlochVector> sample(SplitMix64& rng) noexcept;
    [[nodiscard]] static BlochVector sample_direction(SplitMix64& rng) noexcept;
};

/// Sphere average with its standard error (zero for the deterministic rule).
struct SphereAverage {
    double value = 0.0;
    double std_error = 0.0;
};

/// (1/4pi) * integral over the unit sphere of |u . n| du.
///
/// The product rule puts its polar axis along n and splits the cos(theta)
/// range at the equator, where |u . n| has its kink, using Gauss-Legendre
/// nodes on each half and uniform nodes in azimuth. The Monte Carlo rule
/// averages over directions drawn from AntipodalIsotropicSource; a given
/// (samples, seed) always uses the same point set.
[[nodiscard]] SphereAverage sphere_mean_abs_dot_estimate(const BlochVector& n, const QuadratureSpec& quad);

[[nodiscard]] double sphere_mean_abs_dot(const BlochVector& n, const QuadratureSpec& quad);

}  // namespace nlhv
