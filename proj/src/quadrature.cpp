#include "nlhv/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nlhv/errors.hpp"

namespace nlhv {

GaussLegendreRule gauss_legendre(int n, double lo, double hi) {
    if (n < 1) {
        throw InvalidConfig("Gauss-Legendre rule needs at least one node");
    }
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double mid = 0.5 * (hi + lo);
    const double half = 0.5 * (hi - lo);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration on P_n from the Chebyshev-like initial guess.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (int k = 1; k <= n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p2) / k;
            }
            dp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) <= 4.0 * std::numeric_limits<double>::epsilon()) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = mid - half * x;
        rule.nodes[n - 1 - i] = mid + half * x;
        rule.weights[i] = half * w;
        rule.weights[n - 1 - i] = half * w;
    }
    return rule;
}

void QuadratureSpec::validate() const {
    if (method == Method::product_rule && order < 2) {
        throw InvalidConfig("quadrature order must be at least 2");
    }
    if (method == Method::monte_carlo && samples < 1) {
        throw InvalidConfig("Monte Carlo quadrature needs at least one sample");
    }
}

BlochVector AntipodalIsotropicSource::sample_direction(SplitMix64& rng) noexcept {
    const double t = 2.0 * rng.uniform() - 1.0;
    const double azimuth = kTwoPi * rng.uniform();
    const double rho = std::sqrt(std::max(0.0, 1.0 - t * t));
    return {rho * std::cos(azimuth), rho * std::sin(azimuth), t};
}

std::pair<BlochVector, BlochVector> AntipodalIsotropicSource::sample(SplitMix64& rng) noexcept {
    const BlochVector u = sample_direction(rng);
    return {u, -u};
}

namespace {

SphereAverage product_rule_average(const BlochVector& n, int order) {
    const double length = n.norm();
    if (length == 0.0) {
        return {};
    }
    const BlochVector pole = (1.0 / length) * n;
    // Any axis not parallel to the pole completes the frame.
    const BlochVector helper = std::abs(pole.x) < 0.9 ? BlochVector{1.0, 0.0, 0.0} : BlochVector{0.0, 1.0, 0.0};
    const BlochVector e1 = cross(pole, helper).normalized();
    const BlochVector e2 = cross(pole, e1);

    const int per_half = (order + 1) / 2;
    const GaussLegendreRule south = gauss_legendre(per_half, -1.0, 0.0);
    const GaussLegendreRule north = gauss_legendre(per_half, 0.0, 1.0);
    const int azimuth_nodes = order;
    const double azimuth_weight = kTwoPi / azimuth_nodes;
    std::vector<double> cos_az(azimuth_nodes);
    std::vector<double> sin_az(azimuth_nodes);
    for (int k = 0; k < azimuth_nodes; ++k) {
        const double azimuth = azimuth_weight * (k + 0.5);
        cos_az[k] = std::cos(azimuth);
        sin_az[k] = std::sin(azimuth);
    }

    double total = 0.0;
    for (const GaussLegendreRule* half : {&south, &north}) {
        for (std::size_t i = 0; i < half->nodes.size(); ++i) {
            const double t = half->nodes[i];
            const double rho = std::sqrt(std::max(0.0, 1.0 - t * t));
            double ring = 0.0;
            for (int k = 0; k < azimuth_nodes; ++k) {
                const BlochVector u = (rho * cos_az[k]) * e1 + (rho * sin_az[k]) * e2 + t * pole;
                ring += std::abs(u.dot(n));
            }
            total += half->weights[i] * azimuth_weight * ring;
        }
    }
    return {total / (4.0 * kPi), 0.0};
}

SphereAverage monte_carlo_average(const BlochVector& n, std::uint64_t samples, std::uint64_t seed) {
    SplitMix64 rng(seed);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const double f = std::abs(AntipodalIsotropicSource::sample_direction(rng).dot(n));
        sum += f;
        sum_sq += f * f;
    }
    const double count = static_cast<double>(samples);
    const double mean = sum / count;
    const double variance = samples > 1 ? std::max(0.0, (sum_sq - count * mean * mean) / (count - 1.0)) : 0.0;
    return {mean, std::sqrt(variance / count)};
}

}  // namespace

SphereAverage sphere_mean_abs_dot_estimate(const BlochVector& n, const QuadratureSpec& quad) {
    quad.validate();
    if (quad.method == QuadratureSpec::Method::product_rule) {
        return product_rule_average(n, quad.order);
    }
    return monte_carlo_average(n, quad.samples, quad.seed);
}

double sphere_mean_abs_dot(const BlochVector& n, const QuadratureSpec& quad) {
    return sphere_mean_abs_dot_estimate(n, quad).value;
}

}  // namespace nlhv
