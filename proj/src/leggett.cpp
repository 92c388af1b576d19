#include "nlhv/leggett.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nlhv/errors.hpp"

namespace nlhv {

namespace {

void require_analyzer(const BlochVector& n) {
    if (!std::isfinite(n.norm()) || !n.is_unit()) {
        throw InvalidDirection("analyzer settings must be unit vectors");
    }
}

void require_positive_tolerance(double tolerance) {
    if (!(tolerance > 0.0)) {
        throw InvalidConfig("tolerance must be positive");
    }
}

bool violated(double phi) { return violation_at(phi).violation > 0.0; }

// Bisects [inside, outside] on the predicate `violated`, where violated(inside)
// holds and violated(outside) does not, and returns the midpoint.
double bisect_edge(double inside, double outside, double tolerance) {
    while (std::abs(outside - inside) > tolerance) {
        const double mid = 0.5 * (inside + outside);
        if (mid == inside || mid == outside) {
            break;
        }
        (violated(mid) ? inside : outside) = mid;
    }
    return 0.5 * (inside + outside);
}

}  // namespace

double relative_angle_from_degrees(double deg) {
    if (!(deg >= 0.0 && deg <= 180.0)) {
        throw AngleDomainError("angle " + std::to_string(deg) + " deg is outside [0, 180]");
    }
    return std::min(deg_to_rad(deg), kPi);
}

void require_relative_angle(double phi) {
    if (!(phi >= 0.0 && phi <= kPi)) {
        throw AngleDomainError("angle " + std::to_string(phi) + " rad is outside [0, pi]");
    }
}

std::pair<BlochVector, BlochVector> analyzer_pair(double phi) noexcept {
    return {BlochVector{1.0, 0.0, 0.0}, BlochVector{std::cos(phi), std::sin(phi), 0.0}};
}

IntegratedBounds bounds_by_integration_with_error(const BlochVector& a, const BlochVector& b,
                                                  const QuadratureSpec& quad) {
    require_analyzer(a);
    require_analyzer(b);
    quad.validate();
    const SphereAverage sum_side = sphere_mean_abs_dot_estimate(a + b, quad);
    const SphereAverage diff_side = sphere_mean_abs_dot_estimate(a - b, quad);
    IntegratedBounds r;
    r.bounds.lower = -1.0 + sum_side.value;
    r.bounds.upper = 1.0 - diff_side.value;
    r.lower_std_error = sum_side.std_error;
    r.upper_std_error = diff_side.std_error;
    return r;
}

CorrelationBounds bounds_by_integration(const BlochVector& a, const BlochVector& b, const QuadratureSpec& quad) {
    return bounds_by_integration_with_error(a, b, quad).bounds;
}

double deviation_in_std_errors(double sampled, double exact, double std_error) noexcept {
    const double excess = std::abs(sampled - exact) - std::numeric_limits<double>::epsilon();
    if (excess <= 0.0) {
        return 0.0;
    }
    return std_error > 0.0 ? excess / std_error : std::numeric_limits<double>::infinity();
}

CorrelationBounds bounds_closed_form(double phi) {
    require_relative_angle(phi);
    return {-1.0 + std::sin(0.5 * (kPi - phi)), 1.0 - std::sin(0.5 * phi)};
}

double quantum_prediction(double phi) {
    require_relative_angle(phi);
    return std::cos(phi);
}

ViolationReport violation_at(double phi) {
    ViolationReport r;
    r.phi = phi;
    r.quantum_value = quantum_prediction(phi);
    r.bounds = bounds_closed_form(phi);
    // With s = sin(phi/2) and c = cos(phi/2), cos(phi) - upper = s(1 - 2s) and
    // lower - cos(phi) = c(1 - 2c). The factored forms vanish exactly where the
    // quantum value crosses a bound.
    const double s = 1.0 - r.bounds.upper;
    const double c = 1.0 + r.bounds.lower;
    r.violation = std::max({0.0, s * (1.0 - 2.0 * s), c * (1.0 - 2.0 * c)});
    return r;
}

std::vector<AngleInterval> violation_ranges(double tolerance) {
    require_positive_tolerance(tolerance);
    constexpr int kCells = 3600;
    auto grid = [](int i) { return i == kCells ? kPi : kPi * i / kCells; };

    std::vector<AngleInterval> ranges;
    int i = 0;
    while (i <= kCells) {
        if (!violated(grid(i))) {
            ++i;
            continue;
        }
        int j = i;
        while (j + 1 <= kCells && violated(grid(j + 1))) {
            ++j;
        }
        AngleInterval interval;
        interval.lo = i == 0 ? 0.0 : bisect_edge(grid(i), grid(i - 1), tolerance);
        interval.hi = j == kCells ? kPi : bisect_edge(grid(j), grid(j + 1), tolerance);
        ranges.push_back(interval);
        i = j + 1;
    }
    return ranges;
}

MaxViolation max_violation(double tolerance) {
    require_positive_tolerance(tolerance);
    const double inv_golden = 0.5 * (std::sqrt(5.0) - 1.0);
    auto f = [](double phi) { return violation_at(phi).violation; };

    double lo = 0.0;
    double hi = kPi / 3.0;
    double c = hi - inv_golden * (hi - lo);
    double d = lo + inv_golden * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    while (hi - lo > tolerance) {
        if (fc >= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_golden * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_golden * (hi - lo);
            fd = f(d);
        }
        if (c >= d) {
            break;  // bracket collapsed to rounding level
        }
    }
    MaxViolation r;
    r.phi_star = 0.5 * (lo + hi);
    r.phi_mirror = kPi - r.phi_star;
    r.v_star = f(r.phi_star);
    return r;
}

}  // namespace nlhv
