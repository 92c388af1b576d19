#pragma once

// Bounds on the polarization correlation for the non-local hidden-variable
// model with antipodal, isotropic hidden polarizations, and their comparison
// with the quantum singlet prediction.
//
// Throughout, the bounded quantity is -E(phi) = P(a, b), so the quantum value
// is cos(phi) and phi is the angle between the analyzers on the Poincare
// sphere, in radians on [0, pi].

#include <utility>
#include <vector>

#include "nlhv/poincare.hpp"
#include "nlhv/quadrature.hpp"

namespace nlhv {

/// Maximizer of the violation as reported in the literature, in degrees.
/// Kept for side-by-side display; the computed value is 2 asin(1/4).
inline constexpr double kReportedMaximizerDeg = 28.8;
inline constexpr double kReportedMirrorMaximizerDeg = 151.2;

[[nodiscard]] constexpr double deg_to_rad(double deg) noexcept { return deg * (kPi / 180.0); }
[[nodiscard]] constexpr double rad_to_deg(double rad) noexcept { return rad * (180.0 / kPi); }

/// Converts a degree value on [0, 180] to radians on [0, pi]; throws
/// AngleDomainError outside that range. 180 maps to pi exactly.
[[nodiscard]] double relative_angle_from_degrees(double deg);

/// Throws AngleDomainError unless phi is in [0, pi].
void require_relative_angle(double phi);

/// Analyzer settings on the equator (linear polarizers) separated by phi.
[[nodiscard]] std::pair<BlochVector, BlochVector> analyzer_pair(double phi) noexcept;

struct CorrelationBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// Bounds with the standard errors of the two sphere averages behind them.
struct IntegratedBounds {
    CorrelationBounds bounds;
    double lower_std_error = 0.0;
    double upper_std_error = 0.0;
};

/// lower = -1 + <|u.(a+b)|>, upper = 1 - <|u.(a-b)|>, with <.> the sphere
/// average under quad. Throws InvalidDirection unless a, b are unit vectors.
[[nodiscard]] IntegratedBounds bounds_by_integration_with_error(const BlochVector& a, const BlochVector& b,
                                                                const QuadratureSpec& quad);

[[nodiscard]] CorrelationBounds bounds_by_integration(const BlochVector& a, const BlochVector& b,
                                                      const QuadratureSpec& quad);

/// Distance between a sampled bound and its exact value in standard errors,
/// after discounting one unit roundoff for forming -1 + average or 1 - average.
/// Zero when the two agree to that roundoff.
[[nodiscard]] double deviation_in_std_errors(double sampled, double exact, double std_error) noexcept;

/// lower = -1 + |cos(phi/2)|, upper = 1 - |sin(phi/2)|.
///
/// |cos(phi/2)| is evaluated as sin((pi - phi)/2) so that the endpoints are
/// exact and lower(phi) == -upper(pi - phi) bit for bit.
[[nodiscard]] CorrelationBounds bounds_closed_form(double phi);

/// -E_Q(phi) = cos(phi).
[[nodiscard]] double quantum_prediction(double phi);

struct ViolationReport {
    double phi = 0.0;
    double quantum_value = 0.0;
    CorrelationBounds bounds;
    double violation = 0.0;  // max(0, quantum - upper, lower - quantum)
};

[[nodiscard]] ViolationReport violation_at(double phi);

struct AngleInterval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Maximal intervals of (0, pi) where the violation is positive, with
/// endpoints located by bisection to within tolerance (radians). A grid of
/// 3600 cells is used to bracket the sign changes. Throws InvalidConfig for
/// tolerance <= 0.
[[nodiscard]] std::vector<AngleInterval> violation_ranges(double tolerance);

struct MaxViolation {
    double phi_star = 0.0;    // in (0, pi/3)
    double phi_mirror = 0.0;  // pi - phi_star
    double v_star = 0.0;
};

/// Golden-section maximization of the violation over (0, pi/3) down to a
/// bracket narrower than tolerance (radians). Throws InvalidConfig for
/// tolerance <= 0.
[[nodiscard]] MaxViolation max_violation(double tolerance);

}  // namespace nlhv
