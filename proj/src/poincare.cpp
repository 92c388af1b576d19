#include "nlhv/poincare.hpp"

#include <algorithm>
#include <cmath>

#include "nlhv/errors.hpp"

namespace nlhv {

namespace {
constexpr Complex kI{0.0, 1.0};
}

double BlochVector::norm() const noexcept { return std::sqrt(dot(*this)); }

bool BlochVector::is_unit(double tol) const noexcept { return std::abs(norm() - 1.0) <= tol; }

BlochVector BlochVector::normalized() const {
    const double n = norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw InvalidDirection("direction vector cannot be normalized");
    }
    return (1.0 / n) * *this;
}

BlochVector cross(const BlochVector& a, const BlochVector& b) noexcept {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double reduce_azimuth(double phi) noexcept {
    double r = std::fmod(phi, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod of a tiny negative value can round up to exactly 2pi
    return r >= kTwoPi ? 0.0 : r;
}

BlochVector to_bloch(const SphericalAngles& s) noexcept {
    const double st = std::sin(s.theta);
    return {st * std::cos(s.azimuth), st * std::sin(s.azimuth), std::cos(s.theta)};
}

SphericalAngles to_angles(const BlochVector& u) {
    const BlochVector n = u.normalized();
    const double rho = std::hypot(n.x, n.y);
    SphericalAngles s;
    s.theta = std::atan2(rho, n.z);
    s.azimuth = rho == 0.0 ? 0.0 : reduce_azimuth(std::atan2(n.y, n.x));
    return s;
}

double PolarizationState::norm() const noexcept {
    return std::sqrt(std::norm(c_plus) + std::norm(c_minus));
}

PolarizationState PolarizationState::canonical() const noexcept {
    const Complex lead = c_plus != 0.0 ? c_plus : c_minus;
    if (lead == 0.0) {
        return *this;
    }
    const Complex phase = std::conj(lead) / std::abs(lead);
    return {c_plus * phase, c_minus * phase};
}

Complex inner(const PolarizationState& lhs, const PolarizationState& rhs) noexcept {
    return std::conj(lhs.c_plus) * rhs.c_plus + std::conj(lhs.c_minus) * rhs.c_minus;
}

double fidelity(const PolarizationState& lhs, const PolarizationState& rhs) noexcept {
    return std::abs(inner(lhs, rhs));
}

Operator2 Operator2::identity() noexcept {
    Operator2 r;
    r.m[0][0] = 1.0;
    r.m[1][1] = 1.0;
    return r;
}

PolarizationState Operator2::apply(const PolarizationState& psi) const noexcept {
    return {m[0][0] * psi.c_plus + m[0][1] * psi.c_minus, m[1][0] * psi.c_plus + m[1][1] * psi.c_minus};
}

Operator2 Operator2::adjoint() const noexcept {
    Operator2 r;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            r.m[i][j] = std::conj(m[j][i]);
        }
    }
    return r;
}

Operator2 operator*(const Operator2& a, const Operator2& b) noexcept {
    Operator2 r;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
        }
    }
    return r;
}

Operator2 operator+(const Operator2& a, const Operator2& b) noexcept {
    Operator2 r;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            r.m[i][j] = a.m[i][j] + b.m[i][j];
        }
    }
    return r;
}

Operator2 operator*(Complex s, const Operator2& a) noexcept {
    Operator2 r;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            r.m[i][j] = s * a.m[i][j];
        }
    }
    return r;
}

double max_abs_diff(const Operator2& a, const Operator2& b) noexcept {
    double worst = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            worst = std::max(worst, std::abs(a.m[i][j] - b.m[i][j]));
        }
    }
    return worst;
}

PolarizationState state_from_bloch(const SphericalAngles& u) noexcept {
    const double half_azimuth = 0.5 * reduce_azimuth(u.azimuth);
    const double half_theta = 0.5 * u.theta;
    return {std::polar(std::cos(half_theta), -half_azimuth), std::polar(std::sin(half_theta), half_azimuth)};
}

PolarizationState state_from_bloch(const BlochVector& u) { return state_from_bloch(to_angles(u)); }

BlochVector bloch_from_state(const PolarizationState& psi) noexcept {
    // <sigma_x> + i <sigma_y> = 2 conj(c+) c-
    const Complex coherence = 2.0 * std::conj(psi.c_plus) * psi.c_minus;
    return {coherence.real(), coherence.imag(), std::norm(psi.c_plus) - std::norm(psi.c_minus)};
}

SphericalAngles angles_from_state(const PolarizationState& psi) noexcept {
    const double mag_plus = std::abs(psi.c_plus);
    const double mag_minus = std::abs(psi.c_minus);
    SphericalAngles s;
    s.theta = 2.0 * std::atan2(mag_minus, mag_plus);
    if (mag_plus != 0.0 && mag_minus != 0.0) {
        s.azimuth = reduce_azimuth(std::arg(psi.c_minus) - std::arg(psi.c_plus));
    }
    return s;
}

Operator2 pauli_dot(const BlochVector& n) noexcept {
    Operator2 r;
    r.m[0][0] = n.z;
    r.m[0][1] = Complex{n.x, -n.y};
    r.m[1][0] = Complex{n.x, n.y};
    r.m[1][1] = -n.z;
    return r;
}

double expectation(const PolarizationState& psi, const BlochVector& b) noexcept {
    return inner(psi, pauli_dot(b).apply(psi)).real();
}

SphericalAngles antipode(const SphericalAngles& u) noexcept {
    return {kPi - u.theta, reduce_azimuth(u.azimuth + kPi)};
}

PolarizationState parity_apply(const PolarizationState& psi) noexcept {
    const SphericalAngles angles = angles_from_state(psi);
    const PolarizationState reference = state_from_bloch(angles);
    const Complex overlap = inner(reference, psi);
    const double mag = std::abs(overlap);
    const Complex carried = mag > 0.0 ? overlap / mag : Complex{1.0, 0.0};
    const PolarizationState flipped = state_from_bloch(antipode(angles));
    const Complex factor = -kI * carried;
    return {factor * flipped.c_plus, factor * flipped.c_minus};
}

}  // namespace nlhv
