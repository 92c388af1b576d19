#pragma once

// Single-photon polarization on the Poincare sphere.
//
// States are written over the circular basis {psi+, psi-} (component 0 is
// right-handed, component 1 left-handed), so sigma_z = diag(1, -1) and the
// z axis of the sphere is circular polarization.

#include <array>
#include <complex>

namespace nlhv {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Default tolerance for 2x2 and 4x4 algebraic identities.
inline constexpr double kAlgebraTolerance = 1e-12;

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    [[nodiscard]] double dot(const BlochVector& o) const noexcept { return x * o.x + y * o.y + z * o.z; }
    [[nodiscard]] double norm() const noexcept;
    [[nodiscard]] bool is_unit(double tol = kAlgebraTolerance) const noexcept;
    /// Unit vector along this one; throws InvalidDirection for zero or non-finite input.
    [[nodiscard]] BlochVector normalized() const;

    friend BlochVector operator+(const BlochVector& a, const BlochVector& b) noexcept {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend BlochVector operator-(const BlochVector& a, const BlochVector& b) noexcept {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend BlochVector operator-(const BlochVector& a) noexcept { return {-a.x, -a.y, -a.z}; }
    friend BlochVector operator*(double s, const BlochVector& a) noexcept { return {s * a.x, s * a.y, s * a.z}; }
    friend bool operator==(const BlochVector&, const BlochVector&) = default;
};

[[nodiscard]] BlochVector cross(const BlochVector& a, const BlochVector& b) noexcept;

/// Polar angle theta in [0, pi] and azimuth in [0, 2pi).
struct SphericalAngles {
    double theta = 0.0;
    double azimuth = 0.0;

    friend bool operator==(const SphericalAngles&, const SphericalAngles&) = default;
};

/// Reduces an azimuth onto [0, 2pi).
[[nodiscard]] double reduce_azimuth(double phi) noexcept;

/// Unit vector for the given angles.
[[nodiscard]] BlochVector to_bloch(const SphericalAngles& s) noexcept;

/// Angles of the normalized vector. The azimuth is 0 on the poles.
[[nodiscard]] SphericalAngles to_angles(const BlochVector& u);

/// Amplitudes over {psi+, psi-}.
struct PolarizationState {
    Complex c_plus{1.0, 0.0};
    Complex c_minus{0.0, 0.0};

    [[nodiscard]] double norm() const noexcept;
    /// Same ray with the first nonzero amplitude real and positive.
    [[nodiscard]] PolarizationState canonical() const noexcept;
};

/// <lhs|rhs>
[[nodiscard]] Complex inner(const PolarizationState& lhs, const PolarizationState& rhs) noexcept;

/// |<lhs|rhs>|; equals 1 iff the two unit states differ only by a global phase.
[[nodiscard]] double fidelity(const PolarizationState& lhs, const PolarizationState& rhs) noexcept;

/// 2x2 complex matrix, row-major.
struct Operator2 {
    std::array<std::array<Complex, 2>, 2> m{};

    [[nodiscard]] const Complex& operator()(int row, int col) const { return m[row][col]; }
    [[nodiscard]] Complex& operator()(int row, int col) { return m[row][col]; }

    [[nodiscard]] static Operator2 identity() noexcept;
    [[nodiscard]] PolarizationState apply(const PolarizationState& psi) const noexcept;
    [[nodiscard]] Operator2 adjoint() const noexcept;
    [[nodiscard]] Complex trace() const noexcept { return m[0][0] + m[1][1]; }

    friend Operator2 operator*(const Operator2& a, const Operator2& b) noexcept;
    friend Operator2 operator+(const Operator2& a, const Operator2& b) noexcept;
    friend Operator2 operator*(Complex s, const Operator2& a) noexcept;
};

/// Largest entry modulus of a - b.
[[nodiscard]] double max_abs_diff(const Operator2& a, const Operator2& b) noexcept;

/// Elliptic polarization state along u:
///   e^{-i phi/2} cos(theta/2) psi+  +  e^{i phi/2} sin(theta/2) psi-
/// The azimuth is reduced onto [0, 2pi) before the half-angle phases are taken.
[[nodiscard]] PolarizationState state_from_bloch(const SphericalAngles& u) noexcept;

/// Same, from a direction; throws InvalidDirection if u cannot be normalized.
/// The azimuth on the poles is taken as 0.
[[nodiscard]] PolarizationState state_from_bloch(const BlochVector& u);

/// (<sigma_x>, <sigma_y>, <sigma_z>) of a normalized state.
[[nodiscard]] BlochVector bloch_from_state(const PolarizationState& psi) noexcept;

/// Angles (theta, azimuth) of a state, read from the amplitude moduli and their
/// relative phase. The azimuth is 0 when either amplitude vanishes.
[[nodiscard]] SphericalAngles angles_from_state(const PolarizationState& psi) noexcept;

/// n_x sigma_x + n_y sigma_y + n_z sigma_z over {psi+, psi-}. Linear in n.
[[nodiscard]] Operator2 pauli_dot(const BlochVector& n) noexcept;

/// <psi| sigma.b |psi>, real for Hermitian sigma.b.
[[nodiscard]] double expectation(const PolarizationState& psi, const BlochVector& b) noexcept;

/// (pi - theta, (azimuth + pi) mod 2pi): the angles of -u.
[[nodiscard]] SphericalAngles antipode(const SphericalAngles& u) noexcept;

/// Parity: P psi(u) = -i psi(-u), where psi(-u) is built from antipode() of the
/// state's own angles and the global phase psi carries relative to its
/// canonical form is kept.
[[nodiscard]] PolarizationState parity_apply(const PolarizationState& psi) noexcept;

}  // namespace nlhv
