#pragma once

// Two-photon polarization states over the ordered product basis
// (psi+ psi+, psi+ psi-, psi- psi+, psi- psi-), photon A on the left.

#include <array>

#include "nlhv/poincare.hpp"

namespace nlhv {

enum class Parity { odd, even };

struct TwoPhotonState {
    std::array<Complex, 4> amp{};

    [[nodiscard]] double norm() const noexcept;
};

/// psi_A (x) psi_B
[[nodiscard]] TwoPhotonState tensor(const PolarizationState& a, const PolarizationState& b) noexcept;

[[nodiscard]] Complex inner(const TwoPhotonState& lhs, const TwoPhotonState& rhs) noexcept;
[[nodiscard]] double fidelity(const TwoPhotonState& lhs, const TwoPhotonState& rhs) noexcept;

/// -(i/sqrt2)(psi+ psi- - psi- psi+)
[[nodiscard]] TwoPhotonState odd_state() noexcept;

/// -(i/sqrt2)(psi+ psi- + psi- psi+)
[[nodiscard]] TwoPhotonState even_state() noexcept;

[[nodiscard]] TwoPhotonState state_for(Parity parity) noexcept;

/// (1/sqrt2)[psi_A(u) psi_B(-u) - psi_A(-u) psi_B(u)]. The result is the odd
/// state up to a global phase for every u. Throws InvalidDirection for zero u.
[[nodiscard]] TwoPhotonState odd_state_from_u(const BlochVector& u);

/// (O_A (x) O_B) |state>, the full 4x4 action.
[[nodiscard]] TwoPhotonState apply_product(const Operator2& on_a, const Operator2& on_b,
                                           const TwoPhotonState& state) noexcept;

/// Parity on both photons. Each basis factor is mapped with parity_apply and
/// the amplitudes are carried anti-linearly (complex conjugated), matching the
/// single-photon map u -> -u, which reverses handedness on the whole sphere.
[[nodiscard]] TwoPhotonState parity_apply_both(const TwoPhotonState& state) noexcept;

/// <state| (sigma.a)_A (sigma.b)_B |state>, evaluated by applying the 4x4
/// operator. Throws InvalidDirection unless a and b are unit vectors.
[[nodiscard]] double correlation(const TwoPhotonState& state, const BlochVector& a, const BlochVector& b);

/// -a.b (odd) or a.b - 2 a_z b_z (even).
[[nodiscard]] double closed_form_correlation(Parity parity, const BlochVector& a, const BlochVector& b) noexcept;

struct OutcomeProbabilities {
    double p_pp = 0.0;
    double p_pm = 0.0;
    double p_mp = 0.0;
    double p_mm = 0.0;

    [[nodiscard]] double sum() const noexcept { return p_pp + p_pm + p_mp + p_mm; }
    /// sum over outcomes of alpha * beta * P(alpha, beta)
    [[nodiscard]] double correlation() const noexcept { return p_pp - p_pm - p_mp + p_mm; }
    [[nodiscard]] std::array<double, 4> as_array() const noexcept { return {p_pp, p_pm, p_mp, p_mm}; }
};

/// Projector (1 + sign * sigma.n) / 2.
[[nodiscard]] Operator2 outcome_projector(const BlochVector& n, int sign) noexcept;

/// Joint outcome probabilities from the projectors (1 +- sigma.a)/2 (x) (1 +- sigma.b)/2.
/// Throws InvalidDirection unless a and b are unit vectors.
[[nodiscard]] OutcomeProbabilities joint_probabilities(const TwoPhotonState& state, const BlochVector& a,
                                                      const BlochVector& b);

}  // namespace nlhv
