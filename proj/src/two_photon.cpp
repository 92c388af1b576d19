#include "nlhv/two_photon.hpp"

#include <cmath>
#include <string>

#include "nlhv/errors.hpp"

namespace nlhv {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_unit(const BlochVector& n, const char* what) {
    if (!std::isfinite(n.norm()) || !n.is_unit()) {
        throw InvalidDirection(std::string(what) + " must be a unit vector");
    }
}

PolarizationState basis_state(int index) noexcept {
    return index == 0 ? PolarizationState{1.0, 0.0} : PolarizationState{0.0, 1.0};
}

}  // namespace

double TwoPhotonState::norm() const noexcept {
    double s = 0.0;
    for (const Complex& c : amp) {
        s += std::norm(c);
    }
    return std::sqrt(s);
}

TwoPhotonState tensor(const PolarizationState& a, const PolarizationState& b) noexcept {
    return {{a.c_plus * b.c_plus, a.c_plus * b.c_minus, a.c_minus * b.c_plus, a.c_minus * b.c_minus}};
}

Complex inner(const TwoPhotonState& lhs, const TwoPhotonState& rhs) noexcept {
    Complex s = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        s += std::conj(lhs.amp[k]) * rhs.amp[k];
    }
    return s;
}

double fidelity(const TwoPhotonState& lhs, const TwoPhotonState& rhs) noexcept {
    return std::abs(inner(lhs, rhs));
}

TwoPhotonState odd_state() noexcept {
    const Complex c{0.0, kInvSqrt2};
    return {{0.0, -c, c, 0.0}};
}

TwoPhotonState even_state() noexcept {
    const Complex c{0.0, kInvSqrt2};
    return {{0.0, -c, -c, 0.0}};
}

TwoPhotonState state_for(Parity parity) noexcept {
    return parity == Parity::odd ? odd_state() : even_state();
}

TwoPhotonState odd_state_from_u(const BlochVector& u) {
    const BlochVector n = u.normalized();
    const PolarizationState up = state_from_bloch(n);
    const PolarizationState down = state_from_bloch(-n);
    const TwoPhotonState first = tensor(up, down);
    const TwoPhotonState second = tensor(down, up);
    TwoPhotonState r;
    for (std::size_t k = 0; k < 4; ++k) {
        r.amp[k] = kInvSqrt2 * (first.amp[k] - second.amp[k]);
    }
    return r;
}

TwoPhotonState apply_product(const Operator2& on_a, const Operator2& on_b, const TwoPhotonState& state) noexcept {
    // index k = 2 * i_a + i_b
    TwoPhotonState r;
    for (int ia = 0; ia < 2; ++ia) {
        for (int ib = 0; ib < 2; ++ib) {
            Complex s = 0.0;
            for (int ja = 0; ja < 2; ++ja) {
                for (int jb = 0; jb < 2; ++jb) {
                    s += on_a(ia, ja) * on_b(ib, jb) * state.amp[2 * ja + jb];
                }
            }
            r.amp[2 * ia + ib] = s;
        }
    }
    return r;
}

TwoPhotonState parity_apply_both(const TwoPhotonState& state) noexcept {
    TwoPhotonState r;
    for (int ia = 0; ia < 2; ++ia) {
        for (int ib = 0; ib < 2; ++ib) {
            const TwoPhotonState image =
                tensor(parity_apply(basis_state(ia)), parity_apply(basis_state(ib)));
            const Complex coeff = std::conj(state.amp[2 * ia + ib]);
            for (std::size_t k = 0; k < 4; ++k) {
                r.amp[k] += coeff * image.amp[k];
            }
        }
    }
    return r;
}

double correlation(const TwoPhotonState& state, const BlochVector& a, const BlochVector& b) {
    require_unit(a, "analyzer a");
    require_unit(b, "analyzer b");
    return inner(state, apply_product(pauli_dot(a), pauli_dot(b), state)).real();
}

double closed_form_correlation(Parity parity, const BlochVector& a, const BlochVector& b) noexcept {
    if (parity == Parity::odd) {
        return -a.dot(b);
    }
    return a.dot(b) - 2.0 * a.z * b.z;
}

Operator2 outcome_projector(const BlochVector& n, int sign) noexcept {
    return Complex{0.5, 0.0} * (Operator2::identity() + Complex{static_cast<double>(sign), 0.0} * pauli_dot(n));
}

OutcomeProbabilities joint_probabilities(const TwoPhotonState& state, const BlochVector& a, const BlochVector& b) {
    require_unit(a, "analyzer a");
    require_unit(b, "analyzer b");
    auto prob = [&](int sa, int sb) {
        const TwoPhotonState projected = apply_product(outcome_projector(a, sa), outcome_projector(b, sb), state);
        return inner(state, projected).real();
    };
    return {prob(+1, +1), prob(+1, -1), prob(-1, +1), prob(-1, -1)};
}

}  // namespace nlhv
