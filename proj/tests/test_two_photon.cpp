#include <doctest.h>

#include <cmath>

#include "nlhv/errors.hpp"
#include "nlhv/two_photon.hpp"
#include "test_support.hpp"

using namespace nlhv;
using nlhv::testing::random_direction;

namespace {

constexpr double kTol = 1e-12;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Singlet outcome probabilities worked out by hand: P(alpha, beta) = (1 - alpha beta a.b)/4.
OutcomeProbabilities singlet_oracle(const BlochVector& a, const BlochVector& b) {
    const double c = a.dot(b);
    return {(1.0 - c) / 4.0, (1.0 + c) / 4.0, (1.0 + c) / 4.0, (1.0 - c) / 4.0};
}

double max_diff(const OutcomeProbabilities& x, const OutcomeProbabilities& y) {
    const auto ax = x.as_array();
    const auto ay = y.as_array();
    double worst = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        worst = std::max(worst, std::abs(ax[k] - ay[k]));
    }
    return worst;
}

}  // namespace

TEST_CASE("odd state amplitudes") {
    const TwoPhotonState odd = odd_state();
    CHECK(odd.norm() == doctest::Approx(1.0).epsilon(kTol));
    CHECK(odd.amp[0] == Complex{0.0, 0.0});
    CHECK(odd.amp[3] == Complex{0.0, 0.0});
    CHECK(std::abs(odd.amp[1] - Complex{0.0, -kInvSqrt2}) <= kTol);
    CHECK(std::abs(odd.amp[2] - Complex{0.0, kInvSqrt2}) <= kTol);
    // antisymmetric under exchange of A and B
    CHECK(std::abs(odd.amp[1] + odd.amp[2]) <= kTol);
}

TEST_CASE("even state amplitudes") {
    const TwoPhotonState even = even_state();
    CHECK(even.norm() == doctest::Approx(1.0).epsilon(kTol));
    CHECK(even.amp[1] == even.amp[2]);
    CHECK(std::abs(inner(odd_state(), even)) <= kTol);
}

TEST_CASE("odd state built from u is independent of u") {
    const TwoPhotonState from_z = odd_state_from_u({0.0, 0.0, 1.0});
    CHECK(from_z.norm() == doctest::Approx(1.0).epsilon(kTol));
    CHECK(std::abs(from_z.amp[0]) <= kTol);
    CHECK(std::abs(from_z.amp[3]) <= kTol);
    // the phase relating it to the odd state
    const Complex gamma = from_z.amp[1] / odd_state().amp[1];
    CHECK(std::abs(std::abs(gamma) - 1.0) <= kTol);
    CHECK(std::abs(from_z.amp[2] - gamma * odd_state().amp[2]) <= kTol);

    CHECK(fidelity(odd_state(), odd_state_from_u({1.0, 0.0, 0.0})) == doctest::Approx(1.0).epsilon(kTol));

    std::mt19937_64 gen(21);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        worst = std::max(worst, std::abs(fidelity(odd_state(), odd_state_from_u(random_direction(gen))) - 1.0));
    }
    CHECK(worst <= kTol);
    CHECK_THROWS_AS((void)odd_state_from_u({0.0, 0.0, 0.0}), InvalidDirection);
}

TEST_CASE("correlation examples") {
    const BlochVector z{0.0, 0.0, 1.0};
    const BlochVector x{1.0, 0.0, 0.0};
    const BlochVector d = BlochVector{1.0, 1.0, 1.0}.normalized();
    CHECK(correlation(odd_state(), d, d) == doctest::Approx(-1.0).epsilon(kTol));
    CHECK(std::abs(correlation(odd_state(), x, z)) <= kTol);
    CHECK(correlation(even_state(), z, z) == doctest::Approx(-1.0).epsilon(kTol));
}

TEST_CASE("closed-form correlation examples") {
    const double sixty = kPi / 3.0;
    const BlochVector a{1.0, 0.0, 0.0};
    const BlochVector b{std::cos(sixty), std::sin(sixty), 0.0};
    CHECK(closed_form_correlation(Parity::odd, a, b) == doctest::Approx(-0.5).epsilon(kTol));
    CHECK(closed_form_correlation(Parity::even, a, a) == doctest::Approx(1.0).epsilon(kTol));
    CHECK(closed_form_correlation(Parity::even, a, {0.0, 0.0, 1.0}) == 0.0);
}

TEST_CASE("operator route agrees with the closed forms") {
    std::mt19937_64 gen(22);
    double worst_odd = 0.0;
    double worst_even = 0.0;
    double worst_reflect = 0.0;
    double worst_range = 0.0;
    for (int i = 0; i < 200; ++i) {
        const BlochVector a = random_direction(gen);
        const BlochVector b = random_direction(gen);
        const double odd = correlation(odd_state(), a, b);
        const double even = correlation(even_state(), a, b);
        worst_odd = std::max(worst_odd, std::abs(odd - closed_form_correlation(Parity::odd, a, b)));
        worst_even = std::max(worst_even, std::abs(even - closed_form_correlation(Parity::even, a, b)));
        worst_reflect = std::max(worst_reflect, std::abs(even - a.dot({b.x, b.y, -b.z})));
        worst_range = std::max({worst_range, std::abs(odd) - 1.0, std::abs(even) - 1.0});
    }
    CHECK(worst_odd <= kTol);
    CHECK(worst_even <= kTol);
    CHECK(worst_reflect <= kTol);
    CHECK(worst_range <= kTol);
}

TEST_CASE("even parity with linear analyzers reduces to a.b") {
    std::mt19937_64 gen(23);
    std::uniform_real_distribution<double> azimuth(0.0, kTwoPi);
    for (int i = 0; i < 50; ++i) {
        const double p = azimuth(gen);
        const double q = azimuth(gen);
        const BlochVector a{std::cos(p), std::sin(p), 0.0};
        const BlochVector b{std::cos(q), std::sin(q), 0.0};
        CHECK(std::abs(correlation(even_state(), a, b) - a.dot(b)) <= kTol);
    }
}

TEST_CASE("correlation rejects non-unit analyzers") {
    CHECK_THROWS_AS((void)correlation(odd_state(), {2.0, 0.0, 0.0}, {1.0, 0.0, 0.0}), InvalidDirection);
    CHECK_THROWS_AS((void)joint_probabilities(odd_state(), {1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}), InvalidDirection);
}

TEST_CASE("joint probabilities examples") {
    const BlochVector a = BlochVector{0.3, -0.4, 0.5}.normalized();
    CHECK(max_diff(joint_probabilities(odd_state(), a, a), {0.0, 0.5, 0.5, 0.0}) <= kTol);
    CHECK(max_diff(joint_probabilities(odd_state(), a, -a), {0.5, 0.0, 0.0, 0.5}) <= kTol);
    const BlochVector z{0.0, 0.0, 1.0};
    CHECK(max_diff(joint_probabilities(even_state(), z, z), {0.0, 0.5, 0.5, 0.0}) <= kTol);
}

TEST_CASE("joint probabilities are consistent with the correlation") {
    std::mt19937_64 gen(24);
    for (int i = 0; i < 200; ++i) {
        const BlochVector a = random_direction(gen);
        const BlochVector b = random_direction(gen);
        const OutcomeProbabilities odd = joint_probabilities(odd_state(), a, b);
        CHECK(max_diff(odd, singlet_oracle(a, b)) <= kTol);
        for (Parity parity : {Parity::odd, Parity::even}) {
            const TwoPhotonState state = state_for(parity);
            const OutcomeProbabilities p = joint_probabilities(state, a, b);
            CHECK(std::abs(p.sum() - 1.0) <= kTol);
            CHECK(std::abs(p.p_pp + p.p_pm - 0.5) <= kTol);
            CHECK(std::abs(p.p_pp + p.p_mp - 0.5) <= kTol);
            CHECK(std::abs(p.correlation() - correlation(state, a, b)) <= kTol);
            for (double x : p.as_array()) {
                CHECK(x >= -kTol);
                CHECK(x <= 1.0 + kTol);
            }
        }
    }
}

TEST_CASE("parity on both photons keeps each parity ray") {
    const TwoPhotonState odd = odd_state();
    const TwoPhotonState odd_image = parity_apply_both(odd);
    CHECK(std::abs(fidelity(odd, odd_image) - 1.0) <= kTol);
    MESSAGE("two-photon parity eigenvalue of the odd state: " << inner(odd, odd_image));

    const TwoPhotonState even = even_state();
    const TwoPhotonState even_image = parity_apply_both(even);
    CHECK(std::abs(fidelity(even, even_image) - 1.0) <= kTol);
    MESSAGE("two-photon parity eigenvalue of the even state: " << inner(even, even_image));
}
