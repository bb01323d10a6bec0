#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "spinphoton/eigen4.hpp"
#include "spinphoton/noise.hpp"
#include "spinphoton/state.hpp"
#include "spinphoton/witness.hpp"

using namespace spinphoton;

TEST_CASE("noisy state mixing") {
    const CMat4 rho = density_matrix(cx(0.9));

    const CMat4 mixed = noisy_state(rho, 0.0);
    CHECK(max_abs_diff(mixed, cx(0.25) * CMat4::identity()) < 1e-15);

    CHECK(max_abs_diff(noisy_state(rho, 1.0), rho) == 0.0);

    CHECK(noisy_state(rho, 0.5)(0, 0).real() == doctest::Approx(0.375).epsilon(1e-14));

    CHECK_THROWS_AS(noisy_state(rho, -0.1), std::domain_error);
    CHECK_THROWS_AS(noisy_state(rho, 1.1), std::domain_error);

    for (double v : {0.0, 0.2, 0.5, 0.8, 1.0}) {
        for (double g : {0.0, 0.4, 0.9, 1.0}) {
            const CMat4 rv = noisy_state(density_matrix(cx(g)), v);
            CHECK(hermiticity_error(rv) < 1e-14);
            CHECK(std::abs(rv.trace() - 1.0) < 1e-12);
            const EigenSystem4 es = hermitian_eigs(rv);
            CHECK(es.eigenvalues[0] > -1e-10);
        }
    }
}

TEST_CASE("noisy pt spectrum closed forms") {
    // v = 1 recovers the pure-state negativity
    CHECK(noisy_pt_spectrum(0.9, 1.0)[3] == doctest::Approx(-0.21794).epsilon(1e-4));
    CHECK(noisy_pt_spectrum(0.9, 1.0)[3] == doctest::Approx(negativity_closed_form(0.9)).epsilon(1e-12));

    const std::array<double, 4> flat = noisy_pt_spectrum(0.3, 0.0);
    for (double l : flat) CHECK(l == doctest::Approx(0.25).epsilon(1e-14));

    // the absolute bound: |gamma| = 0, v = 1/3 puts the minimum at zero
    CHECK(std::abs(noisy_pt_spectrum(0.0, 1.0 / 3.0)[3]) < 1e-15);

    // eigenvalues sum to one
    for (double v : {0.1, 0.5, 0.77, 1.0}) {
        for (double g : {0.0, 0.3, 0.9, 1.0}) {
            const std::array<double, 4> spec = noisy_pt_spectrum(g, v);
            CHECK(spec[0] + spec[1] + spec[2] + spec[3] == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("noisy pt spectrum matches the numeric eigendecomposition") {
    for (double v : {0.0, 0.25, 0.5, 1.0 / 3.0, 0.8, 1.0}) {
        for (double g : {0.05, 0.3, 0.670222, 0.9, 0.99}) {
            std::array<double, 4> closed = noisy_pt_spectrum(g, v);
            std::sort(closed.begin(), closed.end());
            const CMat4 pt = partial_transpose_matter(noisy_state(density_matrix(cx(g)), v));
            const EigenSystem4 es = hermitian_eigs(pt);
            for (int j = 0; j < 4; ++j) CHECK(std::abs(es.eigenvalues[j] - closed[j]) < 1e-10);
            // only the last closed-form entry can be negative
            const std::array<double, 4> ordered = noisy_pt_spectrum(g, v);
            CHECK(ordered[0] >= -1e-15);
            CHECK(ordered[1] >= -1e-15);
            CHECK(ordered[2] >= -1e-15);
        }
    }
}

TEST_CASE("critical noise") {
    CHECK(critical_noise(0.0) == 1.0 / 3.0);
    CHECK(critical_noise(1.0) == 1.0);
    CHECK(critical_noise(0.924) == doctest::Approx(0.5666).epsilon(1e-4));

    // strictly increasing in |gamma|
    double prev = critical_noise(0.0);
    for (int i = 1; i <= 40; ++i) {
        const double cur = critical_noise(i / 40.0);
        CHECK(cur > prev);
        prev = cur;
    }

    // bisection oracle: the sign change of the noisy minimum eigenvalue
    for (int i = 0; i <= 20; ++i) {
        const double g = i / 20.0;
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (noisy_pt_spectrum(g, mid)[3] > 0.0)
                lo = mid;
            else
                hi = mid;
        }
        CHECK(std::abs(0.5 * (lo + hi) - critical_noise(g)) < 1e-9);
    }

    // sign contract on both sides of the threshold
    for (double g : {0.0, 0.3, 0.7, 0.95}) {
        const double vc = critical_noise(g);
        CHECK(noisy_pt_spectrum(g, std::min(1.0, vc + 1e-6))[3] < 0.0);
        CHECK(noisy_pt_spectrum(g, vc - 1e-6)[3] > 0.0);
    }
}

TEST_CASE("gamma from critical noise") {
    CHECK(gamma_from_vcrit(1.0 / 3.0) == doctest::Approx(0.0).epsilon(1e-7));
    CHECK(gamma_from_vcrit(1.0) == 1.0);
    CHECK(gamma_from_vcrit(0.5666) == doctest::Approx(0.924).epsilon(1e-3));
    CHECK_THROWS_AS(gamma_from_vcrit(0.2), std::domain_error);

    for (int i = 0; i <= 40; ++i) {
        const double v = 1.0 / 3.0 + (2.0 / 3.0) * i / 40.0;
        CHECK(std::abs(critical_noise(gamma_from_vcrit(v)) - v) < 1e-10);
    }
}

TEST_CASE("noise analysis bundle") {
    const NoiseAnalysis na = analyze_noise(0.9, 0.8);
    CHECK(na.v == 0.8);
    CHECK(na.lambda_neg_noisy == doctest::Approx(noisy_pt_spectrum(0.9, 0.8)[3]).epsilon(1e-14));
    CHECK(na.v_critical == doctest::Approx(1.0 / (1.0 + 2.0 * std::sqrt(1.0 - 0.81))).epsilon(1e-12));
    CHECK(na.eigenvalues[0] + na.eigenvalues[1] + na.eigenvalues[2] + na.eigenvalues[3] ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(na.v_critical >= 1.0 / 3.0);
    CHECK(na.v_critical <= 1.0);
}

TEST_CASE("entanglement classification is strict at the boundary") {
    for (double g : {0.0, 0.5, 0.9}) {
        const double vc = critical_noise(g);
        CHECK_FALSE(noisy_state_entangled(g, vc));
        CHECK(noisy_state_entangled(g, std::min(1.0, vc + 1e-9)));
        CHECK_FALSE(noisy_state_entangled(g, vc - 1e-9));
    }
    CHECK_FALSE(noisy_state_entangled(1.0, 1.0));  // separable state never becomes entangled
}
