#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "spinphoton/core_model.hpp"
#include "spinphoton/rng.hpp"
#include "spinphoton/stokes.hpp"
#include "spinphoton/witness.hpp"

using namespace spinphoton;

namespace {

constexpr double kPi = std::numbers::pi;

JointStateParams params_for(double gamma_mag, double arg_gamma, double delta_phi = 0.0, double mean_phase = 0.0) {
    JointStateParams sp;
    sp.gamma = std::polar(gamma_mag, arg_gamma);
    sp.gamma_mag = gamma_mag;
    sp.arg_gamma = arg_gamma;
    sp.delta_phi = delta_phi;
    sp.phi_l = mean_phase - 0.5 * delta_phi;
    sp.phi_r = mean_phase + 0.5 * delta_phi;
    sp.mean_phase = mean_phase;
    return sp;
}

CorrelatorSet optimal_correlators(const JointStateParams& sp) {
    const LOConfig lo1{1.0, sp.mean_phase, 0.0};
    const LOConfig lo3{1.0, sp.mean_phase - kPi / 2.0, 0.0};
    return correlators_closed_form(sp, 1.0, lo1, lo3);
}

}  // namespace

TEST_CASE("visibility") {
    CHECK(visibility(2.5, 2.5) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(visibility(1.0, 0.0) == 0.0);
    CHECK(visibility(1.0, 3.0) == doctest::Approx(0.6).epsilon(1e-14));
    CHECK_THROWS_AS(visibility(0.0, 0.0), std::domain_error);
}

TEST_CASE("beam splitter outputs") {
    const BeamSplitterOutputs lo_only = beam_splitter_outputs(cx(0.0), cx(2.0, 1.0), 0.7);
    CHECK(std::abs(lo_only.a1 - lo_only.a2) < 1e-15);
    CHECK(std::abs(lo_only.a1 - cx(2.0, 1.0) / std::sqrt(2.0)) < 1e-15);

    const BeamSplitterOutputs dark = beam_splitter_outputs(cx(1.0), cx(1.0), 0.0);
    CHECK(dark.a2 == cx(0.0));
    CHECK(std::abs(dark.a1 - cx(std::sqrt(2.0))) < 1e-15);

    const BeamSplitterOutputs rotated = beam_splitter_outputs(cx(1.0), cx(0.0, 1.0), kPi / 2.0);
    CHECK(std::abs(rotated.a1 - cx(0.0, std::sqrt(2.0))) < 1e-15);
    CHECK(std::abs(rotated.a2) < 1e-15);

    RngStream rng(0x5eed030);
    for (int rep = 0; rep < 100; ++rep) {
        const cx a(rng.next_normal(), rng.next_normal());
        const cx b(rng.next_normal(), rng.next_normal());
        const double theta = 2.0 * kPi * rng.next_u01();
        const BeamSplitterOutputs o = beam_splitter_outputs(a, b, theta);
        CHECK(std::norm(o.a1) + std::norm(o.a2) ==
              doctest::Approx(std::norm(a) + std::norm(b)).epsilon(1e-12));
    }
}

TEST_CASE("stokes means") {
    const StokesMeans dark = stokes_means(cx(1.5), cx(0.0), 0.4);
    CHECK(dark.s0 == doctest::Approx(2.25));
    CHECK(dark.s1 == 0.0);
    CHECK(dark.s2 == doctest::Approx(-2.25));
    CHECK(dark.s3 == 0.0);

    const StokesMeans aligned = stokes_means(cx(1.0), cx(1.0), 0.0);
    CHECK(aligned.s0 == doctest::Approx(2.0));
    CHECK(aligned.s1 == doctest::Approx(2.0));
    CHECK(aligned.s2 == 0.0);
    CHECK(std::abs(aligned.s3) < 1e-15);

    const StokesMeans quarter = stokes_means(cx(1.0), cx(1.0), kPi / 2.0);
    CHECK(std::abs(quarter.s1) < 1e-15);
    CHECK(quarter.s3 == doctest::Approx(-2.0).epsilon(1e-14));

    RngStream rng(0x5eed031);
    for (int rep = 0; rep < 200; ++rep) {
        const cx a(rng.next_normal(), rng.next_normal());
        const cx b(rng.next_normal(), rng.next_normal());
        const double theta = 4.0 * kPi * (rng.next_u01() - 0.5);
        const StokesMeans at = stokes_means(a, b, theta);
        // the phase-control identity holds bit-exactly
        CHECK(stokes_means(a, b, theta + kPi / 2.0).s1 == at.s3);
        // and the -2 Im closed form to rounding
        CHECK(at.s3 ==
              doctest::Approx(-2.0 * (std::conj(b) * a * std::polar(1.0, theta)).imag()).epsilon(1e-9));
        // S0 invariant under the LO phase
        CHECK(stokes_means(a, b, theta + 1.234).s0 == at.s0);
        // |S_j| <= S_0
        CHECK(std::abs(at.s1) <= at.s0 + 1e-12);
        CHECK(std::abs(at.s2) <= at.s0 + 1e-12);
        CHECK(std::abs(at.s3) <= at.s0 + 1e-12);
    }
}

TEST_CASE("closed-form correlators: separable limit") {
    const JointStateParams sp = params_for(1.0, 0.0, 0.0, 0.0);
    const CorrelatorSet c = optimal_correlators(sp);
    CHECK(c.sx_s1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.sz_s1 == 0.0);
    CHECK(std::abs(c.sz_s3) < 1e-12);
    CHECK(std::abs(c.sx_s2) < 1e-12);
    CHECK(std::abs(c.sy_s2) < 1e-12);
    CHECK(c.visibility == doctest::Approx(1.0));
}

TEST_CASE("closed-form correlators: optimal-phase reduction") {
    RngStream rng(0x5eed032);
    for (int rep = 0; rep < 50; ++rep) {
        const double g = 0.05 + 0.95 * rng.next_u01();
        const double phi = 2.0 * kPi * rng.next_u01();
        const JointStateParams sp = params_for(g, phi, 0.0, 0.4);
        const CorrelatorSet c = optimal_correlators(sp);
        // the four surviving correlators at dphi -> 0, V = 1
        CHECK(c.sx_s1 == doctest::Approx(g * std::cos(phi)).epsilon(1e-12));
        CHECK(c.sy_s1 == doctest::Approx(g * std::sin(phi)).epsilon(1e-12));
        CHECK(c.sx_s3 == doctest::Approx(-g * std::cos(phi)).epsilon(1e-12));
        CHECK(c.sy_s3 == doctest::Approx(-g * std::sin(phi)).epsilon(1e-12));
        CHECK(c.sz_s1 == 0.0);
        CHECK(c.sx_s2 == 0.0);
    }

    // the sin-phi-sensitive correlator reaches -0.9 at |gamma| = 0.9
    const JointStateParams peak = params_for(0.9, kPi / 2.0, 0.0, 0.0);
    CHECK(optimal_correlators(peak).sy_s3 == doctest::Approx(-0.9).epsilon(1e-12));

    // every normalized correlator stays within [-1, 1]
    RngStream rng2(0x5eed033);
    for (int rep = 0; rep < 100; ++rep) {
        const JointStateParams sp = params_for(rng2.next_u01(), 2.0 * kPi * rng2.next_u01(),
                                               rng2.next_u01(), rng2.next_u01());
        const LOConfig lo1{2.0, 2.0 * kPi * rng2.next_u01(), 0.0};
        const LOConfig lo3{2.0, 2.0 * kPi * rng2.next_u01(), 0.0};
        const CorrelatorSet c = correlators_closed_form(sp, 1.0, lo1, lo3);
        for (double v : {c.sz_s1, c.sz_s3, c.sx_s1, c.sx_s2, c.sx_s3, c.sy_s1, c.sy_s2, c.sy_s3}) {
            CHECK(std::abs(v) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("measured witness: separable state gives exactly zero") {
    const JointStateParams sp = params_for(1.0, 0.0, 0.0, 0.0);
    const MeasuredWitness w = measured_witness(optimal_correlators(sp), 1.0, 0.0);
    CHECK(w.t0 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(w.ts1 == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(std::abs(w.ts2) < 1e-12);
    CHECK(std::abs(w.ts3) < 1e-12);
    CHECK(std::abs(w.total) < 1e-12);
}

TEST_CASE("measured witness: landmark values") {
    // |gamma| = 0.9 at the effective optimum sin(phi) = 1:
    // sectors 0.25 - 0.2025 - 0.0981 (the printed rounding is 0.25 - 0.203 - 0.098)
    const JointStateParams sp = params_for(0.9, kPi / 2.0, 0.0, 0.0);
    const double ap = alpha_prime(0.9);
    const MeasuredWitness w = measured_witness(optimal_correlators(sp), ap, sp.arg_gamma);
    const double norm = 4.0 * (1.0 + ap * ap);
    CHECK(w.t0 / norm == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(w.ts1 / norm == doctest::Approx(-0.2025).epsilon(1e-3));
    CHECK(w.ts3 / norm == doctest::Approx(-0.0981).epsilon(1e-3));
    CHECK(w.total == doctest::Approx(-0.051).epsilon(2e-2));
    CHECK(w.total == doctest::Approx(measured_witness_closed(0.9, 1.0)).epsilon(1e-12));

    const JointStateParams sp924 = params_for(0.924, kPi / 2.0, 0.0, 0.0);
    const MeasuredWitness w924 = measured_witness(optimal_correlators(sp924), alpha_prime(0.924), kPi / 2.0);
    CHECK(w924.total == doctest::Approx(-0.052).epsilon(2e-2));
}

TEST_CASE("measured witness closed form") {
    CHECK(measured_witness_closed(1.0, 1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(measured_witness_closed(1.0, -0.3) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(measured_witness_closed(0.9, 1.0) == doctest::Approx(-0.0506).epsilon(1e-3));
    CHECK(measured_witness_closed(0.75, 1.0) == doctest::Approx(-0.015).epsilon(3e-2));

    // independent algebraic route: with s = sqrt(1 - g^2) the closed form
    // reduces to s (s - g t) / 4
    RngStream rng(0x5eed034);
    for (int rep = 0; rep < 200; ++rep) {
        const double g = 0.01 + 0.99 * rng.next_u01();
        const double t = 2.0 * rng.next_u01() - 1.0;
        const double s = std::sqrt(1.0 - g * g);
        CHECK(measured_witness_closed(g, t) == doctest::Approx(s * (s - g * t) / 4.0).epsilon(1e-11));
    }

    // agrees with measured_witness fed the optimal-phase correlators
    RngStream rng2(0x5eed035);
    for (int rep = 0; rep < 100; ++rep) {
        const double g = 0.05 + 0.95 * rng2.next_u01();
        const double phi = kPi / 2.0;  // sin(phi) = 1
        const JointStateParams sp = params_for(g, phi, 0.0, 0.7);
        const MeasuredWitness w = measured_witness(optimal_correlators(sp), alpha_prime(g), phi);
        CHECK(w.total == doctest::Approx(measured_witness_closed(g, 1.0)).epsilon(1e-12));
    }

    // sign structure across the detection window
    for (double g = 0.711; g < 0.999; g += 0.01) CHECK(measured_witness_closed(g, 1.0) < 0.0);
    for (double g = 0.05; g <= 0.70; g += 0.01) CHECK(measured_witness_closed(g, 1.0) >= 0.0);

    // continuous approach to zero at |gamma| -> 1
    CHECK(std::abs(measured_witness_closed(1.0 - 1e-9, 1.0)) < 1e-4);

    CHECK_THROWS_AS(measured_witness_closed(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(measured_witness_closed(0.5, 2.0), std::domain_error);
}

TEST_CASE("lo phase scan") {
    // dense-grid brute-force oracle
    const JointStateParams sp = params_for(0.9, kPi / 2.0, 0.0, 0.3);
    const double ap = alpha_prime(0.9);
    double brute = 1e9;
    const int dense = 100000;
    for (int i = 0; i < dense; ++i) {
        const double phase = 2.0 * kPi * i / dense;
        const LOConfig lo1{1.0, sp.mean_phase, 0.0};
        const LOConfig lo3{1.0, phase, 0.0};
        const double w = measured_witness(correlators_closed_form(sp, 1.0, lo1, lo3), ap, sp.arg_gamma).total;
        brute = std::min(brute, w);
    }

    const PhaseScanResult scan = lo_phase_scan(sp, 64);
    CHECK(scan.min_witness <= brute + 1e-9);
    CHECK(scan.min_witness == doctest::Approx(-0.0506).epsilon(1e-3));
    CHECK(scan.min_witness == doctest::Approx(measured_witness_closed(0.9, 1.0)).epsilon(1e-6));
    // attained where the sin-phi-sensitive correlator is extremal:
    // phi_beta(3) - mean_phase = -pi/2 (mod 2pi)
    const double offset = std::remainder(scan.best_phi_beta - sp.mean_phase, 2.0 * kPi);
    CHECK(std::abs(std::abs(offset) - kPi / 2.0) < 1e-4);

    // separable state: flat zero at every phase
    const JointStateParams flat = params_for(1.0, 0.0, 0.0, 0.0);
    const PhaseScanResult zero = lo_phase_scan(flat, 32);
    CHECK(std::abs(zero.min_witness) < 1e-12);

    // periodicity: shifting every phase by 2pi leaves the minimum unchanged
    JointStateParams shifted = sp;
    shifted.phi_l += 2.0 * kPi;
    shifted.phi_r += 2.0 * kPi;
    shifted.mean_phase += 2.0 * kPi;
    const PhaseScanResult again = lo_phase_scan(shifted, 64);
    CHECK(again.min_witness == doctest::Approx(scan.min_witness).epsilon(1e-10));

    CHECK_THROWS_AS(lo_phase_scan(sp, 4), std::domain_error);
}
