#include "spinphoton/stokes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spinphoton/witness.hpp"

namespace spinphoton {

double visibility(double alpha_mag, double beta_mag) {
    if (alpha_mag == 0.0 && beta_mag == 0.0)
        throw std::domain_error("visibility: undefined when both amplitudes vanish");
    return 2.0 * alpha_mag * beta_mag / (alpha_mag * alpha_mag + beta_mag * beta_mag);
}

BeamSplitterOutputs beam_splitter_outputs(cx a, cx b, double theta_lo) {
    const cx rotated = std::polar(1.0, theta_lo) * a;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return BeamSplitterOutputs{inv_sqrt2 * (b + rotated), inv_sqrt2 * (b - rotated)};
}

namespace {

double s1_mean(cx a, cx b, double theta) { return 2.0 * (std::conj(b) * a * std::polar(1.0, theta)).real(); }

}  // namespace

StokesMeans stokes_means(cx a, cx b, double theta_lo) {
    StokesMeans s;
    s.s0 = std::norm(a) + std::norm(b);
    s.s1 = s1_mean(a, b, theta_lo);
    s.s2 = std::norm(b) - std::norm(a);
    s.s3 = s1_mean(a, b, theta_lo + std::numbers::pi / 2.0);
    return s;
}

CorrelatorSet correlators_closed_form(const JointStateParams& sp, double alpha_mag, const LOConfig& lo_s1,
                                      const LOConfig& lo_s3) {
    const double g = sp.gamma_mag;
    const double phi = sp.arg_gamma;
    const double half_dphi = 0.5 * sp.delta_phi;
    const double v = visibility(alpha_mag, lo_s1.beta_mag);
    const double d1 = (lo_s1.phi_beta + lo_s1.theta_lo) - sp.mean_phase;
    const double d3 = (lo_s3.phi_beta + lo_s3.theta_lo) - sp.mean_phase;

    CorrelatorSet c;
    c.visibility = v;
    c.phi_beta_1 = lo_s1.phi_beta;
    c.phi_beta_3 = lo_s3.phi_beta;
    c.sz_s1 = -g * v * std::sin(half_dphi) * std::sin(d1);
    c.sz_s3 = g * v * std::sin(half_dphi) * std::cos(d3);
    c.sx_s1 = g * v * std::cos(phi + half_dphi) * std::cos(d1);
    c.sx_s2 = g * v * std::sin(phi + half_dphi) * std::sin(half_dphi);
    c.sx_s3 = g * v * std::cos(phi + half_dphi) * std::sin(d3);
    c.sy_s1 = g * v * std::sin(phi + half_dphi) * std::cos(d1);
    c.sy_s2 = -g * v * std::sin(half_dphi) * std::cos(phi + half_dphi);
    c.sy_s3 = g * v * std::sin(phi + half_dphi) * std::sin(d3);
    return c;
}

MeasuredWitness measured_witness(const CorrelatorSet& corr, double ap, double phi) {
    if (!(ap >= 1.0 - 1e-12)) throw std::domain_error("measured_witness: alpha' must be >= 1");
    const double ap2 = ap * ap;
    const double c2p = std::cos(2.0 * phi);
    const double s2p = std::sin(2.0 * phi);

    MeasuredWitness w;
    w.t0 = 1.0 + ap2;  // <sigma_0 (x) S'_0> = 1 by normalisation
    w.ts1 = (1.0 - ap2) * corr.sz_s1 - 2.0 * ap * (std::cos(phi) * corr.sx_s1 + std::sin(phi) * corr.sy_s1);
    w.ts2 = (c2p - ap2) * corr.sx_s2 + s2p * corr.sy_s2;
    w.ts3 = (c2p + ap2) * corr.sy_s3 - s2p * corr.sx_s3 - 2.0 * ap * std::sin(phi) * corr.sz_s3;
    w.total = (w.t0 + w.ts1 + w.ts2 + w.ts3) / (4.0 * (1.0 + ap2));
    return w;
}

double measured_witness_closed(double gamma_mag, double sin_phi) {
    if (!(gamma_mag > 0.0) || gamma_mag > 1.0 + 1e-12)
        throw std::domain_error("measured_witness_closed: |gamma| must lie in (0, 1]");
    if (sin_phi < -1.0 - 1e-12 || sin_phi > 1.0 + 1e-12)
        throw std::domain_error("measured_witness_closed: sin_phi must lie in [-1, 1]");
    const double ap = alpha_prime(gamma_mag);
    const double ap2 = ap * ap;
    return ((1.0 + ap2) - 2.0 * gamma_mag * ap + gamma_mag * (1.0 - ap2) * sin_phi) / (4.0 * (1.0 + ap2));
}

namespace {

double witness_at_phase(const JointStateParams& sp, double ap, double phi_beta_3) {
    const LOConfig lo1{1.0, sp.mean_phase, 0.0};
    const LOConfig lo3{1.0, phi_beta_3, 0.0};
    const CorrelatorSet corr = correlators_closed_form(sp, 1.0, lo1, lo3);
    return measured_witness(corr, ap, sp.arg_gamma).total;
}

}  // namespace

PhaseScanResult lo_phase_scan(const JointStateParams& sp, int grid_size) {
    if (grid_size < 8) throw std::domain_error("lo_phase_scan: grid_size must be >= 8");
    const double ap = alpha_prime(sp.gamma_mag);
    const double two_pi = 2.0 * std::numbers::pi;

    double best_phase = 0.0;
    double best_value = witness_at_phase(sp, ap, 0.0);
    for (int i = 1; i < grid_size; ++i) {
        const double phase = two_pi * i / grid_size;
        const double value = witness_at_phase(sp, ap, phase);
        if (value < best_value) {
            best_value = value;
            best_phase = phase;
        }
    }

    // Golden-section refinement around the best grid point.
    const double h = two_pi / grid_size;
    double lo = best_phase - h;
    double hi = best_phase + h;
    const double inv_gold = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_gold * (hi - lo);
    double x2 = lo + inv_gold * (hi - lo);
    double f1 = witness_at_phase(sp, ap, x1);
    double f2 = witness_at_phase(sp, ap, x2);
    while (hi - lo > 1e-8) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_gold * (hi - lo);
            f1 = witness_at_phase(sp, ap, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_gold * (hi - lo);
            f2 = witness_at_phase(sp, ap, x2);
        }
    }
    const double refined = 0.5 * (lo + hi);
    const double refined_value = witness_at_phase(sp, ap, refined);
    if (refined_value < best_value) {
        best_value = refined_value;
        best_phase = refined;
    }
    return PhaseScanResult{best_phase, best_value};
}

}  // namespace spinphoton
