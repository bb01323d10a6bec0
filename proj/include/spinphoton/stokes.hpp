#pragma once

#include "spinphoton/core_model.hpp"

namespace spinphoton {

// Local-oscillator settings for one experimental run.  The controllable
// phase is Theta = theta_lo + phi_beta; the closed-form correlators are
// stated at the reference theta_lo = 0, so only the sum enters.
struct LOConfig {
    double beta_mag = 1.0;
    double phi_beta = 0.0;
    double theta_lo = 0.0;
};

// The spin (x) Stokes expectation values of the measurement protocol,
// each taken in its own run: S'_1 runs at phi_beta_1, S'_3 runs at
// phi_beta_3, S'_2 runs bypass the beam splitter.
struct CorrelatorSet {
    double sz_s1 = 0.0;
    double sz_s3 = 0.0;
    double sx_s1 = 0.0;
    double sx_s2 = 0.0;
    double sx_s3 = 0.0;
    double sy_s1 = 0.0;
    double sy_s2 = 0.0;
    double sy_s3 = 0.0;
    double visibility = 1.0;
    double phi_beta_1 = 0.0;
    double phi_beta_3 = 0.0;
};

// V = 2|alpha||beta| / (|alpha|^2 + |beta|^2), in (0, 1].
// Throws std::domain_error when both amplitudes vanish.
double visibility(double alpha_mag, double beta_mag);

struct BeamSplitterOutputs {
    cx a1;  // (b + e^{i theta} a) / sqrt2
    cx a2;  // (b - e^{i theta} a) / sqrt2
};

BeamSplitterOutputs beam_splitter_outputs(cx a, cx b, double theta_lo);

// Coherent-state expectation values of the four Stokes observables for
// signal amplitude a and LO amplitude b.  S3 is produced by the pi/2
// phase shift of S1, so S1(theta + pi/2) == S3(theta) holds bit-exactly.
struct StokesMeans {
    double s0;  // |a|^2 + |b|^2
    double s1;  // 2 Re(conj(b) a e^{i theta})
    double s2;  // |b|^2 - |a|^2
    double s3;  // = s1 at theta + pi/2
};

StokesMeans stokes_means(cx a, cx b, double theta_lo);

// All eight correlators evaluated in closed form for the joint state,
// with per-run LO phases.  alpha_mag and lo.beta_mag fix the visibility.
CorrelatorSet correlators_closed_form(const JointStateParams& sp, double alpha_mag, const LOConfig& lo_s1,
                                      const LOConfig& lo_s3);

// Witness assembled from measured correlators, with the per-sector terms.
struct MeasuredWitness {
    double total;
    double t0;
    double ts1;
    double ts2;
    double ts3;
};

MeasuredWitness measured_witness(const CorrelatorSet& corr, double alpha_prime, double phi);

// [(1 + a'^2) - 2|gamma| a' + |gamma| (1 - a'^2) sin_phi] / (4 (1 + a'^2)),
// the witness at the optimised LO phases in the small-dphi, V = 1 regime.
double measured_witness_closed(double gamma_mag, double sin_phi);

struct PhaseScanResult {
    double best_phi_beta;  // the minimising phi_beta of the S'_3 runs
    double min_witness;
};

// Scans phi_beta of the S'_3 runs over a uniform grid on [0, 2pi) with
// phi_beta_1 held at the in-phase choice (= mean phase), then refines the
// minimum by golden-section search to 1e-8 phase tolerance.  Assumes the
// balanced configuration (V = 1).
PhaseScanResult lo_phase_scan(const JointStateParams& sp, int grid_size);

}  // namespace spinphoton
