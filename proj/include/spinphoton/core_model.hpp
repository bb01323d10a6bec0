#pragma once

#include <complex>
#include <string>
#include <vector>

namespace spinphoton {

using cx = std::complex<double>;

// SI values; defaults follow the parameter set used for the reference tables.
struct PhysicalConstants {
    double G = 6.674e-11;        // m^3 kg^-1 s^-2
    double c = 3.0e8;            // m/s
    double hbar = 1.0545718e-34; // J s

    void validate() const;  // throws std::invalid_argument unless all > 0
};

// Physical inputs of one experiment: trapped mass, interaction time,
// ring radius, optical wavelength, laser amplitude and the two branch
// positions of the spatial superposition.
struct ExperimentConfig {
    double mass_kg = 10.0;
    double tau_s = 1.0;
    double r0_m = 0.25;
    double lambda_m = 1e-6;
    double alpha_mag = 1e13;  // |alpha|, dimensionless
    double x_l_m = 0.0;
    double x_r_m = 100e-6;

    // Throws std::invalid_argument on hard violations; returns soft
    // warnings (e.g. superposition size not small against r0).
    std::vector<std::string> validate() const;
};

// Derived quantities that fully parameterise the joint matter-photon state:
// the complex overlap gamma between the two branch coherent states and the
// branch phases phi_s = xi_s * tau / hbar.
struct JointStateParams {
    cx gamma;
    double gamma_mag;   // |gamma|
    double arg_gamma;   // phi = arg(gamma), principal value
    double delta_phi;   // phi_r - phi_l
    double phi_l;
    double phi_r;
    double mean_phase;  // (phi_l + phi_r) / 2
};

// omega = 2 pi c / lambda
double angular_frequency(double lambda_m, const PhysicalConstants& consts = {});

// xi_s = 4 G m hbar omega x_s / (c^2 r0^2), in joules
double coupling_strength(const ExperimentConfig& cfg, const PhysicalConstants& consts, double x_s_m);

// Delta phi = 4 G m omega (x_r - x_l) tau / (c^2 r0^2)
double phase_difference(const ExperimentConfig& cfg, const PhysicalConstants& consts = {});

// gamma = exp(-|alpha|^2 (1 - cos dphi)) * exp(i |alpha|^2 sin dphi).
// The real exponent is evaluated as 2 |alpha|^2 sin^2(dphi/2): for the
// physical regime (|alpha|^2 ~ 1e26, dphi ~ 1e-14) the naive 1 - cos
// form underflows to zero.  For |dphi| < 1e-3 the magnitude agrees with
// the small-angle form exp(-|alpha|^2 dphi^2 / 2) to 1e-6 relative.
cx overlap_gamma(double alpha_mag, double delta_phi);

// S_L = (1 - |gamma|^2) / 2, in [0, 1/2]
double linear_entropy(cx gamma);

JointStateParams joint_state_params(const ExperimentConfig& cfg, const PhysicalConstants& consts = {});

// Same derivation from explicit branch phases (used at scaled amplitudes).
JointStateParams joint_state_params_from_phases(double alpha_mag, double phi_l, double phi_r);

}  // namespace spinphoton
