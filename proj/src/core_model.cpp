#include "spinphoton/core_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinphoton {

void PhysicalConstants::validate() const {
    if (!(G > 0.0) || !(c > 0.0) || !(hbar > 0.0))
        throw std::invalid_argument("PhysicalConstants: G, c, hbar must all be positive");
}

std::vector<std::string> ExperimentConfig::validate() const {
    if (!(mass_kg > 0.0)) throw std::invalid_argument("ExperimentConfig: mass must be positive");
    if (!(tau_s > 0.0)) throw std::invalid_argument("ExperimentConfig: tau must be positive");
    if (!(r0_m > 0.0)) throw std::invalid_argument("ExperimentConfig: r0 must be positive");
    if (!(lambda_m > 0.0)) throw std::invalid_argument("ExperimentConfig: lambda must be positive");
    if (!(alpha_mag >= 0.0)) throw std::invalid_argument("ExperimentConfig: |alpha| must be non-negative");

    std::vector<std::string> warnings;
    if (std::abs(x_r_m - x_l_m) > r0_m / 100.0)
        warnings.push_back("superposition size |x_r - x_l| exceeds r0/100; the linearised 1/r expansion degrades");
    return warnings;
}

double angular_frequency(double lambda_m, const PhysicalConstants& consts) {
    consts.validate();
    if (!(lambda_m > 0.0)) throw std::domain_error("angular_frequency: wavelength must be positive");
    return 2.0 * std::numbers::pi * consts.c / lambda_m;
}

double coupling_strength(const ExperimentConfig& cfg, const PhysicalConstants& consts, double x_s_m) {
    cfg.validate();
    const double omega = angular_frequency(cfg.lambda_m, consts);
    return 4.0 * consts.G * cfg.mass_kg * consts.hbar * omega * x_s_m / (consts.c * consts.c * cfg.r0_m * cfg.r0_m);
}

double phase_difference(const ExperimentConfig& cfg, const PhysicalConstants& consts) {
    cfg.validate();
    const double omega = angular_frequency(cfg.lambda_m, consts);
    return 4.0 * consts.G * cfg.mass_kg * omega * (cfg.x_r_m - cfg.x_l_m) * cfg.tau_s /
           (consts.c * consts.c * cfg.r0_m * cfg.r0_m);
}

cx overlap_gamma(double alpha_mag, double delta_phi) {
    if (!(alpha_mag >= 0.0)) throw std::domain_error("overlap_gamma: |alpha| must be non-negative");
    const double n = alpha_mag * alpha_mag;
    const double half = std::sin(0.5 * delta_phi);
    const double mag = std::exp(-2.0 * n * half * half);
    const double phase = n * std::sin(delta_phi);
    return std::polar(mag, phase);
}

double linear_entropy(cx gamma) {
    const double g2 = std::norm(gamma);
    if (g2 > 1.0 + 2e-12) throw std::domain_error("linear_entropy: |gamma| must not exceed 1");
    return 0.5 * (1.0 - std::min(g2, 1.0));
}

JointStateParams joint_state_params(const ExperimentConfig& cfg, const PhysicalConstants& consts) {
    const double phi_l = coupling_strength(cfg, consts, cfg.x_l_m) * cfg.tau_s / consts.hbar;
    const double phi_r = coupling_strength(cfg, consts, cfg.x_r_m) * cfg.tau_s / consts.hbar;
    return joint_state_params_from_phases(cfg.alpha_mag, phi_l, phi_r);
}

JointStateParams joint_state_params_from_phases(double alpha_mag, double phi_l, double phi_r) {
    JointStateParams sp;
    sp.phi_l = phi_l;
    sp.phi_r = phi_r;
    sp.delta_phi = phi_r - phi_l;
    sp.mean_phase = 0.5 * (phi_l + phi_r);
    sp.gamma = overlap_gamma(alpha_mag, sp.delta_phi);
    sp.gamma_mag = std::abs(sp.gamma);
    sp.arg_gamma = std::arg(sp.gamma);
    return sp;
}

}  // namespace spinphoton
