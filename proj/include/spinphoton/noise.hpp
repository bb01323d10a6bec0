#pragma once

#include <array>

#include "spinphoton/linalg.hpp"

namespace spinphoton {

// rho_v = v rho + (1 - v)/4 * identity.  Throws for v outside [0, 1].
CMat4 noisy_state(const CMat4& rho, double v);

// Closed-form eigenvalues of the partially transposed noisy state, in the
// order {(1+v+2v g)/4, (1+v-2v g)/4, (1-v+2v s)/4, (1-v-2v s)/4} with
// g = |gamma|, s = sqrt(1-g^2).  Only the last can be negative.
std::array<double, 4> noisy_pt_spectrum(double gamma_mag, double v);

// v_critical = 1 / (1 + 2 sqrt(1 - |gamma|^2)); the noisy PT minimum
// changes sign there.  Entanglement survives strictly above it.
double critical_noise(double gamma_mag);

// Inverse of critical_noise on [1/3, 1]: |gamma| = sqrt(1 - ((1-v)/(2v))^2).
// Throws std::domain_error for v < 1/3.
double gamma_from_vcrit(double v);

struct NoiseAnalysis {
    double v;
    std::array<double, 4> eigenvalues;
    double lambda_neg_noisy;  // the sign-carrying eigenvalue (1-v-2v s)/4
    double v_critical;
};

NoiseAnalysis analyze_noise(double gamma_mag, double v);

// Strictly above the critical noise parameter; the boundary itself counts
// as not entangled.
bool noisy_state_entangled(double gamma_mag, double v);

}  // namespace spinphoton
