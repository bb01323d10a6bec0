#include "spinphoton/noise.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinphoton {

namespace {

void check_range(double x, double lo, double hi, const char* what) {
    if (!(x >= lo) || !(x <= hi)) throw std::domain_error(std::string(what) + " out of range");
}

}  // namespace

CMat4 noisy_state(const CMat4& rho, double v) {
    check_range(v, 0.0, 1.0, "noisy_state: v");
    CMat4 out = cx(v) * rho;
    const double mix = 0.25 * (1.0 - v);
    for (int i = 0; i < 4; ++i) out(i, i) += mix;
    return out;
}

std::array<double, 4> noisy_pt_spectrum(double gamma_mag, double v) {
    check_range(gamma_mag, 0.0, 1.0 + 1e-12, "noisy_pt_spectrum: |gamma|");
    check_range(v, 0.0, 1.0, "noisy_pt_spectrum: v");
    const double g = std::min(gamma_mag, 1.0);
    const double s = std::sqrt(std::max(0.0, 1.0 - g * g));
    return {0.25 * (1.0 + v + 2.0 * v * g), 0.25 * (1.0 + v - 2.0 * v * g), 0.25 * (1.0 - v + 2.0 * v * s),
            0.25 * (1.0 - v - 2.0 * v * s)};
}

double critical_noise(double gamma_mag) {
    check_range(gamma_mag, 0.0, 1.0 + 1e-12, "critical_noise: |gamma|");
    const double g = std::min(gamma_mag, 1.0);
    return 1.0 / (1.0 + 2.0 * std::sqrt(std::max(0.0, 1.0 - g * g)));
}

double gamma_from_vcrit(double v) {
    if (v < 1.0 / 3.0 - 1e-15) throw std::domain_error("gamma_from_vcrit: no overlap achieves v below 1/3");
    check_range(v, 0.0, 1.0, "gamma_from_vcrit: v");
    const double r = (1.0 - v) / (2.0 * v);
    return std::sqrt(std::max(0.0, 1.0 - r * r));
}

NoiseAnalysis analyze_noise(double gamma_mag, double v) {
    NoiseAnalysis out;
    out.v = v;
    out.eigenvalues = noisy_pt_spectrum(gamma_mag, v);
    out.lambda_neg_noisy = out.eigenvalues[3];
    out.v_critical = critical_noise(gamma_mag);
    return out;
}

bool noisy_state_entangled(double gamma_mag, double v) { return v > critical_noise(gamma_mag); }

}  // namespace spinphoton
