#include "spinphoton/state.hpp"

#include <cmath>
#include <stdexcept>

namespace spinphoton {

namespace {

double orth_component(cx gamma) {
    const double g2 = std::norm(gamma);
    if (g2 > 1.0 + 2e-12) throw std::domain_error("|gamma| must not exceed 1");
    return std::sqrt(std::max(0.0, 1.0 - g2));
}

}  // namespace

GramSchmidtCoeffs gram_schmidt_coeffs(cx gamma) {
    return GramSchmidtCoeffs{gamma, orth_component(gamma)};
}

StateVector4 joint_state(cx gamma) {
    const double c2 = orth_component(gamma);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    StateVector4 psi;
    psi.amp[0] = inv_sqrt2;
    psi.amp[1] = 0.0;
    psi.amp[2] = inv_sqrt2 * gamma;
    psi.amp[3] = inv_sqrt2 * c2;
    return psi;
}

CMat4 density_matrix(cx gamma) {
    const StateVector4 psi = joint_state(gamma);
    return outer(psi, psi);
}

CMat2 reduced_photon_state(const CMat4& rho) {
    if (hermiticity_error(rho) > 1e-10)
        throw std::invalid_argument("reduced_photon_state: input is not Hermitian");
    if (std::abs(rho.trace() - 1.0) > 1e-10)
        throw std::invalid_argument("reduced_photon_state: input trace is not 1");
    CMat2 out;
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) out(p, q) = rho(p, q) + rho(2 + p, 2 + q);
    return out;
}

}  // namespace spinphoton
