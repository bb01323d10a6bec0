#include "spinphoton/witness.hpp"

#include <cmath>
#include <stdexcept>

#include "spinphoton/state.hpp"

namespace spinphoton {

CMat4 partial_transpose_matter(const CMat4& rho) {
    if (hermiticity_error(rho) > 1e-10 * std::max(1.0, max_abs(rho)))
        throw std::invalid_argument("partial_transpose_matter: input is not Hermitian");
    CMat4 out;
    for (int m = 0; m < 2; ++m)
        for (int mp = 0; mp < 2; ++mp)
            for (int p = 0; p < 2; ++p)
                for (int pp = 0; pp < 2; ++pp) out(2 * m + p, 2 * mp + pp) = rho(2 * mp + p, 2 * m + pp);
    return out;
}

double negativity_closed_form(double gamma_mag) {
    if (gamma_mag < 0.0 || gamma_mag > 1.0 + 1e-12)
        throw std::domain_error("negativity_closed_form: |gamma| must lie in [0, 1]");
    return -0.5 * std::sqrt(std::max(0.0, 1.0 - gamma_mag * gamma_mag));
}

double alpha_prime(double gamma_mag) {
    if (gamma_mag > 1.0 + 1e-12) throw std::domain_error("alpha_prime: |gamma| must lie in (0, 1]");
    if (!(gamma_mag > 0.0))
        throw std::domain_error("alpha_prime: diverges at |gamma| = 0; use the eigenvector route");
    return (1.0 + std::sqrt(std::max(0.0, 1.0 - gamma_mag * gamma_mag))) / gamma_mag;
}

CMat4 projector_negative(cx gamma) {
    const double g = std::abs(gamma);
    const double ap = alpha_prime(g);  // throws at gamma = 0
    const double phi = std::arg(gamma);
    const double norm = 1.0 / (2.0 * (1.0 + ap * ap));
    const cx e1 = std::polar(1.0, phi);
    const cx e2 = std::polar(1.0, 2.0 * phi);

    CMat4 pi;
    pi(0, 0) = 1.0;
    pi(0, 1) = ap * e1;
    pi(0, 2) = -ap * e1;
    pi(0, 3) = e2;
    pi(1, 1) = ap * ap;
    pi(1, 2) = -ap * ap;
    pi(1, 3) = ap * e1;
    pi(2, 2) = ap * ap;
    pi(2, 3) = -ap * e1;
    pi(3, 3) = 1.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < r; ++c) pi(r, c) = std::conj(pi(c, r));
    return norm * pi;
}

CMat4 witness_operator(cx gamma) { return partial_transpose_matter(projector_negative(gamma)); }

WitnessDecomposition pauli_decompose(const CMat4& W) {
    if (hermiticity_error(W) > 1e-10 * std::max(1.0, max_abs(W)))
        throw std::invalid_argument("pauli_decompose: input is not Hermitian");
    WitnessDecomposition d;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const cx t = (W * kron(pauli(i), pauli(j))).trace();
            d.coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0.25 * t.real();
        }
    return d;
}

CMat4 pauli_recompose(const WitnessDecomposition& d) {
    CMat4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const double c = d.coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (c != 0.0) out = out + cx(c) * kron(pauli(i), pauli(j));
        }
    return out;
}

WitnessDecomposition witness_coeffs_closed_form(cx gamma) {
    const double g = std::abs(gamma);
    const double ap = alpha_prime(g);
    const double phi = std::arg(gamma);
    const double n = 4.0 * (1.0 + ap * ap);
    const double ap2 = ap * ap;

    WitnessDecomposition d;
    auto& c = d.coeffs;
    c[0][0] = 0.25;
    c[3][3] = (1.0 - ap2) / n;
    c[1][1] = (std::cos(2.0 * phi) - ap2) / n;
    c[2][2] = (std::cos(2.0 * phi) + ap2) / n;
    c[1][2] = -std::sin(2.0 * phi) / n;
    c[2][1] = std::sin(2.0 * phi) / n;
    c[3][1] = 2.0 * ap * std::cos(phi) / n;
    c[1][3] = -2.0 * ap * std::cos(phi) / n;
    c[2][3] = -2.0 * ap * std::sin(phi) / n;
    c[3][2] = -2.0 * ap * std::sin(phi) / n;
    return d;
}

double exact_witness_expectation(cx gamma) {
    const CMat4 w = witness_operator(gamma);
    const CMat4 rho = density_matrix(gamma);
    return (w * rho).trace().real();
}

}  // namespace spinphoton
