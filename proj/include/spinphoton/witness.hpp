#pragma once

#include "spinphoton/eigen4.hpp"
#include "spinphoton/linalg.hpp"

namespace spinphoton {

// Partial transpose over the matter qubit: transposes the 2x2 block
// structure of the slow index.  Involutive and trace-preserving.
// Throws std::invalid_argument for non-Hermitian input.
CMat4 partial_transpose_matter(const CMat4& rho);

// lambda_neg = -sqrt(1 - |gamma|^2) / 2, the single negative eigenvalue
// of the partially transposed protocol state.
double negativity_closed_form(double gamma_mag);

// alpha' = (1 + sqrt(1 - |gamma|^2)) / |gamma|, >= 1.
// Throws std::domain_error at gamma_mag = 0 (the parameterisation diverges).
double alpha_prime(double gamma_mag);

// Rank-one projector onto the negative-eigenvalue eigenvector of rho^{T_M},
// in closed form via alpha' and phi = arg gamma.
// Throws std::domain_error at gamma = 0; use the hermitian_eigs route there.
CMat4 projector_negative(cx gamma);

// The witness operator Pi_-^{T_M} = partial transpose of projector_negative.
CMat4 witness_operator(cx gamma);

// Real coefficients c[i][j] over the basis sigma_i (x) sigma_j^{(e)},
// index order {0, x, y, z} for both factors.
struct WitnessDecomposition {
    std::array<std::array<double, 4>, 4> coeffs{};
};

// c[i][j] = Tr(W sigma_i (x) sigma_j) / 4.  Throws for non-Hermitian W.
WitnessDecomposition pauli_decompose(const CMat4& W);

CMat4 pauli_recompose(const WitnessDecomposition& d);

// The closed-form coefficient set of the witness operator: c_00 = 1/4,
// c_zz = (1 - a'^2)/N, c_xx = (cos2phi - a'^2)/N, c_yy = (cos2phi + a'^2)/N,
// c_xy = -c_yx = -sin2phi/N, c_zx = -c_xz = 2a' cosphi/N,
// c_yz = c_zy = -2a' sinphi/N, with N = 4(1 + a'^2).
WitnessDecomposition witness_coeffs_closed_form(cx gamma);

// Tr(witness_operator(gamma) * density_matrix(gamma)); equals
// negativity_closed_form(|gamma|), negative exactly when |gamma| < 1.
double exact_witness_expectation(cx gamma);

}  // namespace spinphoton
