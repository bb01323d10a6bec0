#pragma once

#include "spinphoton/linalg.hpp"

namespace spinphoton {

// Expansion of the second branch coherent state in the orthonormal
// Gram-Schmidt basis {|e1>, |e2>}: |alpha_2> = c1 |e1> + c2 |e2>.
struct GramSchmidtCoeffs {
    cx c1;      // = gamma
    double c2;  // = sqrt(1 - |gamma|^2)
};

// All throw std::domain_error when |gamma| > 1 (beyond rounding slack).
GramSchmidtCoeffs gram_schmidt_coeffs(cx gamma);

// (1/sqrt2) (1, 0, gamma, sqrt(1-|gamma|^2)) in the ordered basis
// {|0 e1>, |0 e2>, |1 e1>, |1 e2>}.
StateVector4 joint_state(cx gamma);

// rho = |Psi><Psi| for the joint state above; rank one, trace one.
CMat4 density_matrix(cx gamma);

// Partial trace over the matter qubit (the slow index).
// Throws std::invalid_argument when rho is not Hermitian / unit trace.
CMat2 reduced_photon_state(const CMat4& rho);

}  // namespace spinphoton
