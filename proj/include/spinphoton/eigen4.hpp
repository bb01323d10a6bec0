#pragma once

#include "spinphoton/linalg.hpp"

namespace spinphoton {

// Full spectral decomposition of a 4x4 Hermitian matrix.
//
// Eigenvalues ascending; eigenvectors unit-norm and pairwise orthogonal,
// each rotated so its largest-magnitude component is real and positive.
// Equal eigenvalues (within 1e-12) are ordered by lexicographic comparison
// of the phase-fixed eigenvectors, so the output is deterministic.
struct EigenSystem4 {
    std::array<double, 4> eigenvalues{};
    std::array<StateVector4, 4> eigenvectors{};
};

// Cyclic complex Jacobi iteration, run until the off-diagonal Frobenius
// norm drops below 1e-13 (relative to the matrix scale).
// Throws std::invalid_argument if M is not Hermitian within 1e-10.
EigenSystem4 hermitian_eigs(const CMat4& M);

}  // namespace spinphoton
