#pragma once

#include <cstdint>
#include <vector>

#include "spinphoton/linalg.hpp"

namespace spinphoton {

// One product term of a separable matter-photon state.  The photon side
// carries both its qubit density matrix (in the {e1, e2} logical basis)
// and the total optical intensity <S_0> of that preparation; the in-phase
// Stokes moment is <S_1> = <S_0> * (Bloch-z of the photon qubit), which
// keeps |<S_1>| <= <S_0> structurally.
struct SeparableTerm {
    double weight;
    std::array<double, 3> matter_bloch;  // norm <= 1
    CMat2 photon_state;
    double intensity;  // <S_0> > 0
};

struct SeparableEnsemble {
    std::vector<SeparableTerm> terms;
    std::uint64_t seed;
};

// K ~ uniform on [1, max_terms]; weights flat on the simplex; matter
// states uniform over the Bloch ball; photon qubits Hilbert-Schmidt
// distributed; intensities log-uniform on [1e2, 1e6].  Deterministic
// in the seed.
SeparableEnsemble sample_separable(std::uint64_t seed, int max_terms);

// The |gamma| = 1 witness of the separability bound, evaluated on the
// ensemble's moments: (1/4) (1 - sum_k p_k <sx>_k <S1>_k / sum_k p_k <S0>_k).
// Non-negative for every separable input; throws std::domain_error on
// zero total intensity.
double witness_on_separable(const SeparableEnsemble& ens);

// Trace inner product of witness_operator(gamma) with an arbitrary state;
// >= 0 on every separable 4x4 state, = lambda_neg on the protocol state.
double full_witness_on_density(const CMat4& rho, cx gamma);

// Convex combination sum_k p_k rho_m^k (x) rho_ph^k as a 4x4 state.
CMat4 ensemble_density(const SeparableEnsemble& ens);

}  // namespace spinphoton
