#include "spinphoton/separable.hpp"

#include <cmath>
#include <stdexcept>

#include "spinphoton/rng.hpp"
#include "spinphoton/witness.hpp"

namespace spinphoton {

namespace {

std::array<double, 3> bloch_ball_point(RngStream& rng) {
    double x, y, z, r2;
    do {
        x = rng.next_normal();
        y = rng.next_normal();
        z = rng.next_normal();
        r2 = x * x + y * y + z * z;
    } while (r2 == 0.0);
    const double r = std::cbrt(rng.next_u01()) / std::sqrt(r2);
    return {x * r, y * r, z * r};
}

// rho = G G^dag / Tr(G G^dag) with Ginibre G: the Hilbert-Schmidt measure.
CMat2 hilbert_schmidt_qubit(RngStream& rng) {
    CMat2 g;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) g(r, c) = cx(rng.next_normal(), rng.next_normal());
    CMat2 rho;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            cx s = 0.0;
            for (int k = 0; k < 2; ++k) s += g(r, k) * std::conj(g(c, k));
            rho(r, c) = s;
        }
    const double tr = rho.trace().real();
    return cx(1.0 / tr) * rho;
}

CMat2 bloch_to_density(const std::array<double, 3>& b) {
    CMat2 rho = cx(0.5) * CMat2::identity();
    rho = rho + cx(0.5 * b[0]) * pauli(1);
    rho = rho + cx(0.5 * b[1]) * pauli(2);
    rho = rho + cx(0.5 * b[2]) * pauli(3);
    return rho;
}

}  // namespace

SeparableEnsemble sample_separable(std::uint64_t seed, int max_terms) {
    if (max_terms < 1) throw std::domain_error("sample_separable: max_terms must be >= 1");
    RngStream rng(seed);
    const int k = 1 + static_cast<int>(rng.next_u01() * max_terms);
    const int terms = std::min(k, max_terms);

    SeparableEnsemble ens;
    ens.seed = seed;
    ens.terms.resize(static_cast<std::size_t>(terms));

    // Flat simplex weights from normalised exponentials.
    double total = 0.0;
    for (SeparableTerm& t : ens.terms) {
        const double u = (static_cast<double>(rng.next_u64() >> 11) + 1.0) * 0x1.0p-53;
        t.weight = -std::log(u);
        total += t.weight;
    }
    for (SeparableTerm& t : ens.terms) t.weight /= total;

    for (SeparableTerm& t : ens.terms) {
        t.matter_bloch = bloch_ball_point(rng);
        t.photon_state = hilbert_schmidt_qubit(rng);
        t.intensity = std::pow(10.0, 2.0 + 4.0 * rng.next_u01());
    }
    return ens;
}

double witness_on_separable(const SeparableEnsemble& ens) {
    double num = 0.0, den = 0.0;
    for (const SeparableTerm& t : ens.terms) {
        const double sx = t.matter_bloch[0];
        const double photon_bloch_z = (t.photon_state(0, 0) - t.photon_state(1, 1)).real();
        num += t.weight * sx * t.intensity * photon_bloch_z;
        den += t.weight * t.intensity;
    }
    if (!(den > 0.0)) throw std::domain_error("witness_on_separable: zero total optical intensity");
    return 0.25 * (1.0 - num / den);
}

double full_witness_on_density(const CMat4& rho, cx gamma) {
    return (witness_operator(gamma) * rho).trace().real();
}

CMat4 ensemble_density(const SeparableEnsemble& ens) {
    CMat4 rho;
    for (const SeparableTerm& t : ens.terms)
        rho = rho + cx(t.weight) * kron(bloch_to_density(t.matter_bloch), t.photon_state);
    return rho;
}

}  // namespace spinphoton
