#pragma once

#include <cstdint>
#include <complex>

#include "spinphoton/stokes.hpp"

namespace spinphoton {

// Scaled-amplitude sampling configuration.  The physical-scale pulse
// (|alpha| ~ 1e13) is not samplable; the estimator is validated at
// |alpha|, |beta| <~ 8 where the photon-count distributions fit in a
// truncated Fock grid.  alpha1/alpha2 are the two branch amplitudes
// (equal magnitude), beta the local-oscillator amplitude.
struct MonteCarloConfig {
    long n_trials = 100000;
    std::uint64_t seed = 1;
    cx alpha1 = 3.0;
    cx alpha2 = 3.0;
    cx beta = 3.0;
    int fock_cutoff = 0;  // 0: derived as mean + 10 sqrt(mean) per mode
    int threads = 1;
};

enum class MatterAxis { x, y, z };

struct McEstimate {
    double estimate;
    double std_error;  // bootstrap
    long n_trials;
};

// One correlator <sigma_axis (x) S'_j> estimated by sampling n_trials
// joint outcomes: a projective matter measurement along the chosen axis,
// then photon counts from the exact conditional two-mode distribution.
// Accumulates sum(m S_j) / sum(S_0) per the normalised-estimator rule.
// stokes_index in {1, 2, 3}; S_3 runs shift the splitter phase by pi/2,
// S_2 runs bypass the splitter.  lo.theta_lo + lo.phi_beta sets the LO
// phase; cfg.beta supplies the magnitude (its own phase must agree with
// lo.phi_beta).
// Throws std::invalid_argument on infeasible cutoff (tail mass > 1e-9).
McEstimate mc_correlator(const MonteCarloConfig& cfg, MatterAxis axis, int stokes_index, const LOConfig& lo);

// Cutoff suggested by the invariant mean + 10 sqrt(mean) over all modes.
int suggested_fock_cutoff(const MonteCarloConfig& cfg);

}  // namespace spinphoton
