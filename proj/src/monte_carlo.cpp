#include "spinphoton/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "spinphoton/rng.hpp"

namespace spinphoton {

namespace {

// <u|w> for coherent amplitudes
cx coherent_overlap(cx u, cx w) { return std::exp(-0.5 * std::norm(u) - 0.5 * std::norm(w) + std::conj(u) * w); }

// A_n(u) = e^{-|u|^2/2} u^n / sqrt(n!), n = 0..cutoff
std::vector<cx> coherent_amplitudes(cx u, int cutoff) {
    std::vector<cx> a(static_cast<std::size_t>(cutoff) + 1);
    a[0] = std::exp(-0.5 * std::norm(u));
    for (int n = 0; n < cutoff; ++n)
        a[static_cast<std::size_t>(n) + 1] = a[static_cast<std::size_t>(n)] * u / std::sqrt(double(n + 1));
    return a;
}

// Photon-count distribution of c1 |u1, v1> + c2 |u2, v2| on the truncated
// grid, as a flattened CDF (row-major in (n1, n2), normalised to 1).
struct ConditionalDist {
    double prob = 0.0;  // probability of the matter outcome owning this branch
    std::vector<double> cdf;
};

ConditionalDist build_conditional(cx c1, cx c2, cx u1, cx v1, cx u2, cx v2, int cutoff) {
    const std::vector<cx> au1 = coherent_amplitudes(u1, cutoff);
    const std::vector<cx> av1 = coherent_amplitudes(v1, cutoff);
    const std::vector<cx> au2 = coherent_amplitudes(u2, cutoff);
    const std::vector<cx> av2 = coherent_amplitudes(v2, cutoff);

    const std::size_t side = static_cast<std::size_t>(cutoff) + 1;
    ConditionalDist d;
    d.cdf.resize(side * side);
    double total = 0.0;
    for (std::size_t n1 = 0; n1 < side; ++n1)
        for (std::size_t n2 = 0; n2 < side; ++n2) {
            total += std::norm(c1 * au1[n1] * av1[n2] + c2 * au2[n1] * av2[n2]);
            d.cdf[n1 * side + n2] = total;
        }

    const cx gamma_uv = coherent_overlap(u1, u2) * coherent_overlap(v1, v2);
    const double exact = std::norm(c1) + std::norm(c2) + 2.0 * (std::conj(c1) * c2 * gamma_uv).real();
    if (exact > 1e-15 && (exact - total) / exact > 1e-9)
        throw std::invalid_argument("mc_correlator: fock_cutoff too small (tail mass exceeds 1e-9)");

    for (double& c : d.cdf) c /= total;
    d.cdf.back() = 1.0;
    return d;
}

struct TrialCounts {
    int n1;
    int n2;
};

TrialCounts sample_counts(const ConditionalDist& d, double u, int cutoff) {
    const auto it = std::upper_bound(d.cdf.begin(), d.cdf.end(), u);
    const std::size_t idx = std::min(static_cast<std::size_t>(it - d.cdf.begin()), d.cdf.size() - 1);
    const std::size_t side = static_cast<std::size_t>(cutoff) + 1;
    return TrialCounts{static_cast<int>(idx / side), static_cast<int>(idx % side)};
}

}  // namespace

int suggested_fock_cutoff(const MonteCarloConfig& cfg) {
    const double a = std::abs(cfg.alpha1);
    const double b = std::abs(cfg.beta);
    const double mean = std::max({(a + b) * (a + b) / 2.0, a * a, b * b});
    return static_cast<int>(std::ceil(mean + 10.0 * std::sqrt(mean)));
}

McEstimate mc_correlator(const MonteCarloConfig& cfg, MatterAxis axis, int stokes_index, const LOConfig& lo) {
    if (cfg.n_trials < 1) throw std::invalid_argument("mc_correlator: n_trials must be >= 1");
    if (stokes_index < 1 || stokes_index > 3)
        throw std::invalid_argument("mc_correlator: stokes_index must be 1, 2 or 3");
    const double amag = std::abs(cfg.alpha1);
    if (std::abs(std::abs(cfg.alpha2) - amag) > 1e-9 * std::max(1.0, amag))
        throw std::invalid_argument("mc_correlator: branch amplitudes must have equal magnitude");

    const int cutoff = cfg.fock_cutoff > 0 ? cfg.fock_cutoff : suggested_fock_cutoff(cfg);
    const cx beta = std::polar(std::abs(cfg.beta), lo.phi_beta);

    // Branch-conditional mode amplitudes seen by the photon counters.
    cx u1, v1, u2, v2;
    if (stokes_index == 2) {  // splitter bypassed: S2 = n_b - n_a
        u1 = beta;
        v1 = cfg.alpha1;
        u2 = beta;
        v2 = cfg.alpha2;
    } else {
        const double theta = lo.theta_lo + (stokes_index == 3 ? std::numbers::pi / 2.0 : 0.0);
        const BeamSplitterOutputs o1 = beam_splitter_outputs(cfg.alpha1, beta, theta);
        const BeamSplitterOutputs o2 = beam_splitter_outputs(cfg.alpha2, beta, theta);
        u1 = o1.a1;
        v1 = o1.a2;
        u2 = o2.a1;
        v2 = o2.a2;
    }

    // Matter outcome +1 / -1: collapse coefficients and outcome probability.
    const cx gamma_uv = coherent_overlap(u1, u2) * coherent_overlap(v1, v2);
    cx c2_plus, c2_minus;
    double p_plus;
    switch (axis) {
        case MatterAxis::x:
            c2_plus = 1.0;
            c2_minus = -1.0;
            p_plus = 0.5 * (1.0 + gamma_uv.real());
            break;
        case MatterAxis::y:
            c2_plus = cx(0.0, -1.0);
            c2_minus = cx(0.0, 1.0);
            p_plus = 0.5 * (1.0 + gamma_uv.imag());
            break;
        case MatterAxis::z:
        default:
            c2_plus = 0.0;
            c2_minus = 0.0;
            p_plus = 0.5;
            break;
    }
    p_plus = std::clamp(p_plus, 0.0, 1.0);
    if (p_plus > 1.0 - 1e-15) p_plus = 1.0;  // never sample a zero-probability branch
    if (p_plus < 1e-15) p_plus = 0.0;

    ConditionalDist plus, minus;
    if (p_plus > 1e-15) {
        if (axis == MatterAxis::z)
            plus = build_conditional(1.0, 0.0, u1, v1, u2, v2, cutoff);
        else
            plus = build_conditional(1.0, c2_plus, u1, v1, u2, v2, cutoff);
    }
    if (1.0 - p_plus > 1e-15) {
        if (axis == MatterAxis::z)
            minus = build_conditional(0.0, 1.0, u1, v1, u2, v2, cutoff);
        else
            minus = build_conditional(1.0, c2_minus, u1, v1, u2, v2, cutoff);
    }

    const long n = cfg.n_trials;
    std::vector<std::int32_t> m_sj(static_cast<std::size_t>(n));
    std::vector<std::int32_t> s0(static_cast<std::size_t>(n));

    auto run_block = [&](long begin, long end) {
        for (long k = begin; k < end; ++k) {
            const std::uint64_t base = 2 * static_cast<std::uint64_t>(k);
            const bool up = u01_at(cfg.seed, base) < p_plus;
            const ConditionalDist& dist = up ? plus : minus;
            const TrialCounts counts = sample_counts(dist, u01_at(cfg.seed, base + 1), cutoff);
            const int m = up ? 1 : -1;
            m_sj[static_cast<std::size_t>(k)] = static_cast<std::int32_t>(m * (counts.n1 - counts.n2));
            s0[static_cast<std::size_t>(k)] = static_cast<std::int32_t>(counts.n1 + counts.n2);
        }
    };

    const int workers = std::max(1, cfg.threads);
    if (workers == 1) {
        run_block(0, n);
    } else {
        std::vector<std::thread> pool;
        const long chunk = (n + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const long begin = w * chunk;
            const long end = std::min(n, begin + chunk);
            if (begin < end) pool.emplace_back(run_block, begin, end);
        }
        for (std::thread& t : pool) t.join();
    }

    // Integer accumulation: the reduction is exact, hence order-independent.
    std::int64_t num = 0, den = 0;
    for (long k = 0; k < n; ++k) {
        num += m_sj[static_cast<std::size_t>(k)];
        den += s0[static_cast<std::size_t>(k)];
    }
    if (den == 0) throw std::domain_error("mc_correlator: zero total photon flux");
    const double estimate = static_cast<double>(num) / static_cast<double>(den);

    // Bootstrap over trial resamples, on its own counter stream.
    constexpr int kResamples = 200;
    const std::uint64_t boot_seed = mix64(cfg.seed ^ 0xB007577A9ULL);
    double mean = 0.0, m2 = 0.0;
    for (int b = 0; b < kResamples; ++b) {
        std::int64_t bn = 0, bd = 0;
        const std::uint64_t base = static_cast<std::uint64_t>(b) * static_cast<std::uint64_t>(n);
        for (long i = 0; i < n; ++i) {
            const auto idx =
                static_cast<std::size_t>(u01_at(boot_seed, base + static_cast<std::uint64_t>(i)) * static_cast<double>(n));
            bn += m_sj[std::min(idx, static_cast<std::size_t>(n) - 1)];
            bd += s0[std::min(idx, static_cast<std::size_t>(n) - 1)];
        }
        const double est = bd == 0 ? 0.0 : static_cast<double>(bn) / static_cast<double>(bd);
        const double delta = est - mean;
        mean += delta / (b + 1);
        m2 += delta * (est - mean);
    }
    const double std_error = std::sqrt(m2 / (kResamples - 1));

    return McEstimate{estimate, std_error, n};
}

}  // namespace spinphoton
