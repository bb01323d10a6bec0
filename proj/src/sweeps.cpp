#include "spinphoton/sweeps.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <thread>

#include "spinphoton/monte_carlo.hpp"
#include "spinphoton/noise.hpp"
#include "spinphoton/rng.hpp"
#include "spinphoton/stokes.hpp"
#include "spinphoton/witness.hpp"

namespace spinphoton {

namespace {

// Evaluates fn(i) for i in [0, n) into a vector, in deterministic index
// order regardless of thread count.
template <typename F>
std::vector<std::vector<Cell>> parallel_rows(long n, int threads, F&& fn) {
    std::vector<std::vector<Cell>> rows(static_cast<std::size_t>(n));
    auto block = [&](long begin, long end) {
        for (long i = begin; i < end; ++i) rows[static_cast<std::size_t>(i)] = fn(i);
    };
    const int workers = std::max(1, threads);
    if (workers == 1 || n < 2 * workers) {
        block(0, n);
    } else {
        std::vector<std::thread> pool;
        const long chunk = (n + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const long begin = w * chunk;
            const long end = std::min(n, begin + chunk);
            if (begin < end) pool.emplace_back(block, begin, end);
        }
        for (std::thread& t : pool) t.join();
    }
    return rows;
}

double golden_min(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const double inv_gold = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_gold * (hi - lo);
    double x2 = lo + inv_gold * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_gold * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_gold * (hi - lo);
            f2 = f(x2);
        }
    }
    return 0.5 * (lo + hi);
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
    double flo = f(lo);
    for (int i = 0; i < 200 && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((flo <= 0.0) == (fm <= 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

nlohmann::ordered_json config_json(const SweepSpec& spec) {
    nlohmann::ordered_json cfg;
    switch (spec.quantity) {
        case Quantity::gamma_table: cfg["quantity"] = "gamma_table"; break;
        case Quantity::gamma_vs_separation: cfg["quantity"] = "gamma_vs_separation"; break;
        case Quantity::witness_vs_gamma: cfg["quantity"] = "witness_vs_gamma"; break;
        case Quantity::vcrit_vs_gamma: cfg["quantity"] = "vcrit_vs_gamma"; break;
        case Quantity::monte_carlo_check: cfg["quantity"] = "monte_carlo_check"; break;
    }
    if (spec.quantity == Quantity::gamma_table || spec.quantity == Quantity::gamma_vs_separation) {
        cfg["alpha"] = spec.base.alpha_mag;
        cfg["tau_s"] = spec.base.tau_s;
        cfg["r0_m"] = spec.base.r0_m;
        cfg["lambda_um"] = spec.base.lambda_m * 1e6;
    }
    if (spec.quantity == Quantity::monte_carlo_check) {
        cfg["alpha"] = spec.mc.alpha_mag;
        cfg["beta"] = spec.mc.beta_mag;
        cfg["delta_phi"] = spec.mc.delta_phi;
        cfg["trials"] = spec.mc.n_trials;
        cfg["seed"] = spec.seed;
    }
    return cfg;
}

}  // namespace

Axis linspace_axis(const std::string& name, double lo, double hi, int points) {
    if (points < 1) throw std::invalid_argument("axis '" + name + "': points must be >= 1");
    Axis ax{name, {}};
    ax.values.reserve(static_cast<std::size_t>(points));
    if (points == 1) {
        ax.values.push_back(lo);
        return ax;
    }
    for (int i = 0; i + 1 < points; ++i) ax.values.push_back(lo + (hi - lo) * i / (points - 1));
    ax.values.push_back(hi);  // endpoint exact regardless of rounding
    return ax;
}

std::vector<Axis> default_gamma_table_grid() {
    Axis mass{"mass_kg", {0.1, 1.0, 5.0, 10.0}};
    Axis sep{"sep_um", {1.0}};
    for (int s = 10; s <= 100; s += 10) sep.values.push_back(s);
    return {mass, sep};
}

std::vector<Axis> default_gamma_sweep_grid() {
    Axis mass{"mass_kg", {0.1, 1.0, 5.0, 10.0}};
    return {mass, linspace_axis("sep_um", 1.0, 100.0, 200)};
}

std::vector<Axis> default_witness_grid() { return {linspace_axis("gamma_mag", 0.70, 1.00, 61)}; }

std::vector<Axis> default_noise_grid() { return {linspace_axis("v", 1.0 / 3.0, 1.0, 101)}; }

Table run_gamma_table(const SweepSpec& spec) {
    const std::vector<Axis> grid = spec.grid.empty() ? default_gamma_table_grid() : spec.grid;
    if (grid.size() != 2 || grid[0].values.empty() || grid[1].values.empty())
        throw std::invalid_argument("gamma table needs a mass axis and a separation axis");

    const std::vector<double>& masses = grid[0].values;
    const std::vector<double>& seps = grid[1].values;
    const long n = static_cast<long>(masses.size() * seps.size());

    Table t;
    t.headers = {grid[0].name, grid[1].name, "gamma_mag"};
    {
        ExperimentConfig probe = spec.base;
        probe.mass_kg = masses.front();
        probe.x_l_m = 0.0;
        probe.x_r_m = *std::max_element(seps.begin(), seps.end()) * 1e-6;
        const std::vector<std::string> warnings = probe.validate();
        if (!warnings.empty()) t.summary["warnings"] = warnings;
    }
    t.rows = parallel_rows(n, spec.threads, [&](long i) {
        const std::size_t im = static_cast<std::size_t>(i) / seps.size();
        const std::size_t is = static_cast<std::size_t>(i) % seps.size();
        ExperimentConfig cfg = spec.base;
        cfg.mass_kg = masses[im];
        cfg.x_l_m = 0.0;
        cfg.x_r_m = seps[is] * 1e-6;
        const JointStateParams sp = joint_state_params(cfg);
        return std::vector<Cell>{masses[im], seps[is], sp.gamma_mag};
    });
    t.summary["cells"] = n;
    return t;
}

Table run_witness_curve(const SweepSpec& spec) {
    std::vector<Axis> grid = spec.grid.empty() ? default_witness_grid() : spec.grid;
    if (grid.size() != 1 || grid[0].values.empty())
        throw std::invalid_argument("witness curve needs a gamma_mag axis");
    for (double& g : grid[0].values) {
        if (!(g > 0.0) || g > 1.0 + 1e-12)
            throw std::invalid_argument("witness curve: gamma_mag must lie in (0, 1]");
        g = std::min(g, 1.0);
    }

    const std::vector<double>& gammas = grid[0].values;
    Table t;
    t.headers = {grid[0].name, "witness_meas", "witness_exact", "alpha_prime"};
    t.rows = parallel_rows(static_cast<long>(gammas.size()), spec.threads, [&](long i) {
        const double g = gammas[static_cast<std::size_t>(i)];
        return std::vector<Cell>{g, measured_witness_closed(g, 1.0), exact_witness_expectation(cx(g)), alpha_prime(g)};
    });

    auto f = [](double g) { return measured_witness_closed(g, 1.0); };
    const double lo = std::max(1e-6, *std::min_element(gammas.begin(), gammas.end()));
    const double hi = *std::max_element(gammas.begin(), gammas.end());
    const double gmin = golden_min(f, lo, hi, 1e-6);
    t.summary["min_gamma"] = gmin;
    t.summary["min_witness"] = f(gmin);
    if (f(0.5) > 0.0 && f(gmin) < 0.0) t.summary["sign_change_gamma"] = bisect_root(f, 0.5, gmin, 1e-9);
    return t;
}

Table run_noise_curve(const SweepSpec& spec) {
    const std::vector<Axis> grid = spec.grid.empty() ? default_noise_grid() : spec.grid;
    if (grid.size() != 1 || grid[0].values.empty()) throw std::invalid_argument("noise curve needs a v axis");

    const std::vector<double>& vs = grid[0].values;
    Table t;
    t.headers = {grid[0].name, "gamma_mag", "vcrit_roundtrip_err"};
    t.rows = parallel_rows(static_cast<long>(vs.size()), spec.threads, [&](long i) {
        const double v = vs[static_cast<std::size_t>(i)];
        const double g = gamma_from_vcrit(v);
        return std::vector<Cell>{v, g, std::abs(critical_noise(g) - v)};
    });
    t.summary["v_critical_min"] = 1.0 / 3.0;  // vertical asymptote of the curve
    return t;
}

Table run_mc_check(const SweepSpec& spec) {
    const McCheckParams& p = spec.mc;
    const JointStateParams sp = joint_state_params_from_phases(p.alpha_mag, p.phi_l, p.phi_l + p.delta_phi);
    const LOConfig lo1{p.beta_mag, sp.mean_phase, 0.0};
    const LOConfig lo3{p.beta_mag, sp.mean_phase - std::numbers::pi / 2.0, 0.0};
    const CorrelatorSet closed = correlators_closed_form(sp, p.alpha_mag, lo1, lo3);

    struct Entry {
        const char* name;
        MatterAxis axis;
        int stokes;
        double closed_value;
    };
    const std::array<Entry, 8> entries{{{"sz_s1", MatterAxis::z, 1, closed.sz_s1},
                                        {"sz_s3", MatterAxis::z, 3, closed.sz_s3},
                                        {"sx_s1", MatterAxis::x, 1, closed.sx_s1},
                                        {"sx_s2", MatterAxis::x, 2, closed.sx_s2},
                                        {"sx_s3", MatterAxis::x, 3, closed.sx_s3},
                                        {"sy_s1", MatterAxis::y, 1, closed.sy_s1},
                                        {"sy_s2", MatterAxis::y, 2, closed.sy_s2},
                                        {"sy_s3", MatterAxis::y, 3, closed.sy_s3}}};

    MonteCarloConfig mc;
    mc.n_trials = p.n_trials;
    mc.alpha1 = std::polar(p.alpha_mag, p.phi_l);
    mc.alpha2 = std::polar(p.alpha_mag, p.phi_l + p.delta_phi);
    mc.beta = p.beta_mag;
    mc.fock_cutoff = p.fock_cutoff;
    mc.threads = spec.threads;

    Table t;
    t.headers = {"correlator", "closed_form", "estimate", "std_error", "z_score"};
    double max_z = 0.0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Entry& e = entries[i];
        MonteCarloConfig run = mc;
        run.seed = rng_at(spec.seed, i);  // one experimental run per correlator
        const LOConfig& lo = e.stokes == 3 ? lo3 : lo1;
        const McEstimate est = mc_correlator(run, e.axis, e.stokes, lo);
        const double z = est.std_error > 0.0 ? (est.estimate - e.closed_value) / est.std_error
                                             : (std::abs(est.estimate - e.closed_value) < 1e-12 ? 0.0 : 1e9);
        max_z = std::max(max_z, std::abs(z));
        t.rows.push_back({std::string(e.name), e.closed_value, est.estimate, est.std_error, z});
    }
    t.summary["pass"] = max_z < 4.0;
    t.summary["max_abs_z"] = max_z;
    t.summary["trials"] = p.n_trials;
    return t;
}

Table run_sweep(const SweepSpec& spec) {
    switch (spec.quantity) {
        case Quantity::gamma_table:
        case Quantity::gamma_vs_separation: return run_gamma_table(spec);
        case Quantity::witness_vs_gamma: return run_witness_curve(spec);
        case Quantity::vcrit_vs_gamma: return run_noise_curve(spec);
        case Quantity::monte_carlo_check: return run_mc_check(spec);
    }
    throw std::invalid_argument("unknown sweep quantity");
}

std::string format_number(double v) {
    if (v == 0.0) return "0";
    char buf[40];
    if (std::abs(v) < 1e-3)
        std::snprintf(buf, sizeof buf, "%.5e", v);
    else
        std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

namespace {

std::string cell_text(const Cell& c) {
    if (std::holds_alternative<double>(c)) return format_number(std::get<double>(c));
    return std::get<std::string>(c);
}

}  // namespace

std::string table_to_csv(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.headers.size(); ++i) {
        if (i) out += ',';
        out += table.headers[i];
    }
    out += '\n';
    for (const std::vector<Cell>& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += cell_text(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string table_to_json(const Table& table, const SweepSpec& spec) {
    nlohmann::ordered_json doc;
    doc["config"] = config_json(spec);
    doc["rows"] = nlohmann::ordered_json::array();
    for (const std::vector<Cell>& row : table.rows) {
        nlohmann::ordered_json jrow;
        for (std::size_t i = 0; i < row.size() && i < table.headers.size(); ++i) {
            if (std::holds_alternative<double>(row[i]))
                jrow[table.headers[i]] = std::get<double>(row[i]);
            else
                jrow[table.headers[i]] = std::get<std::string>(row[i]);
        }
        doc["rows"].push_back(std::move(jrow));
    }
    doc["summary"] = table.summary;
    return doc.dump(2) + "\n";
}

void write_table(const Table& table, const SweepSpec& spec) {
    const std::string text =
        spec.format == OutputFormat::csv ? table_to_csv(table) : table_to_json(table, spec);
    if (spec.output_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(spec.output_path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + spec.output_path);
    out << text;
    if (!out) throw IoError("write failed: " + spec.output_path);
}

}  // namespace spinphoton
