// spinphoton: parameter sweeps and consistency checks for the spin-photon
// entanglement-witness model.  Subcommands write CSV or JSON tables; see
// README.md for the column layouts.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "spinphoton/core_model.hpp"
#include "spinphoton/sweeps.hpp"

namespace {

using namespace spinphoton;

struct CommonOpts {
    std::string config;
    std::string out = "-";
    std::string format = "csv";
    std::uint64_t seed = 12345;
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config, "flat key=value config file; keys match the long option names");
    cmd->add_option("--out", opts.out, "output path, '-' for stdout")->capture_default_str();
    cmd->add_option("--format", opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--seed", opts.seed, "PRNG seed")->capture_default_str();
    cmd->add_option("--threads", opts.threads, "worker threads")->check(CLI::Range(1, 256))->capture_default_str();
}

std::string trimmed(const std::string& s) {
    const std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Flat key=value config: '#' comments, keys named like the long options
// without the leading dashes.  Values may be comma-separated lists.
std::vector<std::pair<std::string, std::string>> read_flat_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string text = trimmed(line.substr(0, line.find('#')));
        if (text.empty()) continue;
        const std::size_t eq = text.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trimmed(text.substr(0, eq));
        const std::string value = trimmed(text.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key=value");
        entries.emplace_back(key, value);
    }
    return entries;
}

// Replaces "--config FILE" by the file's keys as ordinary flags, appended
// after the explicit arguments so that command-line flags win.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    std::string path;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            out.push_back(args[i]);
        }
    }
    if (path.empty()) return out;
    for (const auto& [key, value] : read_flat_config(path)) {
        const std::string flag = "--" + key;
        bool given = false;
        for (const std::string& a : out)
            if (a == flag || a.rfind(flag + "=", 0) == 0) given = true;
        if (given) continue;
        std::size_t start = 0;
        while (start <= value.size()) {  // comma-separated lists become repeats
            const std::size_t comma = value.find(',', start);
            const std::string item = trimmed(value.substr(start, comma - start));
            if (!item.empty()) out.push_back(flag + "=" + item);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return out;
}

struct PhysicsOpts {
    double alpha = 1e13;
    double tau_s = 1.0;
    double r0_m = 0.25;
    double lambda_um = 1.0;
};

void add_physics(CLI::App* cmd, PhysicsOpts& opts) {
    cmd->add_option("--alpha", opts.alpha, "laser amplitude |alpha|")->capture_default_str();
    cmd->add_option("--tau-s", opts.tau_s, "interaction time [s]")->capture_default_str();
    cmd->add_option("--r0-m", opts.r0_m, "ring radius [m]")->capture_default_str();
    cmd->add_option("--lambda-um", opts.lambda_um, "optical wavelength [um]")->capture_default_str();
}

void fill_spec(SweepSpec& spec, const CommonOpts& common, const PhysicsOpts& phys) {
    spec.output_path = common.out;
    spec.format = common.format == "json" ? OutputFormat::json : OutputFormat::csv;
    spec.seed = common.seed;
    spec.threads = common.threads;
    spec.base.alpha_mag = phys.alpha;
    spec.base.tau_s = phys.tau_s;
    spec.base.r0_m = phys.r0_m;
    spec.base.lambda_m = phys.lambda_um * 1e-6;
}

void emit(const Table& table, const SweepSpec& spec) {
    for (const std::string& w : spec.base.validate()) std::cerr << "warning: " << w << "\n";
    write_table(table, spec);
    std::ostream& info = spec.output_path == "-" ? std::cerr : std::cout;
    if (!table.summary.empty()) info << "summary: " << table.summary.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spin-photon entanglement witness sweeps"};
    app.require_subcommand(1);

    CommonOpts common;
    PhysicsOpts phys;

    // gamma-table: |gamma| over the reference mass x separation grid
    CLI::App* gamma_table = app.add_subcommand("gamma-table", "overlap magnitudes over a mass x separation grid");
    std::vector<double> masses{0.1, 1.0, 5.0, 10.0};
    std::vector<double> seps;
    add_common(gamma_table, common);
    add_physics(gamma_table, phys);
    gamma_table->add_option("--mass-kg", masses, "mass grid values [kg]");
    gamma_table->add_option("--sep-um", seps, "separation grid values [um] (default: 1,10,20..100)");

    // gamma-sweep: dense separation grid for curve data
    CLI::App* gamma_sweep = app.add_subcommand("gamma-sweep", "overlap vs separation, dense grid");
    std::vector<double> sweep_masses{0.1, 1.0, 5.0, 10.0};
    double sep_min = 1.0, sep_max = 100.0;
    int sep_points = 200;
    add_common(gamma_sweep, common);
    add_physics(gamma_sweep, phys);
    gamma_sweep->add_option("--mass-kg", sweep_masses, "mass grid values [kg]");
    gamma_sweep->add_option("--sep-min-um", sep_min, "smallest separation [um]")->capture_default_str();
    gamma_sweep->add_option("--sep-max-um", sep_max, "largest separation [um]")->capture_default_str();
    gamma_sweep->add_option("--sep-points", sep_points, "grid points")->check(CLI::Range(1, 1000000))->capture_default_str();

    // witness-curve: measured and exact witness vs |gamma|
    CLI::App* witness_curve = app.add_subcommand("witness-curve", "measured witness vs overlap magnitude");
    double gamma_min = 0.70, gamma_max = 1.00;
    int gamma_points = 61;
    add_common(witness_curve, common);
    witness_curve->add_option("--gamma-min", gamma_min, "")->capture_default_str();
    witness_curve->add_option("--gamma-max", gamma_max, "")->capture_default_str();
    witness_curve->add_option("--points", gamma_points, "")->check(CLI::Range(1, 1000000))->capture_default_str();

    // noise-curve: |gamma| vs critical noise parameter
    CLI::App* noise_curve = app.add_subcommand("noise-curve", "overlap magnitude vs critical noise parameter");
    double v_min = 1.0 / 3.0, v_max = 1.0;
    int v_points = 101;
    add_common(noise_curve, common);
    noise_curve->add_option("--v-min", v_min, "")->capture_default_str();
    noise_curve->add_option("--v-max", v_max, "")->capture_default_str();
    noise_curve->add_option("--points", v_points, "")->check(CLI::Range(1, 1000000))->capture_default_str();

    // mc-check: Monte Carlo validation of the closed-form correlators
    CLI::App* mc_check = app.add_subcommand("mc-check", "Monte Carlo check of the correlators at scaled amplitudes");
    McCheckParams mc;
    add_common(mc_check, common);
    mc_check->add_option("--alpha", mc.alpha_mag, "scaled signal amplitude")->capture_default_str();
    mc_check->add_option("--beta", mc.beta_mag, "scaled LO amplitude")->capture_default_str();
    mc_check->add_option("--dphi", mc.delta_phi, "branch phase difference [rad]")->capture_default_str();
    mc_check->add_option("--phi-l", mc.phi_l, "left branch phase [rad]")->capture_default_str();
    mc_check->add_option("--trials", mc.n_trials, "trials per correlator")->check(CLI::Range(1L, 100000000L))->capture_default_str();
    mc_check->add_option("--cutoff", mc.fock_cutoff, "Fock cutoff per mode, 0 = auto")->capture_default_str();

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = expand_config(args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    }

    try {
        SweepSpec spec;
        fill_spec(spec, common, phys);

        if (gamma_table->parsed()) {
            spec.quantity = Quantity::gamma_table;
            Axis sep_axis{"sep_um", seps};
            if (sep_axis.values.empty()) sep_axis = default_gamma_table_grid()[1];
            spec.grid = {Axis{"mass_kg", masses}, sep_axis};
            emit(run_gamma_table(spec), spec);
        } else if (gamma_sweep->parsed()) {
            spec.quantity = Quantity::gamma_vs_separation;
            spec.grid = {Axis{"mass_kg", sweep_masses}, linspace_axis("sep_um", sep_min, sep_max, sep_points)};
            emit(run_gamma_table(spec), spec);
        } else if (witness_curve->parsed()) {
            spec.quantity = Quantity::witness_vs_gamma;
            spec.grid = {linspace_axis("gamma_mag", gamma_min, gamma_max, gamma_points)};
            emit(run_witness_curve(spec), spec);
        } else if (noise_curve->parsed()) {
            spec.quantity = Quantity::vcrit_vs_gamma;
            spec.grid = {linspace_axis("v", v_min, v_max, v_points)};
            emit(run_noise_curve(spec), spec);
        } else if (mc_check->parsed()) {
            spec.quantity = Quantity::monte_carlo_check;
            spec.mc = mc;
            const Table report = run_mc_check(spec);
            emit(report, spec);
            if (!report.summary["pass"].get<bool>()) {
                std::cerr << "mc-check: FAIL (max |z| = " << report.summary["max_abs_z"].get<double>() << ")\n";
                return 2;
            }
        }
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
