#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "spinphoton/core_model.hpp"

namespace spinphoton {

enum class Quantity { gamma_table, gamma_vs_separation, witness_vs_gamma, vcrit_vs_gamma, monte_carlo_check };

enum class OutputFormat { csv, json };

struct Axis {
    std::string name;
    std::vector<double> values;
};

Axis linspace_axis(const std::string& name, double lo, double hi, int points);

// Monte Carlo check parameters (scaled amplitudes).
struct McCheckParams {
    double alpha_mag = 3.0;
    double beta_mag = 3.0;
    double delta_phi = 0.2;
    double phi_l = 0.0;
    long n_trials = 100000;
    int fock_cutoff = 0;  // 0: auto
};

struct SweepSpec {
    Quantity quantity = Quantity::gamma_table;
    std::vector<Axis> grid;
    ExperimentConfig base;
    std::string output_path = "-";
    OutputFormat format = OutputFormat::csv;
    std::uint64_t seed = 12345;
    int threads = 1;
    McCheckParams mc;
};

using Cell = std::variant<double, std::string>;

struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<Cell>> rows;
    nlohmann::ordered_json summary;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Default grids reproducing the reference tables and curves.
std::vector<Axis> default_gamma_table_grid();
std::vector<Axis> default_gamma_sweep_grid();
std::vector<Axis> default_witness_grid();
std::vector<Axis> default_noise_grid();

// |gamma| over a mass x separation grid (separations in micrometres).
Table run_gamma_table(const SweepSpec& spec);

// (gamma_mag, measured witness at sin_phi = 1, exact witness, alpha') per
// grid point; summary holds the golden-section minimum and the sign change.
Table run_witness_curve(const SweepSpec& spec);

// (v, gamma_from_vcrit, round-trip residual) over a noise grid starting at
// the absolute bound v = 1/3.
Table run_noise_curve(const SweepSpec& spec);

// Per-correlator closed-form value, MC estimate, bootstrap error and
// z-score; summary.pass is true iff all |z| < 4.
Table run_mc_check(const SweepSpec& spec);

Table run_sweep(const SweepSpec& spec);

// 6 significant digits; scientific for |v| < 1e-3, plain otherwise.
std::string format_number(double v);

std::string table_to_csv(const Table& table);
std::string table_to_json(const Table& table, const SweepSpec& spec);

// Serialises per spec.format and writes to spec.output_path ("-" = stdout).
// Throws IoError with path context on failure.
void write_table(const Table& table, const SweepSpec& spec);

}  // namespace spinphoton
