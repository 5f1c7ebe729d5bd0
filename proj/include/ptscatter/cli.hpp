#ifndef PTSCATTER_CLI_HPP
#define PTSCATTER_CLI_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ptscatter/potential.hpp"
#include "ptscatter/spectrum.hpp"

namespace ptscatter {

// Resolved run configuration. Loaded from a JSON document with strict key
// checking (unknown keys are rejected); every field has a paper-geometry
// default so an empty document is a valid config.
struct RunConfig {
    DimerParams geometry;  // gamma field unused; gammas below drive the runs
    double hbar2_over_2m = kHbar2Over2mElectron;
    std::vector<double> gammas{0.0};       // eV
    EnergyWindow window;                   // e_min, e_max, n_points
    double prominence_rel = 1e-2;
    std::optional<double> energy_ref;      // eV; defaults to the doublet mean

    int wavefunction_points = 2001;
    double lead_padding = 0.2;   // nm

    int histogram_bins = 64;

    double ep_gamma_lo = 0.0;    // eV
    double ep_gamma_hi = 0.05;   // eV
    double ep_tol_gamma = 1e-6;  // eV
    int ep_trace_points = 28;    // fit-trace resolution over (0, gamma_ep)

    std::filesystem::path output_dir = "out";

    DimerFamily family() const { return DimerFamily{geometry, hbar2_over_2m}; }
};

// Parse and validate a config document. Throws ConfigError with a key path
// on unknown keys, type mismatches, or values violating the potential-module
// invariants.
RunConfig config_from_json_text(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

// Command entry points. Each writes CSV/JSON files into output_dir (created
// if needed, write-then-rename) and returns the paths written. Numeric
// formatting is fixed (17 significant digits, lowercase scientific) so
// identical configs produce byte-identical outputs.
std::vector<std::filesystem::path> cmd_sweep(const RunConfig& config);
std::vector<std::filesystem::path> cmd_wavefunction(const RunConfig& config);
std::vector<std::filesystem::path> cmd_phases(const RunConfig& config);
std::vector<std::filesystem::path> cmd_ep(const RunConfig& config);

}  // namespace ptscatter

#endif
