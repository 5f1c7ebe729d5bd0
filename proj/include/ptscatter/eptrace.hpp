#ifndef PTSCATTER_EPTRACE_HPP
#define PTSCATTER_EPTRACE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ptscatter/potential.hpp"
#include "ptscatter/spectrum.hpp"

namespace ptscatter {

struct EpTraceEntry {
    double gamma = 0.0;                  // eV
    double big_gamma = 0.0;              // reported convention (wavenumber form)
    double big_gamma_energy_form = 0.0;  // verbatim energy-units map
    ResonancePair resonances;
    std::optional<double> splitting;     // E_upper - E_lower, absent post-merge
};

struct EpTrace {
    std::vector<EpTraceEntry> entries;  // gamma strictly increasing
    double energy_ref = 0.0;            // eV, reference energy for the Gamma maps
};

// One resonance_pair evaluation per gamma. The grid must start at 0; the
// gamma = 0 doublet fixes energy_ref (mean of the two positions) unless a
// value is supplied. NoneFoundError from the pair search propagates with the
// offending gamma attached to the message.
EpTrace trace(const DimerFamily& family, const std::vector<double>& gammas,
              const EnergyWindow& window, const PeakSettings& settings = {},
              std::optional<double> energy_ref = std::nullopt);

struct EpResult {
    double gamma_ep = 0.0;
    double big_gamma_ep = 0.0;              // reported convention
    double big_gamma_ep_energy_form = 0.0;  // verbatim map
    double energy_ref = 0.0;
};

// Bisection on the transmission-peak count (fixed prominence threshold,
// fixed sweep resolution) between a two-peak gamma_lo and a one-peak
// gamma_hi, to |interval| < tol_gamma. Throws BracketError if the endpoint
// counts are not (2, 1).
EpResult locate_ep(const DimerFamily& family, double gamma_lo, double gamma_hi,
                   double tol_gamma, const EnergyWindow& window,
                   const PeakSettings& settings = {},
                   std::optional<double> energy_ref = std::nullopt);

struct PowerLawFit {
    double amplitude = 0.0;     // A in y = A x^B
    double exponent = 0.0;      // B
    double rms_residual = 0.0;  // of the log-log fit
    double x_min = 0.0, x_max = 0.0;
    int n_points = 0;
};

// Ordinary least squares of ln y on ln x. Requires >= 5 points with
// x > 0, y > 0 (InsufficientDataError otherwise).
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points);

// True-coalescence estimate: the measured peak-merge point lies slightly
// below the eigenvalue coalescence because overlapping maxima pull together,
// so gamma* is extrapolated from the two-level form dE^2 = C (gamma*^2 -
// gamma^2), fit linearly in gamma^2 over gamma in [0.2, 0.9] * gamma_merge.
double estimate_coalescence_gamma(const EpTrace& trace, double gamma_merge);

// Splitting power law dE = A x^B against the EP distance x = Gamma* - Gamma
// (reported convention), fitted over gamma in [0.5, 1) * gamma_merge. The
// near-merge entries stay in: with the extrapolated anchor they remain
// informative, and the square-root regime lives next to the EP.
PowerLawFit splitting_fit(const EpTrace& trace, double gamma_merge);

}  // namespace ptscatter

#endif
