#ifndef PTSCATTER_SPECTRUM_HPP
#define PTSCATTER_SPECTRUM_HPP

#include <functional>
#include <optional>
#include <vector>

#include "ptscatter/potential.hpp"
#include "ptscatter/scatter.hpp"

namespace ptscatter {

struct EnergyWindow {
    double e_min = 0.15;  // eV
    double e_max = 0.30;  // eV
    int n_points = 4001;
};

struct SpectrumSweep {
    LayeredPotential potential;
    std::vector<double> energy;  // eV, strictly increasing
    std::vector<double> transmission;        // T  = |t|^2
    std::vector<double> reflection;          // R  = |r|^2
    std::vector<double> transmission_prime;  // T' = |t'|^2
    std::vector<double> reflection_prime;    // R' = |r'|^2
    std::vector<double> defect_left;
    std::vector<double> defect_right;
};

struct Resonance {
    double position = 0.0;    // eV, refined peak location
    double height = 0.0;      // T at the refined position
    double fwhm = 0.0;        // eV, full width at half prominence
    double q = 0.0;           // position / fwhm
    double prominence = 0.0;  // topographic, from the sweep grid
};

// Uniform-grid evaluation of the cascade over [e_min, e_max]. Parallel over
// grid points, deterministic ordering. The window must stay inside the
// resonance band (above the shallowest interior level, below the tallest
// barrier); otherwise throws WindowViolationError.
SpectrumSweep sweep(const LayeredPotential& potential, double e_min, double e_max,
                    int n_points);
SpectrumSweep sweep(const LayeredPotential& potential, const EnergyWindow& window);

// Local maxima of T with topographic prominence >= prominence_min, refined by
// golden-section maximization of the continuous T(E) to |dE| < 1e-9 eV. FWHM
// comes from the half-prominence crossings, located by bisection. Sorted by
// position; empty result allowed.
std::vector<Resonance> find_peaks(const SpectrumSweep& sweep, double prominence_min);

// Same detector on an arbitrary transmission function over a given grid
// (used for synthetic inputs and by find_peaks itself).
std::vector<Resonance> find_peaks_on(const std::function<double(double)>& t_of_e,
                                     const std::vector<double>& grid,
                                     double prominence_min);

struct PeakSettings {
    int n_points = 4001;
    double prominence_rel = 1e-2;  // relative to max T over the sweep
};

struct ResonancePair {
    Resonance lower;
    std::optional<Resonance> upper;  // absent once the doublet has coalesced

    int count() const { return upper ? 2 : 1; }
};

// Tracks the doublet inside `window`: two resonances before coalescence, one
// after. With more than two detections the two most prominent are kept.
// Throws NoneFoundError when no peak clears the prominence threshold.
ResonancePair resonance_pair(const LayeredPotential& potential,
                             const EnergyWindow& window,
                             const PeakSettings& settings = {});

}  // namespace ptscatter

#endif
