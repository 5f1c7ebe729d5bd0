#ifndef PTSCATTER_PHASES_HPP
#define PTSCATTER_PHASES_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "ptscatter/scatter.hpp"
#include "ptscatter/spectrum.hpp"

namespace ptscatter {

// Eigenvalues of S = [[r, t'], [t, r']]:
//   lambda_pm = ((r + r') +- sqrt((r - r')^2 + 4 t t')) / 2
// with the principal square root. Branch continuity across an energy sweep
// is handled by trace_argand.
std::pair<Complex, Complex> eigenvalues(const TwoPortScattering& s);

// lambda = e^{i theta} with theta = theta_re + i theta_im:
//   theta_re = arg lambda in (-pi, pi],  theta_im = -ln|lambda|.
// Subunitary |lambda| < 1 maps to theta_im > 0. Throws ZeroEigenvalueError.
struct Eigenphase {
    double theta_re = 0.0;
    double theta_im = 0.0;
};
Eigenphase eigenphase_split(Complex lambda);

// Two branch-tracked eigenvalue trajectories over an energy sweep. The
// Argand point of a sample is the eigenvalue itself (radius e^{-theta_im}).
// Branches are paired between consecutive energies by minimal total
// |d lambda|; max_jump/median_jump expose the residual discontinuity at a
// branch point (reported, not hidden).
struct ArgandTrace {
    std::vector<double> energy;
    std::vector<Complex> branch1;
    std::vector<Complex> branch2;
    double max_jump = 0.0;     // largest per-step |d lambda| over both branches
    double median_jump = 0.0;  // median per-step |d lambda|
};

ArgandTrace trace_argand(const LayeredPotential& potential, const EnergyWindow& window);

struct PhaseHistogram {
    std::vector<double> bin_edges;       // n_bins + 1 values spanning [-pi, pi]
    std::vector<std::size_t> counts1;    // branch 1
    std::vector<std::size_t> counts2;    // branch 2
};

// Uniform bins over [-pi, pi] of theta_re per branch; the last bin includes
// its right edge. Requires n_bins >= 2.
PhaseHistogram phase_histogram(const ArgandTrace& trace, int n_bins);

// Fraction of theta_re samples (both branches) within `radius` rad of +-pi.
double phase_mass_near_pi(const ArgandTrace& trace, double radius);

}  // namespace ptscatter

#endif
