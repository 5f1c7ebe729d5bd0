#ifndef PTSCATTER_WAVEFIELD_HPP
#define PTSCATTER_WAVEFIELD_HPP

#include <vector>

#include "ptscatter/potential.hpp"
#include "ptscatter/scatter.hpp"

namespace ptscatter {

enum class Incidence { left, right };

// Region coefficients of the stationary scattering state, in the convention
//   psi_1 = a_1 e^{i k_1 x} + b_1 e^{-i k_1 x}
//   psi_i = b_i e^{i k_i x} + a_i e^{-i k_i x}   (i >= 2)
// with centered coordinates (structure spans [-W/2, W/2]). For left
// incidence a_1 = 1 and a_N = 0.
struct RegionAmplitudes {
    double energy = 0.0;
    Incidence incidence = Incidence::left;
    std::vector<Complex> a;            // per region
    std::vector<Complex> b;            // per region
    std::vector<Complex> wavenumbers;  // per region
    std::vector<double> interfaces;    // N-1 abscissas, nm

    std::size_t n_regions() const { return a.size(); }
    int region_index(double x) const;
    Complex psi(double x) const;
    Complex dpsi(double x) const;

    // S-matrix amplitudes referenced to the outermost interfaces (the same
    // convention the cascade produces). Left incidence yields (r, t); right
    // incidence yields (r', t').
    std::pair<Complex, Complex> scattering_amplitudes() const;
};

struct SampledWavefunction {
    std::vector<double> x;        // nm, strictly increasing, symmetric about 0
    std::vector<Complex> psi;
    std::vector<int> region;      // region index per sample (0-based)
};

// Direct boundary-matching solve: 2(N-1) continuity equations for psi and
// psi' at all interfaces, assembled in region-local bases for conditioning
// and polished with one step of iterative refinement. This is the
// independent oracle for the cascade. Throws SingularSystemError (with a
// condition estimate) when the matching matrix is numerically singular.
RegionAmplitudes solve_amplitudes(const LayeredPotential& potential, double energy,
                                  Incidence incidence = Incidence::left);

// Both incidence directions assembled into the full S-matrix.
TwoPortScattering oracle_smatrix(const LayeredPotential& potential, double energy);

// Analytic plane-wave evaluation on a uniform grid covering the structure
// plus lead_padding nm of lead on each side. The grid is symmetric about the
// structure center (odd n_points recommended). Requires n_points >= two per
// region.
SampledWavefunction sample_wavefunction(const RegionAmplitudes& amps, int n_points,
                                        double lead_padding = 0.2);

// Even-weight fraction of the phase-aligned wavefunction about `center`:
// rotate psi so sum(psi^2) is real non-negative, split Re psi into even and
// odd parts, return |even|^2/(|even|^2+|odd|^2). 1 = symmetric, 0 =
// antisymmetric. Throws DegenerateError when ||psi|| < 1e-30 and
// InvalidParameterError if the grid is not symmetric about `center`.
double symmetry_score(const SampledWavefunction& wf, double center = 0.0);

enum class SymmetryClass { symmetric, antisymmetric, mixed };

// score > 0.9 -> symmetric, score < 0.1 -> antisymmetric, else mixed.
SymmetryClass classify_symmetry(double score);
const char* to_string(SymmetryClass c);

// Max over interfaces of |d psi| + |d psi'| * 1 nm, normalized by the largest
// interface |psi|. Self-check metric for the solver.
double continuity_residual(const RegionAmplitudes& amps);

}  // namespace ptscatter

#endif
