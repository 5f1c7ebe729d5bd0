#ifndef PTSCATTER_POTENTIAL_HPP
#define PTSCATTER_POTENTIAL_HPP

#include <complex>
#include <vector>

namespace ptscatter {

using Complex = std::complex<double>;

// hbar^2/2m for a free electron, in eV nm^2.
inline constexpr double kHbar2Over2mElectron = 0.0380998212;

// One piecewise-constant slab. The outer two regions of a LayeredPotential are
// semi-infinite leads; their width is ignored. Sign convention: a lossy region
// carries potential_imag < 0 (V' - i*gamma), a gain region potential_imag > 0.
struct Region {
    double width = 0.0;           // nm
    double potential_real = 0.0;  // eV
    double potential_imag = 0.0;  // eV
};

struct LayeredPotential {
    std::vector<Region> regions;  // first and last are the leads (V = 0)
    double hbar2_over_2m = kHbar2Over2mElectron;  // eV nm^2

    std::size_t size() const { return regions.size(); }
    // Total width of the interior (non-lead) regions.
    double interior_width() const;
    // Interface abscissas, centered: the structure spans [-W/2, W/2].
    std::vector<double> interface_positions() const;
};

// Throws InvalidParameterError if the layout violates the structural
// invariants (>= 3 regions, interior widths > 0, leads at zero potential,
// all values finite).
void validate(const LayeredPotential& potential);

// PT-symmetric dimer parameters. Geometry (per scatterer): an outer barrier of
// width c and height v_barrier, a complex well of width a at v_prime -/+ i*gamma,
// and the shared central barrier of width b and height v_barrier.
//
// Note on the published geometry: the figure captions quote a = 1.15 nm and
// "b = 2c = 0.02 nm", but the transmission doublet printed alongside them
// (0.2086, 0.2615 eV) is only reproduced with outer barriers of 0.02 nm and a
// central barrier of 0.01 nm. paper_defaults() therefore uses c = 0.02,
// b = 0.01; the builder accepts any widths.
struct DimerParams {
    double a = 1.15;        // complex-region width, nm
    double c = 0.02;        // outer-barrier width, nm
    double b = 0.01;        // central-barrier width, nm
    double v_barrier = 50.0;  // eV
    double v_prime = 0.0;     // eV
    double gamma = 0.0;       // eV, balanced gain/loss strength

    static DimerParams paper_defaults() { return DimerParams{}; }
};

// Seven regions: lead | c,Vb | a,V'-ig | b,Vb | a,V'+ig | c,Vb | lead.
// The loss region comes first so waves incident from the left meet loss
// before gain. Throws InvalidParameterError on non-positive widths or
// v_barrier <= v_prime.
LayeredPotential build_dimer(const DimerParams& params,
                             double hbar2_over_2m = kHbar2Over2mElectron);

// Convenience for gamma sweeps at fixed geometry.
struct DimerFamily {
    DimerParams base;
    double hbar2_over_2m = kHbar2Over2mElectron;

    LayeredPotential at(double gamma) const;
};

// Principal-branch complex wavenumber sqrt((E - V)/(hbar^2/2m)) in 1/nm.
// A purely negative radicand lands on the upper branch (Im k > 0, evanescent
// decay); a lossy region (potential_imag < 0) gives Im k > 0 as well.
Complex wavenumber(const Region& region, double energy, double hbar2_over_2m);

// The published control-parameter map
//   Gamma = sqrt([ (hbar^2/m) g^2 + (E - V') ]^2 - (E - V')^2),
// evaluated verbatim with g = gamma in eV and hbar^2/m = 2 * hbar2_over_2m.
// Strictly increasing in |gamma|. Throws DomainError if the radicand is
// negative (requires energy_ref well below v_prime).
double gamma_to_big_gamma(double gamma, double energy_ref, double v_prime,
                          double hbar2_over_2m);

// Numerical inverse of gamma_to_big_gamma on gamma >= 0, to 1e-12 relative.
// Throws ConvergenceError (with the residual) if the tolerance is not met.
double big_gamma_to_gamma(double big_gamma, double energy_ref, double v_prime,
                          double hbar2_over_2m);

// Same printed formula, but with g read as the imaginary part of the
// loss-region wavenumber at energy_ref. Under that reading the relation is
// dimensionally consistent and collapses algebraically to Gamma = |gamma|;
// this is the convention used for reported Gamma values, since it reproduces
// the published Gamma scale (EP near 0.0266).
double big_gamma_from_wavenumber(double gamma, double energy_ref, double v_prime,
                                 double hbar2_over_2m);

}  // namespace ptscatter

#endif
