#ifndef PTSCATTER_SCATTER_HPP
#define PTSCATTER_SCATTER_HPP

#include <utility>

#include "ptscatter/potential.hpp"

namespace ptscatter {

// Two-port scattering amplitudes, S = [[r, t'], [t, r']]. r, t describe
// incidence from the left, r', t' from the right. Amplitudes are referenced
// to the wave values at the outermost interfaces of the structure.
struct TwoPortScattering {
    Complex r{0.0, 0.0};
    Complex t{1.0, 0.0};
    Complex r_prime{0.0, 0.0};
    Complex t_prime{1.0, 0.0};
};

// Propagation stretch between two scatterers: wavenumber k over distance d.
struct PhaseSegment {
    Complex k{0.0, 0.0};  // 1/nm
    double d = 0.0;       // nm, >= 0
};

// Fresnel-like step matrix between two constant-potential regions:
//   r = (kl - kr)/(kl + kr),  t = 2 kl/(kl + kr),
//   t' = 2 kr/(kl + kr),      r' = -r.
// Throws SingularInterfaceError when kl + kr vanishes to machine precision.
TwoPortScattering interface_smatrix(Complex k_left, Complex k_right);

// Composition through an intermediate region (sum of the multiple-reflection
// geometric series):
//   r   = r_L + t'_L r_R t_L / D,   t  = t_R e^{-ikd} t_L / D,
//   r'  = r'_R + t_R r'_L t'_R / D, t' = t'_L e^{-ikd} t'_R / D,
// with D = e^{-2ikd} - r'_L r_R. Associative when segments are attached
// consistently. Throws ResonantSingularityError when D vanishes.
TwoPortScattering star_combine(const TwoPortScattering& left,
                               const PhaseSegment& segment,
                               const TwoPortScattering& right);

// Left-to-right fold of interface_smatrix and star_combine over all
// interfaces, each interior region contributing its own (k, width) segment.
// Propagated singularity errors carry the offending interface index.
TwoPortScattering cascade(const LayeredPotential& potential, double energy);

// (|r|^2 + |t|^2 - 1, |r'|^2 + |t'|^2 - 1). Negative means absorbing,
// positive means emitting on that incidence side.
std::pair<double, double> unitarity_defect(const TwoPortScattering& s);

inline double transmission(const TwoPortScattering& s) { return std::norm(s.t); }
inline double reflection(const TwoPortScattering& s) { return std::norm(s.r); }

}  // namespace ptscatter

#endif
