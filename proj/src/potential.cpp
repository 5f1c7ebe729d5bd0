#include "ptscatter/potential.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "ptscatter/errors.hpp"

namespace ptscatter {

double LayeredPotential::interior_width() const {
    double w = 0.0;
    for (std::size_t i = 1; i + 1 < regions.size(); ++i) w += regions[i].width;
    return w;
}

std::vector<double> LayeredPotential::interface_positions() const {
    std::vector<double> xs;
    xs.reserve(regions.size() - 1);
    double x = -0.5 * interior_width();
    xs.push_back(x);
    for (std::size_t i = 1; i + 1 < regions.size(); ++i) {
        x += regions[i].width;
        xs.push_back(x);
    }
    return xs;
}

void validate(const LayeredPotential& potential) {
    const auto& rs = potential.regions;
    if (rs.size() < 3)
        throw InvalidParameterError("layered potential needs at least lead|scatterer|lead");
    if (!(potential.hbar2_over_2m > 0.0) || !std::isfinite(potential.hbar2_over_2m))
        throw InvalidParameterError("hbar2_over_2m must be positive and finite");
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (!std::isfinite(rs[i].potential_real) || !std::isfinite(rs[i].potential_imag))
            throw InvalidParameterError("non-finite potential in region " + std::to_string(i));
        const bool lead = (i == 0 || i + 1 == rs.size());
        if (lead) {
            if (rs[i].potential_real != 0.0 || rs[i].potential_imag != 0.0)
                throw InvalidParameterError("lead region " + std::to_string(i) +
                                            " must be at zero potential");
        } else if (!(rs[i].width > 0.0) || !std::isfinite(rs[i].width)) {
            throw InvalidParameterError("interior region " + std::to_string(i) +
                                        " needs a finite positive width");
        }
    }
}

LayeredPotential build_dimer(const DimerParams& p, double hbar2_over_2m) {
    if (!(p.a > 0.0) || !(p.b > 0.0) || !(p.c > 0.0))
        throw InvalidParameterError("dimer widths a, b, c must be positive");
    if (!(p.v_barrier > p.v_prime))
        throw InvalidParameterError("dimer needs v_barrier > v_prime");
    if (!std::isfinite(p.v_barrier) || !std::isfinite(p.v_prime) || !std::isfinite(p.gamma))
        throw InvalidParameterError("dimer potentials must be finite");

    LayeredPotential pot;
    pot.hbar2_over_2m = hbar2_over_2m;
    pot.regions = {
        Region{0.0, 0.0, 0.0},                     // left lead
        Region{p.c, p.v_barrier, 0.0},
        Region{p.a, p.v_prime, -p.gamma},          // loss side faces the left lead
        Region{p.b, p.v_barrier, 0.0},
        Region{p.a, p.v_prime, +p.gamma},
        Region{p.c, p.v_barrier, 0.0},
        Region{0.0, 0.0, 0.0},                     // right lead
    };
    return pot;
}

LayeredPotential DimerFamily::at(double gamma) const {
    DimerParams p = base;
    p.gamma = gamma;
    return build_dimer(p, hbar2_over_2m);
}

Complex wavenumber(const Region& region, double energy, double hbar2_over_2m) {
    const double re = (energy - region.potential_real) / hbar2_over_2m;
    double im = -region.potential_imag / hbar2_over_2m;
    // Keep a zero imaginary part on the +0.0 side so a negative radicand
    // resolves to the principal value +i sqrt (evanescent decay).
    if (im == 0.0) im = 0.0;
    return std::sqrt(Complex{re, im});
}

double gamma_to_big_gamma(double gamma, double energy_ref, double v_prime,
                          double hbar2_over_2m) {
    const double q = 2.0 * hbar2_over_2m;  // hbar^2/m
    const double x = energy_ref - v_prime;
    const double u = q * gamma * gamma + x;
    const double radicand = u * u - x * x;
    if (radicand < 0.0) {
        std::ostringstream msg;
        msg << "negative radicand " << radicand << " in the Gamma map (energy_ref "
            << energy_ref << " too far below v_prime " << v_prime << ")";
        throw DomainError(msg.str());
    }
    return std::sqrt(radicand);
}

double big_gamma_to_gamma(double big_gamma, double energy_ref, double v_prime,
                          double hbar2_over_2m) {
    if (!(big_gamma >= 0.0))
        throw InvalidParameterError("big_gamma must be non-negative");
    if (big_gamma == 0.0) return 0.0;

    auto f = [&](double g) {
        return gamma_to_big_gamma(g, energy_ref, v_prime, hbar2_over_2m) - big_gamma;
    };

    // Expand the bracket, then bisect; the map is strictly increasing.
    double lo = 0.0, hi = 1.0;
    int guard = 0;
    while (f(hi) < 0.0) {
        hi *= 2.0;
        if (++guard > 600) throw ConvergenceError("Gamma inverse bracket expansion failed", f(hi));
    }
    const int max_iter = 200;
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-12 * hi) break;
    }
    const double g = 0.5 * (lo + hi);
    const double residual =
        std::abs(gamma_to_big_gamma(g, energy_ref, v_prime, hbar2_over_2m) - big_gamma);
    if (hi - lo > 1e-12 * std::max(hi, 1e-300))
        throw ConvergenceError("Gamma inverse did not reach 1e-12 relative", residual);
    return g;
}

double big_gamma_from_wavenumber(double gamma, double energy_ref, double v_prime,
                                 double hbar2_over_2m) {
    // Loss-region wavenumber at energy_ref; the printed relation applied to
    // Im k reduces to Gamma = |gamma| exactly.
    Region loss{1.0, v_prime, -std::abs(gamma)};
    const double im_k = wavenumber(loss, energy_ref, hbar2_over_2m).imag();
    const double q = 2.0 * hbar2_over_2m;
    const double x = energy_ref - v_prime;
    const double u = q * im_k * im_k + x;
    const double radicand = u * u - x * x;
    if (radicand < 0.0) throw DomainError("negative radicand in the wavenumber Gamma map");
    return std::sqrt(radicand);
}

}  // namespace ptscatter
