#include "ptscatter/scatter.hpp"

#include <cmath>
#include <string>

#include "ptscatter/errors.hpp"

namespace ptscatter {

namespace {
constexpr double kDenominatorFloor = 1e-300;
}

TwoPortScattering interface_smatrix(Complex k_left, Complex k_right) {
    const Complex sum = k_left + k_right;
    if (std::abs(sum) < kDenominatorFloor ||
        std::abs(sum) < 1e-15 * (std::abs(k_left) + std::abs(k_right)))
        throw SingularInterfaceError("k_left + k_right vanishes at interface");
    TwoPortScattering s;
    s.r = (k_left - k_right) / sum;
    s.t = 2.0 * k_left / sum;
    s.t_prime = 2.0 * k_right / sum;
    s.r_prime = -s.r;
    return s;
}

TwoPortScattering star_combine(const TwoPortScattering& left, const PhaseSegment& segment,
                               const TwoPortScattering& right) {
    if (segment.d < 0.0)
        throw InvalidParameterError("phase segment length must be non-negative");
    const Complex phase = std::exp(Complex{0.0, -1.0} * segment.k * segment.d);
    const Complex denom = phase * phase - left.r_prime * right.r;
    if (std::abs(denom) < kDenominatorFloor)
        throw ResonantSingularityError("multiple-reflection series diverges (denominator ~ 0)");
    TwoPortScattering s;
    s.r = left.r + left.t_prime * right.r * left.t / denom;
    s.t = right.t * phase * left.t / denom;
    s.t_prime = left.t_prime * phase * right.t_prime / denom;
    s.r_prime = right.r_prime + right.t * left.r_prime * right.t_prime / denom;
    return s;
}

TwoPortScattering cascade(const LayeredPotential& potential, double energy) {
    validate(potential);
    if (!std::isfinite(energy)) throw InvalidParameterError("energy must be finite");

    const auto& regions = potential.regions;
    const std::size_t n = regions.size();
    std::vector<Complex> k(n);
    for (std::size_t i = 0; i < n; ++i)
        k[i] = wavenumber(regions[i], energy, potential.hbar2_over_2m);

    TwoPortScattering s;
    try {
        s = interface_smatrix(k[0], k[1]);
    } catch (const SingularInterfaceError&) {
        throw SingularInterfaceError("singular interface in cascade", 0);
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        TwoPortScattering step;
        try {
            step = interface_smatrix(k[i], k[i + 1]);
        } catch (const SingularInterfaceError&) {
            throw SingularInterfaceError("singular interface in cascade", static_cast<int>(i));
        }
        try {
            s = star_combine(s, PhaseSegment{k[i], regions[i].width}, step);
        } catch (const ResonantSingularityError&) {
            throw ResonantSingularityError("resonant singularity in cascade",
                                           static_cast<int>(i));
        }
    }
    return s;
}

std::pair<double, double> unitarity_defect(const TwoPortScattering& s) {
    return {std::norm(s.r) + std::norm(s.t) - 1.0,
            std::norm(s.r_prime) + std::norm(s.t_prime) - 1.0};
}

}  // namespace ptscatter
