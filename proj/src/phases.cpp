#include "ptscatter/phases.hpp"

#include <algorithm>
#include <cmath>

#include "ptscatter/errors.hpp"

namespace ptscatter {

std::pair<Complex, Complex> eigenvalues(const TwoPortScattering& s) {
    const Complex half_tr = 0.5 * (s.r + s.r_prime);
    const Complex disc = (s.r - s.r_prime) * (s.r - s.r_prime) + 4.0 * s.t * s.t_prime;
    const Complex root = 0.5 * std::sqrt(disc);
    return {half_tr + root, half_tr - root};
}

Eigenphase eigenphase_split(Complex lambda) {
    const double mod = std::abs(lambda);
    if (mod == 0.0) throw ZeroEigenvalueError("cannot take the eigenphase of lambda = 0");
    return Eigenphase{std::arg(lambda), -std::log(mod)};
}

ArgandTrace trace_argand(const LayeredPotential& potential, const EnergyWindow& window) {
    const SpectrumSweep sw = sweep(potential, window);

    ArgandTrace trace;
    trace.energy = sw.energy;
    const std::size_t n = sw.energy.size();
    trace.branch1.resize(n);
    trace.branch2.resize(n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < static_cast<int>(n); ++i) {
        const auto [lp, lm] = eigenvalues(cascade(potential, sw.energy[static_cast<std::size_t>(i)]));
        trace.branch1[static_cast<std::size_t>(i)] = lp;
        trace.branch2[static_cast<std::size_t>(i)] = lm;
    }

    // Sequential branch pairing: keep or swap each step, whichever moves the
    // pair least.
    std::vector<double> jumps;
    jumps.reserve(2 * (n - 1));
    for (std::size_t i = 1; i < n; ++i) {
        const Complex p1 = trace.branch1[i - 1], p2 = trace.branch2[i - 1];
        const Complex c1 = trace.branch1[i], c2 = trace.branch2[i];
        const double keep = std::abs(c1 - p1) + std::abs(c2 - p2);
        const double swap = std::abs(c2 - p1) + std::abs(c1 - p2);
        if (swap < keep) {
            trace.branch1[i] = c2;
            trace.branch2[i] = c1;
        }
        jumps.push_back(std::abs(trace.branch1[i] - p1));
        jumps.push_back(std::abs(trace.branch2[i] - p2));
    }
    if (!jumps.empty()) {
        trace.max_jump = *std::max_element(jumps.begin(), jumps.end());
        std::nth_element(jumps.begin(), jumps.begin() + jumps.size() / 2, jumps.end());
        trace.median_jump = jumps[jumps.size() / 2];
    }
    return trace;
}

PhaseHistogram phase_histogram(const ArgandTrace& trace, int n_bins) {
    if (n_bins < 2) throw InvalidParameterError("phase histogram needs n_bins >= 2");

    PhaseHistogram h;
    h.bin_edges.resize(static_cast<std::size_t>(n_bins) + 1);
    const double width = 2.0 * M_PI / n_bins;
    for (int i = 0; i <= n_bins; ++i)
        h.bin_edges[static_cast<std::size_t>(i)] = -M_PI + i * width;
    h.bin_edges.back() = M_PI;
    h.counts1.assign(static_cast<std::size_t>(n_bins), 0);
    h.counts2.assign(static_cast<std::size_t>(n_bins), 0);

    const auto bin_of = [&](double theta) {
        // theta_re lies in (-pi, pi]; the last bin owns its right edge.
        int b = static_cast<int>(std::floor((theta + M_PI) / width));
        return static_cast<std::size_t>(std::clamp(b, 0, n_bins - 1));
    };
    for (const Complex& l : trace.branch1) h.counts1[bin_of(eigenphase_split(l).theta_re)]++;
    for (const Complex& l : trace.branch2) h.counts2[bin_of(eigenphase_split(l).theta_re)]++;
    return h;
}

double phase_mass_near_pi(const ArgandTrace& trace, double radius) {
    std::size_t near = 0, total = 0;
    for (const auto* branch : {&trace.branch1, &trace.branch2}) {
        for (const Complex& l : *branch) {
            const double theta = eigenphase_split(l).theta_re;
            if (M_PI - std::abs(theta) <= radius) ++near;
            ++total;
        }
    }
    return total == 0 ? 0.0 : static_cast<double>(near) / static_cast<double>(total);
}

}  // namespace ptscatter
