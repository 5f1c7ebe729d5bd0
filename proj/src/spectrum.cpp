#include "ptscatter/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ptscatter/errors.hpp"

namespace ptscatter {

namespace {

// The paper's resonance band: above the shallowest interior floor, below the
// tallest interior barrier (and above the leads).
std::pair<double, double> resonance_band(const LayeredPotential& potential) {
    double lo = 0.0;  // lead potential
    double hi = -std::numeric_limits<double>::infinity();
    double floor = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < potential.regions.size(); ++i) {
        hi = std::max(hi, potential.regions[i].potential_real);
        floor = std::min(floor, potential.regions[i].potential_real);
    }
    return {std::max(lo, floor), hi};
}

double transmission_at(const LayeredPotential& potential, double energy) {
    return transmission(cascade(potential, energy));
}

// Golden-section maximization on [lo, hi] to |dE| < tol.
double golden_max(const std::function<double(double)>& f, double lo, double hi, double tol) {
    constexpr double kInvPhi = 0.6180339887498949;
    double c = hi - kInvPhi * (hi - lo);
    double d = lo + kInvPhi * (hi - lo);
    double fc = f(c), fd = f(d);
    while (hi - lo > tol) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - kInvPhi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + kInvPhi * (hi - lo);
            fd = f(d);
        }
    }
    return 0.5 * (lo + hi);
}

// Bisection for f(e) = level, with f(a) and f(b) on opposite sides.
double bisect_crossing(const std::function<double(double)>& f, double a, double b,
                       double level, double tol) {
    double fa = f(a) - level;
    for (int i = 0; i < 200 && b - a > tol; ++i) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid) - level;
        if ((fa <= 0.0) == (fm <= 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

struct GridPeak {
    std::size_t index;
    double prominence;
    std::size_t left_base;
    std::size_t right_base;
};

// Topographic prominence of every strict local maximum: scan outward until a
// higher sample (or the window edge); the shallower of the two descents is
// the prominence.
std::vector<GridPeak> grid_peaks(const std::vector<double>& t) {
    std::vector<GridPeak> peaks;
    const std::size_t n = t.size();
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!(t[i] > t[i - 1] && t[i] >= t[i + 1])) continue;
        double left_min = t[i];
        std::size_t left_base = i;
        for (std::size_t j = i; j-- > 0;) {
            if (t[j] > t[i]) break;
            if (t[j] < left_min) {
                left_min = t[j];
                left_base = j;
            }
        }
        double right_min = t[i];
        std::size_t right_base = i;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (t[j] > t[i]) break;
            if (t[j] < right_min) {
                right_min = t[j];
                right_base = j;
            }
        }
        peaks.push_back(GridPeak{i, t[i] - std::max(left_min, right_min), left_base, right_base});
    }
    return peaks;
}

}  // namespace

SpectrumSweep sweep(const LayeredPotential& potential, double e_min, double e_max,
                    int n_points) {
    validate(potential);
    if (n_points < 2) throw InvalidParameterError("sweep needs at least 2 points");
    if (!(e_min < e_max)) throw InvalidParameterError("sweep needs e_min < e_max");
    const auto [band_lo, band_hi] = resonance_band(potential);
    if (!(e_min > band_lo) || !(e_max < band_hi)) {
        std::ostringstream msg;
        msg << "energy window [" << e_min << ", " << e_max << "] leaves the resonance band ("
            << band_lo << ", " << band_hi << ")";
        throw WindowViolationError(msg.str());
    }

    SpectrumSweep out;
    out.potential = potential;
    out.energy.resize(static_cast<std::size_t>(n_points));
    out.transmission.resize(out.energy.size());
    out.reflection.resize(out.energy.size());
    out.transmission_prime.resize(out.energy.size());
    out.reflection_prime.resize(out.energy.size());
    out.defect_left.resize(out.energy.size());
    out.defect_right.resize(out.energy.size());

    // Exceptions must not escape the parallel region; remember the first one.
    std::exception_ptr failure = nullptr;
    const double step = (e_max - e_min) / (n_points - 1);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n_points; ++i) {
        try {
            const double e = (i == n_points - 1) ? e_max : e_min + i * step;
            const TwoPortScattering s = cascade(potential, e);
            const auto [dl, dr] = unitarity_defect(s);
            const std::size_t j = static_cast<std::size_t>(i);
            out.energy[j] = e;
            out.transmission[j] = std::norm(s.t);
            out.reflection[j] = std::norm(s.r);
            out.transmission_prime[j] = std::norm(s.t_prime);
            out.reflection_prime[j] = std::norm(s.r_prime);
            out.defect_left[j] = dl;
            out.defect_right[j] = dr;
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

SpectrumSweep sweep(const LayeredPotential& potential, const EnergyWindow& window) {
    return sweep(potential, window.e_min, window.e_max, window.n_points);
}

std::vector<Resonance> find_peaks_on(const std::function<double(double)>& t_of_e,
                                     const std::vector<double>& grid,
                                     double prominence_min) {
    if (grid.size() < 3) throw InvalidParameterError("peak search needs >= 3 grid points");

    std::vector<double> t(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) t[i] = t_of_e(grid[i]);

    constexpr double kPositionTol = 1e-9;  // eV
    std::vector<Resonance> out;
    for (const GridPeak& gp : grid_peaks(t)) {
        if (gp.prominence < prominence_min) continue;
        Resonance res;
        res.prominence = gp.prominence;
        res.position = golden_max(t_of_e, grid[gp.index - 1], grid[gp.index + 1], kPositionTol);
        res.height = t_of_e(res.position);

        // Full width at half prominence, crossings bisected on the
        // continuous curve between the peak and its bases.
        const double level = res.height - 0.5 * gp.prominence;
        const double left =
            bisect_crossing(t_of_e, grid[gp.left_base], res.position, level, kPositionTol);
        const double right =
            bisect_crossing(t_of_e, res.position, grid[gp.right_base], level, kPositionTol);
        res.fwhm = std::max(right - left, kPositionTol);
        res.q = res.position / res.fwhm;
        out.push_back(res);
    }
    std::sort(out.begin(), out.end(),
              [](const Resonance& a, const Resonance& b) { return a.position < b.position; });
    return out;
}

std::vector<Resonance> find_peaks(const SpectrumSweep& sw, double prominence_min) {
    const LayeredPotential potential = sw.potential;
    return find_peaks_on([potential](double e) { return transmission_at(potential, e); },
                         sw.energy, prominence_min);
}

ResonancePair resonance_pair(const LayeredPotential& potential, const EnergyWindow& window,
                             const PeakSettings& settings) {
    const SpectrumSweep sw = sweep(potential, window);
    const double t_max = *std::max_element(sw.transmission.begin(), sw.transmission.end());
    auto peaks = find_peaks(sw, settings.prominence_rel * t_max);
    if (peaks.empty())
        throw NoneFoundError("no transmission peak above the prominence threshold in window");
    if (peaks.size() > 2) {
        std::sort(peaks.begin(), peaks.end(), [](const Resonance& a, const Resonance& b) {
            return a.prominence > b.prominence;
        });
        peaks.resize(2);
        std::sort(peaks.begin(), peaks.end(), [](const Resonance& a, const Resonance& b) {
            return a.position < b.position;
        });
    }
    ResonancePair pair;
    pair.lower = peaks.front();
    if (peaks.size() == 2) pair.upper = peaks.back();
    return pair;
}

}  // namespace ptscatter
