#include "ptscatter/wavefield.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "ptscatter/errors.hpp"

namespace ptscatter {

namespace {

Complex expi(Complex z) { return std::exp(Complex{0.0, 1.0} * z); }

// Plane-wave value of region i at x, in the paper's coefficient convention.
Complex region_psi(const RegionAmplitudes& amps, std::size_t i, double x) {
    const Complex k = amps.wavenumbers[i];
    if (i == 0) return amps.a[0] * expi(k * x) + amps.b[0] * expi(-k * x);
    return amps.b[i] * expi(k * x) + amps.a[i] * expi(-k * x);
}

Complex region_dpsi(const RegionAmplitudes& amps, std::size_t i, double x) {
    const Complex k = amps.wavenumbers[i];
    const Complex ik = Complex{0.0, 1.0} * k;
    if (i == 0) return ik * (amps.a[0] * expi(k * x) - amps.b[0] * expi(-k * x));
    return ik * (amps.b[i] * expi(k * x) - amps.a[i] * expi(-k * x));
}

}  // namespace

int RegionAmplitudes::region_index(double x) const {
    const auto it = std::upper_bound(interfaces.begin(), interfaces.end(), x);
    return static_cast<int>(it - interfaces.begin());
}

Complex RegionAmplitudes::psi(double x) const {
    return region_psi(*this, static_cast<std::size_t>(region_index(x)), x);
}

Complex RegionAmplitudes::dpsi(double x) const {
    return region_dpsi(*this, static_cast<std::size_t>(region_index(x)), x);
}

std::pair<Complex, Complex> RegionAmplitudes::scattering_amplitudes() const {
    const double x_first = interfaces.front();
    const double x_last = interfaces.back();
    const Complex k_first = wavenumbers.front();
    const Complex k_last = wavenumbers.back();
    if (incidence == Incidence::left) {
        const Complex r = b.front() * expi(-2.0 * k_first * x_first);
        const Complex t = b.back() * expi(k_last * x_last - k_first * x_first);
        return {r, t};
    }
    const Complex r_prime = b.back() * expi(2.0 * k_last * x_last);
    const Complex t_prime = b.front() * expi(k_last * x_last - k_first * x_first);
    return {r_prime, t_prime};
}

RegionAmplitudes solve_amplitudes(const LayeredPotential& potential, double energy,
                                  Incidence incidence) {
    validate(potential);
    if (!std::isfinite(energy)) throw InvalidParameterError("energy must be finite");

    const auto& regions = potential.regions;
    const std::size_t n = regions.size();
    const std::vector<double> xs = potential.interface_positions();

    std::vector<Complex> k(n);
    for (std::size_t i = 0; i < n; ++i)
        k[i] = wavenumber(regions[i], energy, potential.hbar2_over_2m);

    const Complex a_first = incidence == Incidence::left ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
    const Complex a_last = incidence == Incidence::left ? Complex{0.0, 0.0} : Complex{1.0, 0.0};

    // Unknowns: [b_1, B_2, A_2, ..., B_{n-1}, A_{n-1}, b_n], interior
    // coefficients referenced to each region's left edge to keep the matrix
    // well scaled (the growing exponential only ever spans one region width).
    const Eigen::Index m = static_cast<Eigen::Index>(2 * (n - 1));
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(m, m);
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(m);
    const auto col_b = [](std::size_t i) { return static_cast<Eigen::Index>(2 * i - 3); };
    const auto col_a = [](std::size_t i) { return static_cast<Eigen::Index>(2 * i - 2); };
    const Complex iu{0.0, 1.0};

    // Interface 1: lead | region 2.
    mat(0, 0) = expi(-k[0] * xs[0]);
    mat(0, col_b(2)) = -1.0;
    mat(0, col_a(2)) = -1.0;
    rhs(0) = -a_first * expi(k[0] * xs[0]);
    mat(1, 0) = -iu * k[0] * expi(-k[0] * xs[0]);
    mat(1, col_b(2)) = -iu * k[1];
    mat(1, col_a(2)) = iu * k[1];
    rhs(1) = -a_first * iu * k[0] * expi(k[0] * xs[0]);

    // Interfaces between interior regions j | j+1 (1-based region indices).
    Eigen::Index row = 2;
    for (std::size_t j = 2; j + 1 < n; ++j) {
        const Complex ej = expi(k[j - 1] * regions[j - 1].width);
        mat(row, col_b(j)) = ej;
        mat(row, col_a(j)) = 1.0 / ej;
        mat(row, col_b(j + 1)) = -1.0;
        mat(row, col_a(j + 1)) = -1.0;
        mat(row + 1, col_b(j)) = iu * k[j - 1] * ej;
        mat(row + 1, col_a(j)) = -iu * k[j - 1] / ej;
        mat(row + 1, col_b(j + 1)) = -iu * k[j];
        mat(row + 1, col_a(j + 1)) = iu * k[j];
        row += 2;
    }

    // Last interface: region n-1 | lead.
    const Complex en = expi(k[n - 2] * regions[n - 2].width);
    const double x_last = xs.back();
    mat(row, col_b(n - 1)) = en;
    mat(row, col_a(n - 1)) = 1.0 / en;
    mat(row, m - 1) = -expi(k[n - 1] * x_last);
    rhs(row) = a_last * expi(-k[n - 1] * x_last);
    mat(row + 1, col_b(n - 1)) = iu * k[n - 2] * en;
    mat(row + 1, col_a(n - 1)) = -iu * k[n - 2] / en;
    mat(row + 1, m - 1) = -iu * k[n - 1] * expi(k[n - 1] * x_last);
    rhs(row + 1) = -a_last * iu * k[n - 1] * expi(-k[n - 1] * x_last);

    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(mat);
    const Eigen::VectorXcd udiag = lu.matrixLU().diagonal();
    double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m; ++i) {
        dmax = std::max(dmax, std::abs(udiag(i)));
        dmin = std::min(dmin, std::abs(udiag(i)));
    }
    if (!(dmin > 1e-14 * dmax))
        throw SingularSystemError("matching matrix numerically singular",
                                  dmin > 0.0 ? dmax / dmin : std::numeric_limits<double>::infinity());

    Eigen::VectorXcd u = lu.solve(rhs);
    u += lu.solve(rhs - mat * u);  // one refinement step
    if (!u.allFinite())
        throw SingularSystemError("matching solve produced non-finite coefficients",
                                  dmax / dmin);

    RegionAmplitudes amps;
    amps.energy = energy;
    amps.incidence = incidence;
    amps.wavenumbers = k;
    amps.interfaces = xs;
    amps.a.assign(n, Complex{0.0, 0.0});
    amps.b.assign(n, Complex{0.0, 0.0});
    amps.a[0] = a_first;
    amps.b[0] = u(0);
    amps.a[n - 1] = a_last;
    amps.b[n - 1] = u(m - 1);
    // Local -> global (paper) coefficients; the local reference point is the
    // region's left edge xs[i-2].
    for (std::size_t i = 2; i <= n - 1; ++i) {
        const double x_left = xs[i - 2];
        amps.b[i - 1] = u(col_b(i)) * expi(-k[i - 1] * x_left);
        amps.a[i - 1] = u(col_a(i)) * expi(k[i - 1] * x_left);
    }
    return amps;
}

TwoPortScattering oracle_smatrix(const LayeredPotential& potential, double energy) {
    const auto left = solve_amplitudes(potential, energy, Incidence::left);
    const auto right = solve_amplitudes(potential, energy, Incidence::right);
    const auto [r, t] = left.scattering_amplitudes();
    const auto [r_prime, t_prime] = right.scattering_amplitudes();
    return TwoPortScattering{r, t, r_prime, t_prime};
}

SampledWavefunction sample_wavefunction(const RegionAmplitudes& amps, int n_points,
                                        double lead_padding) {
    const std::size_t n_regions = amps.n_regions();
    if (n_points < static_cast<int>(2 * n_regions))
        throw InvalidParameterError("need at least two sample points per region");
    if (!(lead_padding >= 0.0))
        throw InvalidParameterError("lead padding must be non-negative");

    const double half = amps.interfaces.back() + lead_padding;
    SampledWavefunction wf;
    wf.x.resize(static_cast<std::size_t>(n_points));
    wf.psi.resize(wf.x.size());
    wf.region.resize(wf.x.size());
    const double step = 2.0 * half / (n_points - 1);
    for (int j = 0; j < n_points; ++j) {
        // Build the upper half by mirroring so x_j + x_{n-1-j} = 0 exactly.
        const int mirror = n_points - 1 - j;
        const double x = (j <= mirror) ? -half + j * step : half - mirror * step;
        const std::size_t idx = static_cast<std::size_t>(j);
        wf.x[idx] = x;
        wf.region[idx] = amps.region_index(x);
        wf.psi[idx] = amps.psi(x);
    }
    return wf;
}

double symmetry_score(const SampledWavefunction& wf, double center) {
    const std::size_t n = wf.x.size();
    if (n < 2) throw InvalidParameterError("wavefunction sample too short");
    const double span = wf.x.back() - wf.x.front();
    for (std::size_t j = 0; j < n / 2 + 1; ++j) {
        const double mirror = (wf.x[j] - center) + (wf.x[n - 1 - j] - center);
        if (std::abs(mirror) > 1e-9 * std::max(span, 1.0))
            throw InvalidParameterError("sample grid is not symmetric about the center");
    }

    double norm2 = 0.0;
    Complex s{0.0, 0.0};
    for (const Complex& p : wf.psi) {
        norm2 += std::norm(p);
        s += p * p;
    }
    if (std::sqrt(norm2) < 1e-30) throw DegenerateError("wavefunction norm below 1e-30");

    // Rotate the global phase so sum(psi^2) is real non-negative, then the
    // real part carries the standing-wave content.
    const double phi = (s == Complex{0.0, 0.0}) ? 0.0 : 0.5 * std::arg(s);
    const Complex rot = std::polar(1.0, -phi);
    double even2 = 0.0, odd2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double f = (wf.psi[j] * rot).real();
        const double g = (wf.psi[n - 1 - j] * rot).real();
        even2 += 0.25 * (f + g) * (f + g);
        odd2 += 0.25 * (f - g) * (f - g);
    }
    const double total = even2 + odd2;
    if (total == 0.0) return 0.5;
    return even2 / total;
}

SymmetryClass classify_symmetry(double score) {
    if (score > 0.9) return SymmetryClass::symmetric;
    if (score < 0.1) return SymmetryClass::antisymmetric;
    return SymmetryClass::mixed;
}

const char* to_string(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::symmetric: return "symmetric";
        case SymmetryClass::antisymmetric: return "antisymmetric";
        default: return "mixed";
    }
}

double continuity_residual(const RegionAmplitudes& amps) {
    double worst = 0.0;
    double psi_scale = 0.0;
    for (std::size_t j = 0; j < amps.interfaces.size(); ++j) {
        const double x = amps.interfaces[j];
        const Complex pl = region_psi(amps, j, x);
        const Complex pr = region_psi(amps, j + 1, x);
        const Complex dl = region_dpsi(amps, j, x);
        const Complex dr = region_dpsi(amps, j + 1, x);
        worst = std::max(worst, std::abs(pl - pr) + std::abs(dl - dr) * 1.0);
        psi_scale = std::max({psi_scale, std::abs(pl), std::abs(pr)});
    }
    if (psi_scale == 0.0) return worst;
    return worst / psi_scale;
}

}  // namespace ptscatter
