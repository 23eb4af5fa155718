#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include <fftw3.h>

#include "adia/oracle.hpp"

namespace adia::oracle {

namespace {

using cplx = std::complex<double>;
using std::numbers::pi;

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

// RAII wrapper around a pair of in-place FFTW plans on one buffer.
class SpectralTransform {
public:
    explicit SpectralTransform(std::vector<cplx>& buffer)
        : n_(buffer.size()),
          data_(reinterpret_cast<fftw_complex*>(buffer.data())),
          fwd_(fftw_plan_dft_1d(static_cast<int>(n_), data_, data_, FFTW_FORWARD,
                                FFTW_ESTIMATE)),
          bwd_(fftw_plan_dft_1d(static_cast<int>(n_), data_, data_, FFTW_BACKWARD,
                                FFTW_ESTIMATE)) {}

    ~SpectralTransform() {
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
    }

    SpectralTransform(const SpectralTransform&) = delete;
    SpectralTransform& operator=(const SpectralTransform&) = delete;

    void forward() { fftw_execute(fwd_); }
    void backward() { fftw_execute(bwd_); }

private:
    std::size_t n_;
    fftw_complex* data_;
    fftw_plan fwd_;
    fftw_plan bwd_;
};

std::vector<double> wavenumbers(const GridState& g) {
    const std::size_t n = g.size();
    const double dk = 2.0 * pi / (g.x_max - g.x_min);
    std::vector<double> k(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto half = static_cast<std::ptrdiff_t>(n / 2);
        const auto idx = static_cast<std::ptrdiff_t>(j);
        k[j] = dk * static_cast<double>(idx < half ? idx : idx - static_cast<std::ptrdiff_t>(n));
    }
    return k;
}

// largest |k| carrying spectral weight above 1e-5 of the peak; strongly
// chirped Gaussians genuinely occupy a wide band, so the floor tracks the
// substance of the state rather than its numerical tail
double occupied_band(const std::vector<cplx>& spectrum, const std::vector<double>& k) {
    double peak = 0.0;
    for (const auto& v : spectrum) peak = std::max(peak, std::abs(v));
    const double floor_mag = 1e-5 * peak;
    double kmax = 0.0;
    for (std::size_t j = 0; j < spectrum.size(); ++j) {
        if (std::abs(spectrum[j]) > floor_mag) kmax = std::max(kmax, std::fabs(k[j]));
    }
    return kmax;
}

void check_boundary(const GridState& g) {
    double peak = 0.0;
    for (const auto& v : g.values) peak = std::max(peak, std::abs(v));
    const double edge = std::max(std::abs(g.values.front()), std::abs(g.values.back()));
    if (edge > 1e-10 * std::max(1.0, peak)) {
        throw resolution_error("evolve_grid: boundary amplitude exceeds 1e-10");
    }
}

}  // namespace

GridState sample_gaussian(const GaussianState& g, double x_min, double x_max,
                          std::size_t n_points, double time) {
    if (!is_power_of_two(n_points)) {
        throw domain_error("sample_gaussian: n_points must be a power of two");
    }
    if (!(x_max > x_min)) throw domain_error("sample_gaussian: empty domain");
    GridState out;
    out.x_min = x_min;
    out.x_max = x_max;
    out.time = time;
    out.values.resize(n_points);
    const double dx = (x_max - x_min) / static_cast<double>(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double x = x_min + dx * static_cast<double>(i);
        out.values[i] = g.m * std::exp(-0.5 * g.l * x * x);
    }
    return out;
}

void evolve_grid(GridState& grid,
                 const std::function<double(double, double)>& potential,
                 double t0, double t1, double dt) {
    if (!is_power_of_two(grid.size())) {
        throw domain_error("evolve_grid: grid size must be a power of two");
    }
    if (!(dt > 0.0)) throw domain_error("evolve_grid: requires dt > 0");
    if (t1 == t0) return;
    if (t1 < t0) throw domain_error("evolve_grid: requires t1 >= t0");

    const std::size_t n = grid.size();
    const auto steps = static_cast<std::size_t>(std::ceil((t1 - t0) / dt - 1e-12));
    const double h = (t1 - t0) / static_cast<double>(steps);

    const auto k = wavenumbers(grid);
    std::vector<cplx> kinetic_phase(n);
    for (std::size_t j = 0; j < n; ++j) {
        kinetic_phase[j] = std::polar(1.0, -0.5 * k[j] * k[j] * h);
    }
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = grid.x(i);

    SpectralTransform fft(grid.values);
    const double inv_n = 1.0 / static_cast<double>(n);
    const double norm0 = grid_norm_squared(grid);
    check_boundary(grid);

    const std::size_t check_every = 200;
    for (std::size_t s = 0; s < steps; ++s) {
        const double t_mid = t0 + h * (static_cast<double>(s) + 0.5);
        for (std::size_t i = 0; i < n; ++i) {
            grid.values[i] *= std::polar(1.0, -potential(t_mid, xs[i]) * 0.5 * h);
        }
        fft.forward();
        if (s % check_every == 0) {
            const double k_occ = occupied_band(grid.values, k);
            if (h * 0.5 * k_occ * k_occ > 0.5) {
                throw stability_error(
                    "evolve_grid: dt too large for the occupied spectral band");
            }
        }
        for (std::size_t j = 0; j < n; ++j) grid.values[j] *= kinetic_phase[j] * inv_n;
        fft.backward();
        for (std::size_t i = 0; i < n; ++i) {
            grid.values[i] *= std::polar(1.0, -potential(t_mid, xs[i]) * 0.5 * h);
        }
        if (s % check_every == check_every - 1) check_boundary(grid);
    }
    grid.time = t1;
    check_boundary(grid);
    const double norm1 = grid_norm_squared(grid);
    if (std::fabs(norm1 - norm0) > 1e-8 * std::max(norm0, 1e-30)) {
        throw numeric_error("evolve_grid: discrete norm drifted beyond 1e-8");
    }
}

void evolve_pde(double epsilon, double L, GridState& grid, double t0, double t1,
                double dt) {
    if (!(epsilon > 0.0)) throw domain_error("evolve_pde: requires epsilon > 0");
    if (L < 0.0) throw domain_error("evolve_pde: requires L >= 0");

    auto potential = [epsilon, L](double t, double x) {
        const double tau = epsilon * t;  // macroscopic time
        double ramp = 0.0;
        if (tau < -L) ramp = tau + L;
        else if (tau > L) ramp = tau - L;
        return 0.5 * ramp * ramp * x * x;
    };

    // split the run at the potential switch times so no step straddles them
    std::vector<double> cuts{t0};
    for (double sw : {-L / epsilon, L / epsilon}) {
        if (sw > t0 && sw < t1) cuts.push_back(sw);
    }
    cuts.push_back(t1);
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] > cuts[i]) {
            evolve_grid(grid, potential, cuts[i], cuts[i + 1], dt);
        }
    }
}

std::complex<double> quadrature_overlap(const GridState& a, const GridState& b) {
    if (a.size() != b.size() || a.x_min != b.x_min || a.x_max != b.x_max) {
        throw domain_error("quadrature_overlap: incompatible grids");
    }
    cplx sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) sum += a.values[i] * b.values[i];
    return sum * a.dx();
}

std::complex<double> quadrature_overlap(const GridState& a, const GaussianState& b) {
    cplx sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double x = a.x(i);
        sum += a.values[i] * (b.m * std::exp(-0.5 * b.l * x * x));
    }
    return sum * a.dx();
}

double grid_norm_squared(const GridState& g) {
    double sum = 0.0;
    for (const auto& v : g.values) sum += std::norm(v);
    return sum * g.dx();
}

double default_domain_halfwidth(double epsilon) {
    // the t = 0 state has width ~ 1.45 eps^(-1/4); 12 widths keep the
    // boundary amplitude below 1e-10
    return 12.0 * std::max(1.0, 1.45 * std::pow(epsilon, -0.25));
}

std::size_t default_grid_points(double halfwidth) {
    std::size_t n = 4096;
    while (static_cast<double>(n) < 2.0 * halfwidth / 0.02) n *= 2;
    return n;
}

void grid_to_csv(const GridState& g, std::ostream& out) {
    out << "x,re_v,im_v\n";
    char buf[96];
    for (std::size_t i = 0; i < g.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", g.x(i),
                      g.values[i].real(), g.values[i].imag());
        out << buf;
    }
}

}  // namespace adia::oracle
