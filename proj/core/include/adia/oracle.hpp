#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

#include "adia/errors.hpp"
#include "adia/gaussian.hpp"

// Independent verification layer. Deliberately self-contained: the ODE
// integrator never touches the special-function or closed-form modules,
// and the grid solver never touches the closed forms or the ODE
// integrator — agreement between routes is the evidence.
namespace adia::oracle {

/// Adaptive trajectory of the linear companion system w'' = -eps^2 t^2 w,
/// from which the width parameter is recovered as l = -i w'/w.
struct OdeTrajectory {
    double epsilon = 0.0;
    std::vector<double> times;
    std::vector<std::complex<double>> w;
    std::vector<std::complex<double>> wprime;
    double est_error = 0.0;  ///< accumulated local error estimates

    std::size_t size() const { return times.size(); }
    std::complex<double> width_at(std::size_t i) const {
        return std::complex<double>(0.0, -1.0) * wprime[i] / w[i];
    }
};

struct IntegrateOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double max_step = 0.025;
    /// times that must appear as trajectory nodes (sorted along the
    /// direction of integration)
    std::vector<double> required_times;
};

/// Integrate (w, w') with w(t0) = 1, w'(t0) = i l0 from t0 to t1 with an
/// embedded Dormand-Prince 5(4) pair and PI step control. Both directions
/// are supported. tol >= 1e-12 sets abs and rel tolerances together.
OdeTrajectory integrate_riccati_linear(double epsilon, double t0,
                                       std::complex<double> l0, double t1,
                                       double tol);
OdeTrajectory integrate_riccati_linear(double epsilon, double t0,
                                       std::complex<double> l0, double t1,
                                       const IntegrateOptions& opts);

/// Amplitude along an ODE trajectory, two independent routes:
/// quadrature of m'/m = l/(2i) (composite Simpson over the adaptive
/// nodes) and the square-root route m = m0 (w(t0)/w(t))^(1/2) with a
/// continuous branch. `values` carries the quadrature route.
struct AmplitudeTrace {
    std::vector<std::complex<double>> values;
    std::vector<std::complex<double>> sqrt_route;
    double max_route_deviation = 0.0;
};

AmplitudeTrace amplitude_by_quadrature(const OdeTrajectory& traj,
                                       std::complex<double> m0);

/// Uniform complex-valued grid state on [x_min, x_max); n must be a power
/// of two.
struct GridState {
    double x_min = 0.0;
    double x_max = 0.0;
    std::vector<std::complex<double>> values;
    double time = 0.0;

    std::size_t size() const { return values.size(); }
    double dx() const { return (x_max - x_min) / static_cast<double>(values.size()); }
    double x(std::size_t i) const { return x_min + dx() * static_cast<double>(i); }
};

/// Sample a Gaussian state on a fresh grid. Throws domain_error unless
/// n_points is a power of two.
GridState sample_gaussian(const GaussianState& g, double x_min, double x_max,
                          std::size_t n_points, double time);

/// Strang split-step Fourier evolution of i dv/dt = -1/2 v'' + V(t,x) v,
/// the potential evaluated at each step's midpoint time. Checks norm
/// conservation, boundary leakage (resolution_error) and that dt resolves
/// the state's occupied spectral band (stability_error).
void evolve_grid(GridState& grid,
                 const std::function<double(double, double)>& potential,
                 double t0, double t1, double dt);

/// Model-driven evolution in the microscopic clock: the scaled harmonic
/// potential is (eps t + L)^2 x^2/2 before -L/eps, zero on the free
/// window, (eps t - L)^2 x^2/2 after +L/eps. Segments split exactly at
/// the switch times.
void evolve_pde(double epsilon, double L, GridState& grid, double t0, double t1,
                double dt);

/// Bilinear grid overlap sum a b dx (no conjugation), trapezoidal weights.
std::complex<double> quadrature_overlap(const GridState& a, const GridState& b);
std::complex<double> quadrature_overlap(const GridState& a, const GaussianState& b);

/// Discrete L^2 norm squared.
double grid_norm_squared(const GridState& g);

/// Default spatial half-width and point count for a run at a given eps;
/// the t = 0 state widens like eps^(-1/4).
double default_domain_halfwidth(double epsilon);
std::size_t default_grid_points(double halfwidth);

/// CSV export: rows x, Re v, Im v.
void grid_to_csv(const GridState& g, std::ostream& out);

}  // namespace adia::oracle
