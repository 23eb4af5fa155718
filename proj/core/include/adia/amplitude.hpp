#pragma once

#include <complex>
#include <vector>

#include "adia/errors.hpp"
#include "adia/riccati.hpp"

namespace adia {

/// Continuous-phase accumulator for taking square roots along a
/// trajectory. Each requested step must change the true argument by less
/// than pi (sampling cannot distinguish faster windings); steps between
/// pi/2 and pi are resolved by bisection via the supplied evaluator.
class BranchTracker {
public:
    BranchTracker(double t0, std::complex<double> value0, double anchor_arg)
        : t_(t0), w_(value0), arg_(anchor_arg) {}

    double last_t() const { return t_; }
    double last_argument() const { return arg_; }
    std::complex<double> last_value() const { return w_; }

    /// Continue the unwrapped argument to t1; eval(t) must return the
    /// tracked function's value. Returns the unwrapped argument at t1.
    template <class F>
    double advance(double t1, F&& eval, int max_depth = 48) {
        if (t1 == t_) return arg_;
        step(t1, eval(t1), eval, max_depth);
        return arg_;
    }

private:
    template <class F>
    void step(double t1, std::complex<double> w1, F&& eval, int depth) {
        const double d = std::arg(w1 / w_);
        if (std::fabs(d) < 1.5707963267948966) {
            t_ = t1;
            w_ = w1;
            arg_ += d;
            return;
        }
        if (depth <= 0) {
            throw branch_step_error(
                "BranchTracker: phase step >= pi/2 persists under refinement");
        }
        const double tm = 0.5 * (t_ + t1);
        step(tm, eval(tm), eval, depth - 1);
        step(t1, w1, eval, depth - 1);
    }

    double t_;
    std::complex<double> w_;
    double arg_;
};

/// Amplitude m(t) of the Gaussian solution: m = A * w(t)^(-1/2) with the
/// square-root branch carried continuously along the trajectory from the
/// anchor point. The normalization constant and the branch anchor form a
/// linked pair; they are sign-normalized so that
/// m(0) = -i A Gamma(3/4)^(1/2) holds exactly.
class AmplitudeSolution {
public:
    /// Solution matched to m(-1/eps) = pi^(-1/4) on [-1/eps, 1/eps],
    /// with kappa = kappa_eps computed internally.
    static AmplitudeSolution matched(double epsilon);

    /// Same, with a caller-supplied kappa (must equal solve_kappa(epsilon)
    /// for the matched initial condition to hold).
    static AmplitudeSolution matched(double epsilon, std::complex<double> kappa);

    /// Outgoing-stage solution on [0, t_max]: anchored at t = 0 with
    /// unwrapped argument pi (so m(0) = -i B Gamma(3/4)^(1/2)), carrying
    /// the supplied normalization constant B.
    static AmplitudeSolution outgoing(const RiccatiFamily& fam,
                                      std::complex<double> normalization,
                                      double t_max);

    double epsilon() const { return fam_.epsilon; }
    std::complex<double> kappa() const { return fam_.kappa.value(); }
    const RiccatiFamily& family() const { return fam_; }

    /// Normalization constant (A_eps for matched solutions).
    std::complex<double> normalization() const { return norm_; }

    /// m(t); t must lie within the solution's trajectory window.
    std::complex<double> at(double t) const;

    /// Exact value -i A Gamma(3/4)^(1/2) at t = 0.
    std::complex<double> at_zero() const;

    double t_min() const { return t_.front(); }
    double t_max() const { return t_.back(); }

    /// Phase-tracking grid (uniform nodes and unwrapped arguments).
    const std::vector<double>& grid_times() const { return t_; }
    const std::vector<double>& grid_arguments() const { return arg_; }

private:
    AmplitudeSolution(RiccatiFamily fam, double t_lo, double t_hi,
                      std::size_t anchor_index, double anchor_arg);

    std::complex<double> w_at(double t) const;
    std::complex<double> value_from(std::size_t node, double t) const;

    RiccatiFamily fam_;
    std::complex<double> norm_{0.0, 0.0};
    std::vector<double> t_;
    std::vector<double> arg_;
};

/// Exact normalization constant A_eps = pi^(-1/4) w(-1/eps, kappa_eps)^(1/2),
/// sign-normalized as described on AmplitudeSolution.
std::complex<double> amplitude_constant(double epsilon, std::complex<double> kappa_eps);

/// Exact m(1/eps): square root of the closed form
/// m^2 = pi^(-1/2) (-J_{-1/4} - kappa J_{1/4}) / (-J_{-1/4} + kappa J_{1/4})
/// at 1/(2 eps), branch selected by the continuous tracker.
std::complex<double> amplitude_final(double epsilon);

/// Leading oscillatory form pi^(-1/4) / (sqrt(2) e^{i/eps} + i)^(1/2),
/// branch continued in 1/eps from the principal root at 1/eps = pi/2.
std::complex<double> amplitude_final_leading(double epsilon);

}  // namespace adia
