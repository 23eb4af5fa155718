#include <algorithm>
#include <cmath>

#include "adia/oracle.hpp"

namespace adia::oracle {

namespace {

using cplx = std::complex<double>;

constexpr cplx kI{0.0, 1.0};

struct State {
    cplx w;
    cplx wp;
};

State rhs(double epsilon, double t, const State& y) {
    const double c = epsilon * epsilon * t * t;
    return {y.wp, -c * y.w};
}

State axpy(const State& y, double h, const State& d) {
    return {y.w + h * d.w, y.wp + h * d.wp};
}

// Dormand-Prince 5(4) tableau
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// error weights (5th order minus embedded 4th order)
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

double err_norm(const State& e, const State& y0, const State& y1, double atol,
                double rtol) {
    auto comp = [&](cplx ec, cplx a, cplx b) {
        const double sc = atol + rtol * std::max(std::abs(a), std::abs(b));
        return std::abs(ec) / sc;
    };
    return std::max(comp(e.w, y0.w, y1.w), comp(e.wp, y0.wp, y1.wp));
}

}  // namespace

OdeTrajectory integrate_riccati_linear(double epsilon, double t0, cplx l0,
                                       double t1, double tol) {
    if (!(tol >= 1e-12)) {
        throw domain_error("integrate_riccati_linear: requires tol >= 1e-12");
    }
    IntegrateOptions opts;
    opts.abs_tol = tol;
    opts.rel_tol = tol;
    return integrate_riccati_linear(epsilon, t0, l0, t1, opts);
}

OdeTrajectory integrate_riccati_linear(double epsilon, double t0, cplx l0,
                                       double t1, const IntegrateOptions& opts) {
    if (!(epsilon > 0.0)) {
        throw domain_error("integrate_riccati_linear: requires epsilon > 0");
    }
    if (t0 == t1) throw domain_error("integrate_riccati_linear: empty interval");
    const double dir = t1 > t0 ? 1.0 : -1.0;

    std::vector<double> marks = opts.required_times;
    std::sort(marks.begin(), marks.end());
    if (dir < 0.0) std::reverse(marks.begin(), marks.end());
    std::size_t next_mark = 0;
    while (next_mark < marks.size() && dir * (marks[next_mark] - t0) <= 0.0) {
        ++next_mark;
    }

    OdeTrajectory traj;
    traj.epsilon = epsilon;
    State y{1.0, kI * l0};
    double t = t0;
    traj.times.push_back(t);
    traj.w.push_back(y.w);
    traj.wprime.push_back(y.wp);

    State k1 = rhs(epsilon, t, y);
    double h = dir * std::min(opts.max_step, 1e-3);
    double prev_err = 1.0;
    const double hmax = opts.max_step;

    while (dir * (t1 - t) > 0.0) {
        if (std::fabs(h) > hmax) h = dir * hmax;
        // land exactly on the next required node / the endpoint
        double target = t1;
        if (next_mark < marks.size() && dir * (marks[next_mark] - target) < 0.0) {
            target = marks[next_mark];
        }
        // a node within rounding distance of the target counts as arrival
        if (std::fabs(target - t) < 1e-13 * std::max(1.0, std::fabs(target))) {
            t = target;
            traj.times.back() = target;
            if (next_mark < marks.size() && target == marks[next_mark]) ++next_mark;
            continue;
        }
        bool hit_target = false;
        if (dir * (t + h - target) >= 0.0) {
            h = target - t;
            hit_target = true;
        }
        if (std::fabs(h) < 1e-14 * std::max(1.0, std::fabs(t))) {
            throw convergence_error("integrate_riccati_linear: step size underflow");
        }

        const State k2 = rhs(epsilon, t + c2 * h, axpy(y, h * a21, k1));
        const State k3 = rhs(epsilon, t + c3 * h,
                             {y.w + h * (a31 * k1.w + a32 * k2.w),
                              y.wp + h * (a31 * k1.wp + a32 * k2.wp)});
        const State k4 = rhs(epsilon, t + c4 * h,
                             {y.w + h * (a41 * k1.w + a42 * k2.w + a43 * k3.w),
                              y.wp + h * (a41 * k1.wp + a42 * k2.wp + a43 * k3.wp)});
        const State k5 =
            rhs(epsilon, t + c5 * h,
                {y.w + h * (a51 * k1.w + a52 * k2.w + a53 * k3.w + a54 * k4.w),
                 y.wp + h * (a51 * k1.wp + a52 * k2.wp + a53 * k3.wp + a54 * k4.wp)});
        const State k6 =
            rhs(epsilon, t + h,
                {y.w + h * (a61 * k1.w + a62 * k2.w + a63 * k3.w + a64 * k4.w +
                            a65 * k5.w),
                 y.wp + h * (a61 * k1.wp + a62 * k2.wp + a63 * k3.wp + a64 * k4.wp +
                             a65 * k5.wp)});
        const State y1{
            y.w + h * (b1 * k1.w + b3 * k3.w + b4 * k4.w + b5 * k5.w + b6 * k6.w),
            y.wp + h * (b1 * k1.wp + b3 * k3.wp + b4 * k4.wp + b5 * k5.wp + b6 * k6.wp)};
        const State k7 = rhs(epsilon, t + h, y1);
        const State err{
            h * (e1 * k1.w + e3 * k3.w + e4 * k4.w + e5 * k5.w + e6 * k6.w + e7 * k7.w),
            h * (e1 * k1.wp + e3 * k3.wp + e4 * k4.wp + e5 * k5.wp + e6 * k6.wp +
                 e7 * k7.wp)};

        const double en = err_norm(err, y, y1, opts.abs_tol, opts.rel_tol);
        if (en <= 1.0) {
            t = hit_target ? target : t + h;
            y = y1;
            k1 = k7;  // FSAL
            traj.times.push_back(t);
            traj.w.push_back(y.w);
            traj.wprime.push_back(y.wp);
            traj.est_error += en * std::max(opts.abs_tol, opts.rel_tol);
            if (hit_target && next_mark < marks.size() && target == marks[next_mark]) {
                ++next_mark;
            }
            // PI controller
            const double fac =
                0.9 * std::pow(std::max(en, 1e-10), -0.2) * std::pow(prev_err, 0.04);
            prev_err = std::max(en, 1e-10);
            h *= std::clamp(fac, 0.2, 5.0);
        } else {
            h *= std::max(0.2, 0.9 * std::pow(en, -0.2));
        }
    }
    return traj;
}

AmplitudeTrace amplitude_by_quadrature(const OdeTrajectory& traj, cplx m0) {
    const std::size_t n = traj.size();
    if (n < 3) throw domain_error("amplitude_by_quadrature: trajectory too short");

    // integrand of log m: f = l/(2i); the width equation supplies exact
    // nodewise derivatives, l' = i eps^2 t^2 - i l^2 and
    // l'' = 2 i eps^2 t - 2 i l l'
    std::vector<cplx> f(n), fp(n), fpp(n);
    const double e2 = traj.epsilon * traj.epsilon;
    for (std::size_t i = 0; i < n; ++i) {
        const cplx l = traj.width_at(i);
        const double t = traj.times[i];
        const cplx lp = kI * (e2 * t * t - l * l);
        const cplx lpp = 2.0 * kI * (e2 * t - l * lp);
        f[i] = l / (2.0 * kI);
        fp[i] = lp / (2.0 * kI);
        fpp[i] = lpp / (2.0 * kI);
    }

    // cumulative two-point Hermite rule, exact through degree 5:
    // int = h/2 (f0+f1) + h^2/10 (f0'-f1') + h^3/120 (f0''+f1'');
    // symmetric, so the skewed spacing around required sample nodes does
    // not degrade it
    std::vector<cplx> integral(n);
    integral[0] = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double h = traj.times[i + 1] - traj.times[i];
        integral[i + 1] = integral[i] + 0.5 * h * (f[i] + f[i + 1]) +
                          h * h / 10.0 * (fp[i] - fp[i + 1]) +
                          h * h * h / 120.0 * (fpp[i] + fpp[i + 1]);
    }

    AmplitudeTrace trace;
    trace.values.resize(n);
    trace.sqrt_route.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        trace.values[k] = m0 * std::exp(integral[k]);
    }

    // square-root route with continuous branch: m = m0 (w(t0)/w(t))^(1/2)
    double theta = 0.0;  // unwrapped arg of w relative to the start
    const double mag0 = std::abs(traj.w[0]);
    trace.sqrt_route[0] = m0;
    for (std::size_t k = 1; k < n; ++k) {
        theta += std::arg(traj.w[k] / traj.w[k - 1]);
        trace.sqrt_route[k] =
            m0 * std::polar(std::sqrt(mag0 / std::abs(traj.w[k])), -0.5 * theta);
    }

    for (std::size_t k = 0; k < n; ++k) {
        trace.max_route_deviation = std::max(
            trace.max_route_deviation, std::abs(trace.values[k] - trace.sqrt_route[k]));
    }
    return trace;
}

}  // namespace adia::oracle
