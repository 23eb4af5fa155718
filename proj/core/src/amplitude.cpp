#include "adia/amplitude.hpp"

#include <cmath>
#include <numbers>

#include "adia/constants.hpp"
#include "adia/specfun.hpp"

namespace adia {

namespace {

using cplx = std::complex<double>;
using std::numbers::pi;

constexpr cplx kI{0.0, 1.0};

const double kPiQuarterInv = std::pow(pi, -0.25);  // pi^(-1/4)

std::size_t tracking_nodes(double epsilon, double span) {
    // w oscillates like e^{i eps t^2 / 2}; 40/eps nodes over the full
    // window keep |delta arg| well below pi/2 everywhere
    const double full_span = 2.0 / epsilon;
    const double density = std::max(4096.0, std::ceil(40.0 / epsilon)) / full_span;
    const auto n = static_cast<std::size_t>(std::ceil(density * span));
    return std::max<std::size_t>(n + (n % 2), 64);  // even, so t=0 is a node
}

}  // namespace

AmplitudeSolution::AmplitudeSolution(RiccatiFamily fam, double t_lo, double t_hi,
                                     std::size_t anchor_index, double anchor_arg)
    : fam_(fam) {
    const std::size_t n = tracking_nodes(fam_.epsilon, t_hi - t_lo);
    t_.resize(n + 1);
    arg_.resize(n + 1);
    const double dt = (t_hi - t_lo) / static_cast<double>(n);
    for (std::size_t i = 0; i <= n; ++i) {
        t_[i] = t_lo + dt * static_cast<double>(i);
    }

    auto eval = [this](double t) { return companion_w(fam_, t); };

    BranchTracker fwd(t_[anchor_index], eval(t_[anchor_index]), anchor_arg);
    arg_[anchor_index] = anchor_arg;
    for (std::size_t i = anchor_index + 1; i <= n; ++i) {
        arg_[i] = fwd.advance(t_[i], eval);
    }
    BranchTracker bwd(t_[anchor_index], eval(t_[anchor_index]), anchor_arg);
    for (std::size_t i = anchor_index; i-- > 0;) {
        arg_[i] = bwd.advance(t_[i], eval);
    }
}

std::complex<double> AmplitudeSolution::w_at(double t) const {
    return companion_w(fam_, t);
}

std::complex<double> AmplitudeSolution::value_from(std::size_t node, double t) const {
    auto eval = [this](double tt) { return companion_w(fam_, tt); };
    BranchTracker tracker(t_[node], eval(t_[node]), arg_[node]);
    const double a = tracker.advance(t, eval);
    const cplx w = tracker.last_value();
    return norm_ * std::polar(1.0 / std::sqrt(std::abs(w)), -0.5 * a);
}

std::complex<double> AmplitudeSolution::at(double t) const {
    if (!(t >= t_.front() - 1e-12 && t <= t_.back() + 1e-12)) {
        throw domain_error("AmplitudeSolution::at: t outside the trajectory window");
    }
    const double dt = t_[1] - t_[0];
    auto idx = static_cast<std::size_t>(
        std::clamp((t - t_.front()) / dt, 0.0, static_cast<double>(t_.size() - 1)));
    return value_from(idx, t);
}

std::complex<double> AmplitudeSolution::at_zero() const {
    return -kI * norm_ * std::sqrt(gamma_constants().gamma_3_4);
}

AmplitudeSolution AmplitudeSolution::matched(double epsilon) {
    return matched(epsilon, solve_kappa(epsilon));
}

AmplitudeSolution AmplitudeSolution::matched(double epsilon, std::complex<double> kappa) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw domain_error("AmplitudeSolution: requires 0 < epsilon < 1");
    }
    RiccatiFamily fam(epsilon, Kappa(kappa));
    const double t_edge = 1.0 / epsilon;
    AmplitudeSolution sol(fam, -t_edge, t_edge, 0, 0.0);
    // principal anchor at t = -1/eps
    const cplx w0 = sol.w_at(-t_edge);
    const double a0 = std::arg(w0);
    for (auto& a : sol.arg_) a += a0;
    sol.norm_ = kPiQuarterInv * std::polar(std::sqrt(std::abs(w0)), 0.5 * a0);

    // Sign-normalize the (normalization, anchor) pair so that
    // m(0) = -i A Gamma(3/4)^(1/2) exactly; m(t) is invariant under the
    // joint flip (A, theta) -> (-A, theta + 2 pi).
    const std::size_t mid = sol.t_.size() / 2;
    const cplx m_mid = sol.value_from(mid, 0.0);
    const cplx ratio = m_mid / sol.at_zero();
    if (std::fabs(std::fabs(ratio.real()) - 1.0) > 1e-6 ||
        std::fabs(ratio.imag()) > 1e-6) {
        throw numeric_error("AmplitudeSolution: branch parity check failed");
    }
    if (ratio.real() < 0.0) {
        sol.norm_ = -sol.norm_;
        for (auto& a : sol.arg_) a += 2.0 * pi;
    }
    return sol;
}

AmplitudeSolution AmplitudeSolution::outgoing(const RiccatiFamily& fam,
                                              std::complex<double> normalization,
                                              double t_max) {
    if (!(t_max > 0.0)) throw domain_error("AmplitudeSolution::outgoing: t_max > 0");
    AmplitudeSolution sol(fam, 0.0, t_max, 0, pi);
    sol.norm_ = normalization;
    return sol;
}

std::complex<double> amplitude_constant(double epsilon, std::complex<double> kappa_eps) {
    return AmplitudeSolution::matched(epsilon, kappa_eps).normalization();
}

std::complex<double> amplitude_final(double epsilon) {
    const auto sol = AmplitudeSolution::matched(epsilon);
    const cplx tracked = sol.at(1.0 / epsilon);
    // closed squared form: m^2 = A^2 / w(1/eps)
    const cplx m2 = sol.normalization() * sol.normalization() /
                    companion_w(sol.family(), 1.0 / epsilon);
    cplx root = std::sqrt(m2);
    if (std::abs(root - tracked) > std::abs(root + tracked)) root = -root;
    if (std::abs(root - tracked) > 1e-8 * std::abs(root)) {
        throw numeric_error("amplitude_final: tracker disagrees with closed form");
    }
    return root;
}

std::complex<double> amplitude_final_leading(double epsilon) {
    if (!(epsilon > 0.0)) {
        throw domain_error("amplitude_final_leading: requires epsilon > 0");
    }
    // f(theta) = sqrt(2) e^{i theta} + i = e^{i theta} ((sqrt2 + sin t) + i cos t);
    // the second factor stays in the right half-plane, so its principal
    // argument is continuous and theta + Arg(...) is the unwrapped argument
    // anchored at the principal value at theta = pi/2.
    const double theta = 1.0 / epsilon;
    const double mod2 = 3.0 + 2.0 * std::numbers::sqrt2 * std::sin(theta);
    const double phi =
        theta + std::atan2(std::cos(theta), std::numbers::sqrt2 + std::sin(theta));
    return kPiQuarterInv * std::polar(std::pow(mod2, -0.25), -0.5 * phi);
}

}  // namespace adia
