#include "adia/scenario.hpp"

#include <cmath>
#include <numbers>

#include "adia/amplitude.hpp"
#include "adia/constants.hpp"
#include "adia/riccati.hpp"

namespace adia {

namespace {

using cplx = std::complex<double>;
using std::numbers::pi;

constexpr cplx kI{0.0, 1.0};

void validate(const ScenarioConfig& cfg) {
    if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) {
        throw domain_error("ScenarioConfig: requires 0 < epsilon < 1");
    }
    if (!(cfg.L >= 0.0)) throw domain_error("ScenarioConfig: requires L >= 0");
    if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) {
        throw domain_error("ScenarioConfig: requires 0 < delta < 1");
    }
    if (!(cfg.c_excl > 0.0)) throw domain_error("ScenarioConfig: requires c_excl > 0");
}

double big_b_of(double L, double epsilon) {
    const double l1 = -4.0 * gamma_constants().c1 * L;
    return l1 - std::sqrt(2.0 * epsilon);
}

double beta_of(double L, double epsilon) {
    const double b = big_b_of(L, epsilon);
    const double sign = b >= 0.0 ? 1.0 : -1.0;
    return std::asin(sign * std::sqrt(2.0 * epsilon) / std::sqrt(b * b + 2.0 * epsilon));
}

ScenarioResult run_touch_case(double epsilon) {
    ScenarioResult r;
    r.final_state = {amplitude_final(epsilon), width_final(epsilon)};
    r.leading_state = {amplitude_final_leading(epsilon), width_final_leading(epsilon)};
    r.survival = survival_probability(r.final_state);
    r.asymptotic_gap = l2_distance(r.final_state, r.leading_state);
    r.excluded = false;
    return r;
}

}  // namespace

double epsilon_n(int n) {
    if (n < 0) throw domain_error("epsilon_n: requires n >= 0");
    return std::pow(0.25 * pi + (2.0 * n + 1.0) * pi, -0.5);
}

MatchedConstants matched_constants(const ScenarioConfig& cfg) {
    validate(cfg);
    const double eps = cfg.epsilon;
    const double sqrt_eps = std::sqrt(eps);
    const auto& g = gamma_constants();

    MatchedConstants mc;
    const cplx kappa = solve_kappa(eps);
    mc.a_eps = 2.0 * kappa * g.c1;
    const cplx denom = -2.0 * mc.a_eps * cfg.L + sqrt_eps;
    if (std::abs(denom) < 1e-14) {
        throw numeric_error("matched_constants: degenerate matching denominator");
    }
    mc.gamma = sqrt_eps * kappa / denom;
    const cplx a_eps_const = amplitude_constant(eps, kappa);
    mc.b_eps = a_eps_const * std::pow(eps, 0.25) / std::sqrt(denom);
    mc.l1 = -4.0 * g.c1 * cfg.L;
    mc.big_b = big_b_of(cfg.L, eps);
    mc.rho = 1.0 / (2.0 * eps) - 0.125 * pi;
    mc.beta = beta_of(cfg.L, eps);

    // the outgoing family must reproduce the free-flight width at t = 0
    const RiccatiFamily outgoing(eps, Kappa(mc.gamma));
    const cplx width0 = riccati_width(outgoing, 0.0);
    const cplx target = kI * eps * mc.a_eps / denom;
    if (std::abs(width0 - target) > 1e-12 * std::max(1.0, std::abs(target))) {
        throw numeric_error("matched_constants: outgoing width mismatch at t = 0");
    }
    return mc;
}

double dwell_width_denominator(const ScenarioConfig& cfg, double epsilon) {
    const double b = big_b_of(cfg.L, epsilon);
    const double rho = 1.0 / (2.0 * epsilon) - 0.125 * pi;
    return b * b + epsilon + b * b * std::cos(2.0 * rho) -
           std::sqrt(2.0 * epsilon) * b * std::sin(2.0 * rho);
}

std::complex<double> dwell_width_leading(const ScenarioConfig& cfg, double epsilon) {
    const double b = big_b_of(cfg.L, epsilon);
    const double rho = 1.0 / (2.0 * epsilon) - 0.125 * pi;
    const double s2e = std::sqrt(2.0 * epsilon);
    const cplx num =
        epsilon + kI * (b * b * std::sin(2.0 * rho) + s2e * b * std::cos(2.0 * rho));
    return num / dwell_width_denominator(cfg, epsilon);
}

double cos_condition_lhs(const ScenarioConfig& cfg, double epsilon) {
    if (!(cfg.L > 0.0)) throw domain_error("cos_condition_lhs: requires L > 0");
    const double rho = 1.0 / (2.0 * epsilon) - 0.125 * pi;
    return std::cos(2.0 * rho + beta_of(cfg.L, epsilon));
}

bool is_excluded(const ScenarioConfig& cfg, double epsilon) {
    const double threshold = -1.0 + cfg.c_excl * std::pow(epsilon, 1.0 - cfg.delta);
    return cos_condition_lhs(cfg, epsilon) <= threshold;
}

std::vector<ExclusionInterval> excluded_set(const ScenarioConfig& cfg) {
    validate(cfg);
    if (!(cfg.L > 0.0)) throw domain_error("excluded_set: requires L > 0");
    const double l1 = -4.0 * gamma_constants().c1 * cfg.L;
    std::vector<ExclusionInterval> out;
    out.reserve(cfg.n_max + 1);
    for (int n = 0; n <= cfg.n_max; ++n) {
        const double en = epsilon_n(n);
        const double center = 1.0 / (0.25 * pi - 2.0 * en / l1 + (2.0 * n + 1.0) * pi);
        const double radius =
            n == 0 ? cfg.c_excl
                   : cfg.c_excl * std::pow(static_cast<double>(n), -0.5 * (5.0 - cfg.delta));
        out.push_back({n, center, radius});
    }
    return out;
}

bool in_excluded_covering(const ScenarioConfig& cfg, double epsilon) {
    if (!(cfg.L > 0.0)) throw domain_error("in_excluded_covering: requires L > 0");
    const double l1 = -4.0 * gamma_constants().c1 * cfg.L;
    // only intervals with center near epsilon can contain it
    const int n_guess = static_cast<int>(std::floor((1.0 / epsilon - 0.25 * pi) / (2.0 * pi)));
    for (int n = std::max(0, n_guess - 3); n <= n_guess + 3 && n <= cfg.n_max; ++n) {
        const double en = epsilon_n(n);
        const double center = 1.0 / (0.25 * pi - 2.0 * en / l1 + (2.0 * n + 1.0) * pi);
        const double radius =
            n == 0 ? cfg.c_excl
                   : cfg.c_excl * std::pow(static_cast<double>(n), -0.5 * (5.0 - cfg.delta));
        if (std::fabs(epsilon - center) < radius) return true;
    }
    return false;
}

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
    validate(cfg);
    const double eps = cfg.epsilon;
    if (cfg.L == 0.0) return run_touch_case(eps);

    const auto& g = gamma_constants();
    const auto incoming = AmplitudeSolution::matched(eps);
    const cplx kappa = incoming.kappa();
    const cplx a_eps = 2.0 * kappa * g.c1;

    // stage (i): exact state when the potential switches off
    const GaussianState at_entry{incoming.at_zero(), kI * a_eps * std::sqrt(eps)};

    // stage (ii): free flight across the continuum window
    const GaussianState at_exit_window = free_propagate(at_entry, 2.0 * cfg.L / eps);

    // stage (iii): outgoing family matched to the free-flight state
    const cplx denom = -2.0 * a_eps * cfg.L + std::sqrt(eps);
    if (std::abs(denom) < 1e-14) {
        throw numeric_error("run_scenario: degenerate matching denominator");
    }
    const cplx gamma = std::sqrt(eps) * kappa / denom;
    const RiccatiFamily outgoing_family(eps, Kappa(gamma));
    const cplx width0 = riccati_width(outgoing_family, 0.0);
    if (std::abs(width0 - at_exit_window.l) >
        1e-12 * std::max(1.0, std::abs(at_exit_window.l))) {
        throw numeric_error("run_scenario: outgoing width mismatch at t = 0");
    }
    // m*(0) = -i B Gamma(3/4)^(1/2) under the outgoing anchor
    const cplx b_eps = kI * at_exit_window.m / std::sqrt(g.gamma_3_4);
    const auto outgoing =
        AmplitudeSolution::outgoing(outgoing_family, b_eps, 1.0 / eps);

    ScenarioResult r;
    r.final_state = {outgoing.at(1.0 / eps), riccati_width(outgoing_family, 1.0 / eps)};
    r.survival = survival_probability(r.final_state);
    const cplx lead = dwell_width_leading(cfg, eps);
    r.leading_state = {r.final_state.m, lead};
    r.asymptotic_gap = std::abs(r.final_state.l - lead) / std::abs(lead);
    r.excluded = is_excluded(cfg, eps);
    return r;
}

}  // namespace adia
