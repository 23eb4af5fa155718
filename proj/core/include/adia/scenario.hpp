#pragma once

#include <complex>
#include <vector>

#include "adia/errors.hpp"
#include "adia/gaussian.hpp"

namespace adia {

/// Configuration of one end-to-end run. L is the macroscopic half-length
/// of the interval the eigenvalues spend in the continuum; delta and
/// c_excl control the excluded-set test for L > 0.
struct ScenarioConfig {
    double epsilon = 0.1;
    double L = 0.0;
    double delta = 0.5;
    double c_excl = 1.0;
    int n_max = 100;  ///< truncation of the reported excluded-set covering
};

/// Constants produced by matching the free-flight state onto the outgoing
/// solution family.
struct MatchedConstants {
    std::complex<double> a_eps;  ///< 2 kappa_eps Gamma(3/4)/Gamma(1/4)
    std::complex<double> gamma;  ///< outgoing projective constant
    std::complex<double> b_eps;  ///< outgoing normalization constant
    double l1;                   ///< -4 C1 L
    double big_b;                ///< L1 - sqrt(2 eps)
    double rho;                  ///< 1/(2 eps) - pi/8
    double beta;                 ///< asin(sqrt(2 eps) sign(B) / sqrt(B^2 + 2 eps))
};

struct ScenarioResult {
    GaussianState final_state;   ///< exact state at exit time 1/eps
    double survival = 0.0;       ///< ground-state survival probability
    GaussianState leading_state; ///< leading asymptotic form
    double asymptotic_gap = 0.0; ///< L=0: L2 distance; L>0: relative width gap
    bool excluded = false;       ///< epsilon fails the L>0 denominator bound
};

/// Run the full pipeline. L = 0: exact final state against the leading
/// oscillatory forms. L > 0: incoming stage to t=0, free flight of length
/// 2L/eps, outgoing family matched through (gamma, B_eps).
ScenarioResult run_scenario(const ScenarioConfig& cfg);

/// Matching constants for the outgoing stage (degenerates to
/// gamma = kappa_eps, B_eps = A_eps at L = 0).
MatchedConstants matched_constants(const ScenarioConfig& cfg);

/// eps(n) = (pi/4 + (2n+1) pi)^(-1/2); tracks sqrt(eps) at the n-th
/// excluded interval.
double epsilon_n(int n);

struct ExclusionInterval {
    int n = 0;
    double center = 0.0;
    double radius = 0.0;
};

/// Reported covering of the excluded set: intervals around
/// 1/(pi/4 - 2 eps(n)/L1 + (2n+1) pi) of radius c_excl n^{-(5-delta)/2}
/// (radius c_excl at n = 0). Requires L > 0.
std::vector<ExclusionInterval> excluded_set(const ScenarioConfig& cfg);

/// Left-hand side cos(2 rho + beta) of the denominator-degeneracy test.
double cos_condition_lhs(const ScenarioConfig& cfg, double epsilon);

/// Authoritative exclusion test: cos(2 rho + beta) <= -1 + c_excl eps^(1-delta).
bool is_excluded(const ScenarioConfig& cfg, double epsilon);

/// Membership of eps in the reported covering intervals.
bool in_excluded_covering(const ScenarioConfig& cfg, double epsilon);

/// Denominator A(eps) = B^2 + eps + B^2 cos 2rho - sqrt(2 eps) B sin 2rho.
double dwell_width_denominator(const ScenarioConfig& cfg, double epsilon);

/// Leading width form of the L > 0 exit state:
/// [eps + i (B^2 sin 2rho + sqrt(2 eps) B cos 2rho)] / A(eps).
std::complex<double> dwell_width_leading(const ScenarioConfig& cfg, double epsilon);

}  // namespace adia
