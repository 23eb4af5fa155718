#pragma once

#include <cmath>
#include <numbers>

namespace adia {

/// Hard-coded Gamma-function constants for the quarter-integer orders the
/// model lives on, validated against the reflection identity
/// Gamma(1/4)*Gamma(3/4) = pi*sqrt(2).
struct GammaConstants {
    double gamma_1_4;  ///< Gamma(1/4)
    double gamma_3_4;  ///< Gamma(3/4)
    double c1;         ///< Gamma(3/4)/Gamma(1/4)
};

inline constexpr double kGamma14 = 3.6256099082219083;
inline constexpr double kGamma34 = 1.2254167024651776;

inline const GammaConstants& gamma_constants() {
    static const GammaConstants g{kGamma14, kGamma34, kGamma34 / kGamma14};
    return g;
}

/// Reflection-identity and magnitude checks on a GammaConstants value.
/// Split out so a deliberately perturbed set can be fed in as a negative
/// control.
inline bool gamma_constants_consistent(const GammaConstants& g,
                                       double reflection_tol = 1e-14,
                                       double c1_tol = 1e-3) {
    const double reflection = g.gamma_1_4 * g.gamma_3_4;
    const double target = std::numbers::pi * std::numbers::sqrt2;
    if (std::fabs(reflection - target) > reflection_tol * target) return false;
    if (std::fabs(2.0 * g.c1 - 0.676) > c1_tol) return false;
    return std::fabs(g.c1 - g.gamma_3_4 / g.gamma_1_4) <= 1e-15;
}

}  // namespace adia
