#pragma once

#include <complex>
#include <string>
#include <vector>

#include "adia/constants.hpp"
#include "adia/errors.hpp"

namespace adia::specfun {

/// Fractional Bessel order. |nu| < 2 stays on the tuned fast path (exact
/// quarter/half-integer Gamma seeds); any real order is accepted by the
/// series path.
using BesselOrder = double;

/// Outcome of a truncated series evaluation.
struct SeriesResult {
    double value = 0.0;
    int terms_used = 0;
    double est_rel_error = 0.0;
};

/// Argument at which bessel_j switches from the power series to the
/// large-argument expansion.
inline constexpr double kSeriesAsymptoticCrossover = 20.0;

/// Gamma(x), exact-constant path for quarter- and half-integer x,
/// std::tgamma otherwise. Throws domain_error at non-positive integers.
double gamma_real(double x);

/// Bessel function of the first kind, J_nu(x), x >= 0.
/// Power series (compensated) below the crossover, Hankel expansion above.
double bessel_j(BesselOrder nu, double x);

/// d/dx J_nu(x) via the recurrence J_nu' = J_{nu-1} - (nu/x) J_nu, x > 0.
double bessel_j_derivative(BesselOrder nu, double x);

/// Bessel function of the second kind for non-integer order:
/// Y_nu = (J_nu cos(nu pi) - J_{-nu}) / sin(nu pi), x > 0.
double bessel_y(BesselOrder nu, double x);

/// Entire series M_nu(s) = sum_k (-1)^k s^k / (k! Gamma(nu+k+1)),
/// related to J by J_nu(2 sqrt(s)) = s^(nu/2) M_nu(s).
double series_m(BesselOrder nu, double s);
std::complex<double> series_m(BesselOrder nu, std::complex<double> s);
SeriesResult series_m_info(BesselOrder nu, double s);

/// First `count` positive zeros of J_nu in increasing order, located by a
/// unit-step sign scan followed by bisection to 1e-10.
std::vector<double> bessel_j_zeros(BesselOrder nu, int count);

/// Large-argument expansion of J_nu through `order` correction terms in
/// 1/x. order=1 is the classical two-term form
/// sqrt(2/(pi x)) (cos w - (4 nu^2 - 1)/(8x) sin w), w = x - nu pi/2 - pi/4.
/// Throws accuracy_error when `order` lies past the optimal truncation
/// index for the given x.
double hankel_asymptotic_j(BesselOrder nu, double x, int order);

/// Pass/fail kernel consistency report (Wronskian, interlacing, crossover
/// agreement, series/Bessel identity, Gamma reflection).
struct SelfTestReport {
    struct Entry {
        std::string name;
        bool pass = false;
        double metric = 0.0;  ///< worst observed residual
        double bound = 0.0;   ///< tolerance it was held against
    };
    std::vector<Entry> entries;
    bool pass = false;
};

SelfTestReport self_test();

}  // namespace adia::specfun
