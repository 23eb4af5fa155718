#include "adia/riccati.hpp"

#include <cmath>

#include "adia/constants.hpp"
#include "adia/specfun.hpp"

namespace adia {

namespace {

using cplx = std::complex<double>;
using specfun::bessel_j;
using specfun::series_m;

constexpr cplx kI{0.0, 1.0};

double bessel_argument(double epsilon, double t) {
    return 0.5 * epsilon * t * t;  // 2 sqrt(s)
}

bool series_regime(double epsilon, double t) {
    return bessel_argument(epsilon, t) <= specfun::kSeriesAsymptoticCrossover;
}

}  // namespace

std::complex<double> companion_w(const RiccatiFamily& fam, double t) {
    if (!std::isfinite(t)) throw domain_error("companion_w: non-finite t");
    const double eps = fam.epsilon;
    const auto arg = ScaledArgument::from(eps, t);
    if (series_regime(eps, t)) {
        const double half_sqrt_eps_t = 0.5 * std::sqrt(eps) * t;
        const cplx quarter_part = half_sqrt_eps_t * series_m(0.25, arg.s);
        if (fam.kappa.is_infinity()) return quarter_part;
        return -series_m(-0.25, arg.s) + fam.kappa.value() * quarter_part;
    }
    // Bessel form for t > 0; w(-t, kappa) = w(t, -kappa)
    const double ta = std::fabs(t);
    const double z = bessel_argument(eps, ta);
    const double s18 = std::pow(arg.s, 0.125);
    const double j_plus = bessel_j(0.25, z);
    if (fam.kappa.is_infinity()) {
        const double sign = t >= 0.0 ? 1.0 : -1.0;
        return sign * s18 * j_plus;
    }
    const cplx kap = t >= 0.0 ? fam.kappa.value() : -fam.kappa.value();
    return s18 * (-bessel_j(-0.25, z) + kap * j_plus);
}

std::complex<double> riccati_width(const RiccatiFamily& fam, double t) {
    if (!std::isfinite(t)) throw domain_error("riccati_width: non-finite t");
    const double eps = fam.epsilon;
    const auto arg = ScaledArgument::from(eps, t);
    if (series_regime(eps, t)) {
        // entire-series form, valid for either sign of t
        const double sqrt_eps = std::sqrt(eps);
        const double e2t3 = eps * eps * t * t * t;
        if (fam.kappa.is_infinity()) {
            if (t == 0.0) {
                throw domain_error("riccati_width: pole at t = 0 for kappa = inf");
            }
            return -4.0 * kI * series_m(-0.75, arg.s) / (t * series_m(0.25, arg.s));
        }
        const cplx kap = fam.kappa.value();
        const cplx num = -kI * (8.0 * kap * sqrt_eps * series_m(-0.75, arg.s) +
                                e2t3 * series_m(0.75, arg.s));
        const cplx den = 2.0 * (-2.0 * series_m(-0.25, arg.s) +
                                kap * sqrt_eps * t * series_m(0.25, arg.s));
        return num / den;
    }
    if (t < 0.0) {
        const RiccatiFamily reflected{eps, -fam.kappa};
        return -riccati_width(reflected, -t);
    }
    const double z = bessel_argument(eps, t);
    const double sqrt_s = std::sqrt(arg.s);
    const double j14 = bessel_j(0.25, z);
    const double jm14 = bessel_j(-0.25, z);
    const double j34 = bessel_j(0.75, z);
    const double jm34 = bessel_j(-0.75, z);
    if (fam.kappa.is_infinity()) {
        return -4.0 * kI * sqrt_s * jm34 / (t * j14);
    }
    const cplx kap = fam.kappa.value();
    return -4.0 * kI * sqrt_s * (kap * jm34 + j34) / (t * (-jm14 + kap * j14));
}

std::complex<double> solve_kappa(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw domain_error("solve_kappa: requires 0 < epsilon < 1");
    }
    const double z = 1.0 / (2.0 * epsilon);
    const double j14 = bessel_j(0.25, z);
    const double jm14 = bessel_j(-0.25, z);
    const double j34 = bessel_j(0.75, z);
    const double jm34 = bessel_j(-0.75, z);
    return -(jm14 + kI * j34) / (j14 - kI * jm34);
}

RiccatiFamily matched_family(double epsilon) {
    return RiccatiFamily(epsilon, Kappa(solve_kappa(epsilon)));
}

std::complex<double> matched_width(double epsilon, double t) {
    return riccati_width(matched_family(epsilon), t);
}

std::complex<double> width_final(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw domain_error("width_final: requires 0 < epsilon < 1");
    }
    const double z = 1.0 / (2.0 * epsilon);
    const double j14 = bessel_j(0.25, z);
    const double jm14 = bessel_j(-0.25, z);
    const double j34 = bessel_j(0.75, z);
    const double jm34 = bessel_j(-0.75, z);
    const double cross = j14 * j34 - jm14 * jm34;
    const cplx num = 2.0 * j34 * jm34 + kI * cross;
    const cplx den = 2.0 * jm14 * j14 + kI * cross;
    return num / den;
}

std::complex<double> width_final_leading(double epsilon) {
    if (!(epsilon > 0.0)) throw domain_error("width_final_leading: requires epsilon > 0");
    const double theta = 1.0 / epsilon;
    const double r2 = 2.0 * std::numbers::sqrt2;
    return (1.0 - r2 * kI * std::cos(theta)) / (3.0 + r2 * std::sin(theta));
}

}  // namespace adia
