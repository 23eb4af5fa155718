#pragma once

#include <complex>

#include "adia/errors.hpp"

namespace adia {

/// Projective constant selecting a solution of the width Riccati equation
/// l' + i l^2 = i eps^2 t^2. Lives in (C u {inf}) \ R; a real value would
/// put zeros of the companion solution on the real line.
class Kappa {
public:
    explicit Kappa(std::complex<double> v) : v_(v) {
        if (v.imag() == 0.0) {
            throw domain_error("Kappa: real values are not admissible");
        }
    }

    static Kappa infinity() {
        Kappa k;
        k.inf_ = true;
        return k;
    }

    bool is_infinity() const { return inf_; }

    std::complex<double> value() const {
        if (inf_) throw domain_error("Kappa: point at infinity has no finite value");
        return v_;
    }

    Kappa operator-() const {
        if (inf_) return *this;
        return Kappa(-v_);
    }

private:
    Kappa() = default;
    std::complex<double> v_{0.0, 0.0};
    bool inf_ = false;
};

/// One solution family of the width Riccati equation, parametrized by the
/// adiabatic constant eps > 0 and the projective constant kappa.
struct RiccatiFamily {
    RiccatiFamily(double epsilon_, Kappa kappa_) : epsilon(epsilon_), kappa(kappa_) {
        if (!(epsilon > 0.0)) throw domain_error("RiccatiFamily: requires epsilon > 0");
    }
    double epsilon;
    Kappa kappa;
};

/// Dimensionless series argument s = eps^2 t^4 / 16 (so 2 sqrt(s) = eps t^2/2).
struct ScaledArgument {
    double s;
    double t;
    static ScaledArgument from(double epsilon, double t) {
        const double t2 = t * t;
        return {epsilon * epsilon * t2 * t2 / 16.0, t};
    }
};

/// Entire companion solution of the linearized Riccati equation:
/// w(t) = -M_{-1/4}(s) + kappa (sqrt(eps) t / 2) M_{1/4}(s); the width
/// parameter is its negative log-derivative times i. Zero-free on the real
/// line for non-real finite kappa. For kappa = inf the J_{1/4} part alone
/// is used (normalized as (sqrt(eps) t/2) M_{1/4}(s)).
std::complex<double> companion_w(const RiccatiFamily& fam, double t);

/// Closed-form width parameter l(t, kappa). Uses the entire-series form
/// below the crossover and the Bessel form (with the reflection
/// w(-t,kappa) = w(t,-kappa)) above it.
std::complex<double> riccati_width(const RiccatiFamily& fam, double t);

/// Projective constant kappa_eps matching the initial condition
/// l(-1/eps) = 1:
/// kappa = -(J_{-1/4} + i J_{3/4}) / (J_{1/4} - i J_{-3/4}) at 1/(2 eps).
std::complex<double> solve_kappa(double epsilon);

/// Family selected by the initial condition l(-1/eps) = 1.
RiccatiFamily matched_family(double epsilon);

/// l*(t) = riccati_width with kappa = kappa_eps.
std::complex<double> matched_width(double epsilon, double t);

/// Exact l*(1/eps) as a ratio of Bessel products evaluated at 1/(2 eps).
std::complex<double> width_final(double epsilon);

/// Leading oscillatory form of l*(1/eps):
/// (1 - 2 sqrt(2) i cos(1/eps)) / (3 + 2 sqrt(2) sin(1/eps)).
std::complex<double> width_final_leading(double epsilon);

}  // namespace adia
