#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "adia/amplitude.hpp"
#include "adia/constants.hpp"
#include "adia/riccati.hpp"

using namespace adia;
using cplx = std::complex<double>;
using std::numbers::pi;

namespace {
constexpr cplx kI{0.0, 1.0};
const double kPiQ = std::pow(pi, -0.25);
}  // namespace

TEST_SUITE_BEGIN("amplitude");

TEST_CASE("branch tracker unwraps a known winding") {
    // per-step true change 2.4 rad: above the pi/2 refinement trigger,
    // below the pi step-size contract
    auto spiral = [](double t) { return std::polar(1.0, 3.0 * t); };
    BranchTracker tr(0.0, spiral(0.0), 0.0);
    double t = 0.0;
    while (t < 7.0) {
        t = std::min(t + 0.8, 7.0);
        tr.advance(t, spiral);
    }
    CHECK(tr.last_argument() == doctest::Approx(21.0).epsilon(1e-12));
    CHECK(tr.last_t() == 7.0);

    // a genuine jump discontinuity cannot be refined away
    auto jump = [](double t) { return cplx(t < 0.5 ? 1.0 : -1.0, 0.0); };
    BranchTracker tj(0.0, jump(0.0), 0.0);
    CHECK_THROWS_AS(tj.advance(1.0, jump, 8), branch_step_error);
}

TEST_CASE("matched solution hits the start value pi^(-1/4)") {
    for (double eps : {0.2, 0.1, 0.05, 0.02}) {
        const auto sol = AmplitudeSolution::matched(eps);
        CHECK(std::abs(sol.at(-1.0 / eps) - cplx(kPiQ, 0.0)) < 1e-10);
    }
}

TEST_CASE("value at zero equals -i A Gamma(3/4)^(1/2) in every parity band") {
    // eps = 0.05 sits in a band where the raw principal anchor would flip
    // the sign; the normalization must absorb it
    for (double eps : {0.2, 0.1, 0.05, 0.02}) {
        const auto sol = AmplitudeSolution::matched(eps);
        const cplx tracked = sol.at(0.0);
        CHECK(std::abs(tracked - sol.at_zero()) < 1e-12);
        // sign-free form of the same statement
        const cplx a2 = sol.normalization() * sol.normalization();
        CHECK(std::abs(tracked * tracked + a2 * gamma_constants().gamma_3_4) <
              1e-12 * std::abs(a2));
    }
}

TEST_CASE("normalization constant asymptotics |A| ~ eps^(1/8) pi^(-1/2)") {
    double worst = 0.0;
    for (int k = 0; k <= 6; ++k) {
        const double eps = 0.1 * std::pow(2.0, -k);
        const cplx a = amplitude_constant(eps, solve_kappa(eps));
        const double target = std::pow(eps, 0.125) / std::sqrt(pi);
        worst = std::max(worst, std::fabs(std::abs(a) / target - 1.0) / eps);
    }
    CHECK(worst < 2.0);
}

TEST_CASE("amplitude-width identity pi |m|^4 = Re l along the trajectory") {
    for (double eps : {0.2, 0.1, 0.05}) {
        const auto sol = AmplitudeSolution::matched(eps);
        const RiccatiFamily fam(eps, Kappa(sol.kappa()));
        double worst = 0.0;
        for (int i = 0; i <= 80; ++i) {
            const double t = -1.0 / eps + (2.0 / eps) * i / 80.0;
            const double lhs = pi * std::pow(std::abs(sol.at(t)), 4.0);
            worst = std::max(worst, std::fabs(lhs - riccati_width(fam, t).real()));
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("squared amplitude is branch-free: m^2 w = A^2") {
    const auto sol = AmplitudeSolution::matched(0.1);
    const RiccatiFamily fam(0.1, Kappa(sol.kappa()));
    const cplx a2 = sol.normalization() * sol.normalization();
    for (double t : {-10.0, -4.2, -0.3, 0.0, 1.7, 6.4, 10.0}) {
        const cplx m = sol.at(t);
        CHECK(std::abs(m * m * companion_w(fam, t) - a2) < 1e-12 * std::abs(a2));
    }
}

TEST_CASE("amplitude satisfies i m' = (1/2) m l") {
    const double eps = 0.1, h = 1e-4;
    const auto sol = AmplitudeSolution::matched(eps);
    const RiccatiFamily fam(eps, Kappa(sol.kappa()));
    for (double t : {-7.0, -1.0, 0.4, 5.5}) {
        const cplx md = (sol.at(t + h) - sol.at(t - h)) / (2.0 * h);
        const cplx rhs = 0.5 * sol.at(t) * riccati_width(fam, t);
        CHECK(std::abs(kI * md - rhs) < 100.0 * h * h + 1e-10);
    }
}

TEST_CASE("phase continuity along the tracking grid") {
    const auto sol = AmplitudeSolution::matched(0.1);
    const auto& args = sol.grid_arguments();
    for (std::size_t i = 1; i < args.size(); ++i) {
        CHECK(std::fabs(args[i] - args[i - 1]) < 0.5 * pi);
    }
}

TEST_CASE("small-t expansion m(t) = m(0)(1 + C1 kappa sqrt(eps) t + O(t^2))") {
    for (double eps : {0.2, 0.1, 0.05}) {
        const auto sol = AmplitudeSolution::matched(eps);
        const cplx m0 = sol.at_zero();
        const cplx lin = gamma_constants().c1 * sol.kappa() * std::sqrt(eps);
        for (double t : {-1.0, -0.5, 0.25, 0.5, 1.0}) {
            const cplx got = sol.at(t);
            const cplx approx = m0 * (1.0 + lin * t);
            const double budget =
                2.0 * std::abs(m0) * std::norm(2.0 * lin * t) + 1e-12;
            CHECK(std::abs(got - approx) < budget);
        }
    }
}

TEST_CASE("amplitude at the exit time: frozen value and closed square") {
    const cplx mf = amplitude_final(0.1);
    CHECK(std::abs(mf - cplx(-0.0733481767268, 0.665708871770)) < 1e-11);

    // m(1/eps)^2 = pi^(-1/2) (-J14m - k J14)/(-J14m + k J14) at 1/(2 eps),
    // realized here through the companion values
    for (double eps : {0.2, 0.1, 0.05}) {
        const auto sol = AmplitudeSolution::matched(eps);
        const RiccatiFamily fam(eps, Kappa(sol.kappa()));
        const cplx m2 = amplitude_final(eps) * amplitude_final(eps);
        const cplx expected = (1.0 / std::sqrt(pi)) *
                              companion_w(fam, -1.0 / eps) / companion_w(fam, 1.0 / eps);
        CHECK(std::abs(m2 - expected) < 1e-12 * std::abs(expected));
    }
}

TEST_CASE("exit amplitude approaches the leading form at rate eps") {
    double worst = 0.0;
    for (int k = 0; k <= 5; ++k) {
        const double eps = 0.1 * std::pow(2.0, -k);
        worst = std::max(worst, std::abs(amplitude_final(eps) -
                                         amplitude_final_leading(eps)) / eps);
    }
    CHECK(worst < 2.0);
    // |m(1/eps)|^4 -> pi^-1 (3 + 2 sqrt2 sin(1/eps))^-1
    for (double eps : {0.05, 0.02, 0.01}) {
        const double lhs = std::pow(std::abs(amplitude_final(eps)), 4.0);
        const double rhs =
            1.0 / (pi * (3.0 + 2.0 * std::numbers::sqrt2 * std::sin(1.0 / eps)));
        CHECK(std::fabs(lhs - rhs) < 4.0 * eps * rhs);
    }
}

TEST_CASE("leading amplitude: modulus identity and width consistency") {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> es(0.002, 0.5);
    for (int i = 0; i < 50; ++i) {
        const double eps = es(rng);
        const cplx m0 = amplitude_final_leading(eps);
        const double rhs =
            1.0 / (pi * (3.0 + 2.0 * std::numbers::sqrt2 * std::sin(1.0 / eps)));
        CHECK(std::fabs(std::pow(std::abs(m0), 4.0) - rhs) < 1e-14);
        CHECK(std::fabs(pi * std::pow(std::abs(m0), 4.0) -
                        width_final_leading(eps).real()) < 1e-14);
    }
    // 1/eps = 3 pi/2 (mod 2 pi): |m0|^4 = pi^-1/(3 - 2 sqrt2)
    const double eps = 1.0 / (1.5 * pi + 6.0 * 2.0 * pi);
    CHECK(std::pow(std::abs(amplitude_final_leading(eps)), 4.0) ==
          doctest::Approx(1.0 / (pi * (3.0 - 2.0 * std::numbers::sqrt2)))
              .epsilon(1e-12));
}

TEST_CASE("leading amplitude branch matches stepwise continuation") {
    // numeric continuation oracle: unwrap sqrt(2) e^{i theta} + i from
    // theta = pi/2 in small steps
    for (double eps : {0.11, 0.043}) {
        const double theta_end = 1.0 / eps;
        const int n = 4000;
        double theta = 0.5 * pi;
        cplx prev = std::numbers::sqrt2 * std::polar(1.0, theta) + kI;
        double unwrapped = std::arg(prev);
        const double step = (theta_end - 0.5 * pi) / n;
        for (int i = 1; i <= n; ++i) {
            theta += step;
            const cplx cur = std::numbers::sqrt2 * std::polar(1.0, theta) + kI;
            unwrapped += std::arg(cur / prev);
            prev = cur;
        }
        const cplx oracle =
            kPiQ * std::polar(1.0 / std::sqrt(std::abs(prev)), -0.5 * unwrapped);
        CHECK(std::abs(amplitude_final_leading(eps) - oracle) < 1e-10);
    }
}

TEST_CASE("amplitude_constant round trip") {
    const double eps = 0.07;
    const cplx kappa = solve_kappa(eps);
    const cplx a = amplitude_constant(eps, kappa);
    const auto sol = AmplitudeSolution::matched(eps, kappa);
    CHECK(std::abs(sol.normalization() - a) < 1e-14);
    CHECK(std::abs(sol.at(-1.0 / eps) - cplx(kPiQ, 0.0)) < 1e-10);
}

TEST_CASE("outgoing solution anchors at arg pi") {
    const double eps = 0.1;
    const RiccatiFamily fam(eps, Kappa(solve_kappa(eps)));
    const cplx b{0.23, -0.11};
    const auto sol = AmplitudeSolution::outgoing(fam, b, 1.0 / eps);
    const cplx expected = -kI * b * std::sqrt(gamma_constants().gamma_3_4);
    CHECK(std::abs(sol.at(0.0) - expected) < 1e-13);
}

TEST_CASE("trajectory window is enforced") {
    const auto sol = AmplitudeSolution::matched(0.1);
    CHECK_THROWS_AS(sol.at(-10.5), domain_error);
    CHECK_THROWS_AS(sol.at(11.0), domain_error);
}

TEST_SUITE_END();
