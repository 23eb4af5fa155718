#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <complex>
#include <numbers>

#include "adia/constants.hpp"
#include "adia/specfun.hpp"

using namespace adia;
using namespace adia::specfun;
using std::numbers::pi;

namespace {

// Independent series oracle: plain 60-term summation of
// (x/2)^nu sum (-1)^k (x^2/4)^k / (k! Gamma(nu+k+1)) in extended precision.
// Converges absolutely for small arguments.
long double series_oracle(long double nu, long double x, int terms = 60) {
    long double sum = 0.0L;
    long double term = powl(x / 2.0L, nu) / tgammal(nu + 1.0L);
    for (int k = 0; k < terms; ++k) {
        sum += term;
        term *= -(x * x / 4.0L) / ((k + 1.0L) * (nu + k + 1.0L));
    }
    return sum;
}

double envelope(double x) { return std::sqrt(2.0 / (pi * x)); }

}  // namespace

TEST_SUITE_BEGIN("specfun");

TEST_CASE("gamma constants and reflection identity") {
    const auto& g = gamma_constants();
    CHECK(g.gamma_1_4 == doctest::Approx(3.6256099082219083).epsilon(1e-15));
    CHECK(g.gamma_3_4 == doctest::Approx(1.2254167024651776).epsilon(1e-15));
    CHECK(g.gamma_1_4 * g.gamma_3_4 ==
          doctest::Approx(pi * std::numbers::sqrt2).epsilon(1e-15));
    CHECK(std::fabs(2.0 * g.c1 - 0.676) < 1e-3);
    CHECK(gamma_constants_consistent(g));

    GammaConstants bad = g;
    bad.gamma_3_4 *= 1.0 + 1e-9;
    CHECK_FALSE(gamma_constants_consistent(bad));
}

TEST_CASE("gamma_real quarter and half integers") {
    CHECK(gamma_real(0.25) == doctest::Approx(3.6256099082219083).epsilon(1e-15));
    CHECK(gamma_real(1.25) == doctest::Approx(0.90640247705547708).epsilon(1e-15));
    CHECK(gamma_real(1.75) == doctest::Approx(0.91906252684888323).epsilon(1e-15));
    CHECK(gamma_real(-0.25) == doctest::Approx(-4.9016668098607106).epsilon(1e-14));
    CHECK(gamma_real(-0.75) == doctest::Approx(-4.8341465442958777).epsilon(1e-14));
    CHECK(gamma_real(0.5) == doctest::Approx(std::sqrt(pi)).epsilon(1e-15));
    CHECK(gamma_real(3.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(gamma_real(0.0), domain_error);
    CHECK_THROWS_AS(gamma_real(-2.0), domain_error);
}

TEST_CASE("bessel_j small-argument leading term") {
    // J_{1/4}(x) = (x/2)^{1/4} / Gamma(5/4) (1 + O(x^2)) as x -> 0+
    for (double x : {1e-4, 1e-3, 1e-2}) {
        const double lead = std::pow(0.5 * x, 0.25) / gamma_real(1.25);
        CHECK(std::fabs(bessel_j(0.25, x) / lead - 1.0) < 0.5 * x * x);
    }
}

TEST_CASE("bessel_j against the direct summation oracle") {
    const double v = bessel_j(0.25, 1.0);
    const auto oracle = static_cast<double>(series_oracle(0.25L, 1.0L));
    CHECK(std::fabs(v - oracle) / std::fabs(v) < 1e-14);
    CHECK(v == doctest::Approx(0.75223133334079006).epsilon(1e-15));

    CHECK(bessel_j(-0.25, 1.0) == doctest::Approx(0.66938481726157445).epsilon(1e-14));
    CHECK(bessel_j(0.75, 2.0) == doctest::Approx(0.56982182917425685).epsilon(1e-14));
    CHECK(bessel_j(-0.75, 2.0) == doctest::Approx(-0.44672065795573945).epsilon(1e-14));
    CHECK(bessel_j(-1.75, 3.0) == doctest::Approx(0.32232413471265145).epsilon(1e-13));
}

TEST_CASE("bessel_j large-argument values") {
    // mpmath references
    CHECK(std::fabs(bessel_j(0.25, 20.0) - 0.17829833853427490) < 1e-13);
    CHECK(std::fabs(bessel_j(0.25, 50.0) - 0.014106062680889886) < 1e-13);
    CHECK(std::fabs(bessel_j(0.75, 30.0) - (-0.14176169104122454)) < 1e-13);
    CHECK(std::fabs(bessel_j(0.25, 100.0) - (-0.011070927544649827)) < 1e-13);
    CHECK(std::fabs(bessel_j(0.25, 500.0) - (-0.027485487137731849)) < 1e-12);
    CHECK(std::fabs(bessel_j(-0.25, 500.0) - (-0.035525343140083577)) < 1e-12);

    // paper-form two-term asymptotic at x = 50
    const double x = 50.0, nu = 0.25;
    const double w = x - 0.5 * nu * pi - 0.25 * pi;
    const double two_term =
        envelope(x) * (std::cos(w) - (4 * nu * nu - 1) / (8 * x) * std::sin(w));
    CHECK(std::fabs(bessel_j(nu, x) - two_term) < 1e-3);
}

TEST_CASE("bessel_j against an independent library implementation") {
    for (double nu : {0.25, -0.25, 0.75, -0.75, 0.6, 1.25}) {
        for (int i = 0; i <= 60; ++i) {
            const double x = 1e-2 * std::pow(4e4, i / 60.0);
            const double mine = bessel_j(nu, x);
            const double ref = boost::math::cyl_bessel_j(nu, x);
            CHECK(std::fabs(mine - ref) < 1e-12 * std::max(1.0, envelope(std::max(x, 1.0))));
        }
    }
}

TEST_CASE("bessel_j domain handling") {
    CHECK_THROWS_AS(bessel_j(0.25, -1.0), domain_error);
    CHECK_THROWS_AS(bessel_j(0.25, std::nan("")), domain_error);
    CHECK(bessel_j(0.0, 0.0) == 1.0);
    CHECK(bessel_j(0.75, 0.0) == 0.0);
    CHECK(std::isinf(bessel_j(-0.25, 0.0)));
    CHECK(bessel_j(-1.0, 0.0) == 0.0);
    // negative integer order via the reflection J_{-n} = (-1)^n J_n
    CHECK(bessel_j(-1.0, 2.5) ==
          doctest::Approx(-boost::math::cyl_bessel_j(1.0, 2.5)).epsilon(1e-13));
}

TEST_CASE("bessel_y definition and special values") {
    // Y_{1/4} = J_{1/4} - sqrt(2) J_{-1/4}
    for (double z : {0.7, 2.0, 9.0, 31.0}) {
        const double lhs = bessel_y(0.25, z);
        const double rhs = bessel_j(0.25, z) - std::numbers::sqrt2 * bessel_j(-0.25, z);
        CHECK(std::fabs(lhs - rhs) < 1e-13 * std::max(1.0, std::fabs(rhs)));
    }
    // defining combination at nu = 3/4, rebuilt from independent J values
    {
        const double nu = 0.75, x = 2.0;
        const double rhs = (bessel_j(nu, x) * std::cos(nu * pi) - bessel_j(-nu, x)) /
                           std::sin(nu * pi);
        CHECK(std::fabs(bessel_y(nu, x) - rhs) / std::fabs(rhs) < 1e-13);
        CHECK(bessel_y(nu, x) == doctest::Approx(0.061936583898982346).epsilon(1e-12));
    }
    CHECK(bessel_y(0.25, 2.0) == doctest::Approx(0.39273839961538506).epsilon(1e-13));
    // half-integer closed form: Y_{1/2}(pi) = -J_{-1/2}(pi) = sqrt(2)/pi
    CHECK(bessel_y(0.5, pi) == doctest::Approx(std::numbers::sqrt2 / pi).epsilon(1e-13));

    CHECK_THROWS_AS(bessel_y(1.0, 2.0), unsupported_error);
    CHECK_THROWS_AS(bessel_y(0.25, 0.0), domain_error);
    CHECK_THROWS_AS(bessel_y(0.25, -3.0), domain_error);
}

TEST_CASE("series_m values and entire-function consistency") {
    CHECK(series_m(-0.25, 0.0) ==
          doctest::Approx(1.0 / gamma_real(0.75)).epsilon(1e-15));
    CHECK(series_m(0.25, 0.0) ==
          doctest::Approx(1.0 / gamma_real(1.25)).epsilon(1e-15));
    CHECK(series_m(0.75, 2.5) == doctest::Approx(0.10218269752493999).epsilon(1e-13));
    CHECK(series_m(-0.25, 50.0) == doctest::Approx(0.13289595950518458).epsilon(1e-12));

    // J_nu(2 sqrt(s)) = s^(nu/2) M_nu(s)
    {
        const double nu = 0.75, s = 2.5;
        const double lhs = bessel_j(nu, 2.0 * std::sqrt(s));
        const double rhs = std::pow(s, 0.5 * nu) * series_m(nu, s);
        CHECK(std::fabs(lhs - rhs) / std::fabs(lhs) < 1e-12);
    }
    for (double nu : {0.25, -0.25, 0.75, -0.75}) {
        for (double s : {0.5, 4.0, 25.0, 64.0, 100.0}) {
            const double lhs = bessel_j(nu, 2.0 * std::sqrt(s));
            const double rhs = std::pow(s, 0.5 * nu) * series_m(nu, s);
            CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(std::fabs(lhs), 0.02));
        }
    }

    const auto info = series_m_info(0.25, 50.0);
    CHECK(info.terms_used >= 1);
    CHECK(info.est_rel_error >= 0.0);
    CHECK(info.est_rel_error < 1e-12);

    CHECK_THROWS_AS(series_m(0.25, std::nan("")), domain_error);
}

TEST_CASE("series_m complex arguments") {
    using cplx = std::complex<double>;
    // matches the real path on the real axis
    CHECK(std::abs(series_m(0.25, cplx(3.0, 0.0)) - series_m(0.25, 3.0)) < 1e-15);
    // direct complex summation oracle
    for (const cplx s : {cplx(0.0, 1.0), cplx(-2.0, 3.0), cplx(5.0, -4.0)}) {
        cplx term{1.0, 0.0}, sum{0.0, 0.0};
        long double g = tgammal(1.25L);
        for (int k = 0; k < 80; ++k) {
            sum += term / static_cast<double>(g);
            g *= (0.25L + k + 1.0L);
            term *= -s / (k + 1.0);
        }
        CHECK(std::abs(series_m(0.25, s) - sum) < 1e-13 * std::abs(sum));
    }
}

TEST_CASE("bessel_j_zeros") {
    // J_{1/2}(x) ~ sin(x)/sqrt(x): zeros at k pi
    const auto half = bessel_j_zeros(0.5, 3);
    CHECK(std::fabs(half[0] - pi) < 1e-10);
    CHECK(std::fabs(half[1] - 2 * pi) < 1e-10);
    CHECK(std::fabs(half[2] - 3 * pi) < 1e-10);

    // mpmath references
    const auto zp = bessel_j_zeros(0.25, 5);
    const double ref_p[] = {2.78088772399498, 5.90614269884249, 9.04238366358326,
                            12.1813415289550, 15.3213698260123};
    for (int i = 0; i < 5; ++i) CHECK(std::fabs(zp[i] - ref_p[i]) < 1e-10);

    const auto zm = bessel_j_zeros(-0.25, 5);
    const double ref_m[] = {2.00629967178945, 5.12306274274634, 8.25795117564189,
                            11.3964676969866, 14.5362998843379};
    for (int i = 0; i < 5; ++i) CHECK(std::fabs(zm[i] - ref_m[i]) < 1e-10);

    // interlacing over the first 20 zeros
    const auto zp20 = bessel_j_zeros(0.25, 20);
    const auto zm20 = bessel_j_zeros(-0.25, 20);
    for (int i = 0; i < 20; ++i) {
        CHECK(zm20[i] < zp20[i]);
        if (i + 1 < 20) CHECK(zp20[i] < zm20[i + 1]);
    }

    const auto z34 = bessel_j_zeros(0.75, 1);
    CHECK(z34[0] > 2.0);
    CHECK(z34[0] < 4.0);
    CHECK(std::fabs(z34[0] - 3.49100837410842) < 1e-10);

    CHECK_THROWS_AS(bessel_j_zeros(1.5, 3), domain_error);
    CHECK_THROWS_AS(bessel_j_zeros(0.25, 0), domain_error);
    CHECK_THROWS_AS(bessel_j_zeros(0.25, 101), domain_error);
}

TEST_CASE("hankel_asymptotic_j") {
    // order=1 reproduces the two-term form exactly
    {
        const double nu = 0.25, x = 100.0;
        const double w = x - 0.5 * nu * pi - 0.25 * pi;
        const double expected =
            envelope(x) * (std::cos(w) - (4 * nu * nu - 1) / (8 * x) * std::sin(w));
        CHECK(hankel_asymptotic_j(nu, x, 1) == doctest::Approx(expected).epsilon(1e-15));
    }
    // half-integer order: the correction series terminates, any order is exact
    {
        const double x = 10.0;
        const double expected = envelope(x) * std::cos(x - 0.5 * pi);
        CHECK(hankel_asymptotic_j(0.5, x, 1) == doctest::Approx(expected).epsilon(1e-15));
        CHECK(hankel_asymptotic_j(0.5, x, 15) ==
              doctest::Approx(expected).epsilon(1e-15));
    }
    // moderate x against the high-precision value: with three correction
    // terms the truncation floor is the first omitted term,
    // a_4/x^4 * envelope ~ 1.6e-8 at x = 30; eight terms reach 1e-11
    CHECK(std::fabs(hankel_asymptotic_j(0.75, 30.0, 3) - (-0.14176169104122454)) < 3e-8);
    CHECK(std::fabs(hankel_asymptotic_j(0.75, 30.0, 8) - (-0.14176169104122454)) < 1e-11);

    // past the optimal truncation the expansion cannot honor the request
    CHECK_THROWS_AS(hankel_asymptotic_j(0.25, 4.0, 20), accuracy_error);
    CHECK_THROWS_AS(hankel_asymptotic_j(0.25, 100.0, 0), domain_error);
    CHECK_THROWS_AS(hankel_asymptotic_j(0.25, -5.0, 1), domain_error);
}

TEST_CASE("wronskian identity across the full range") {
    for (double nu : {0.25, 0.75}) {
        for (int i = 0; i <= 200; ++i) {
            const double z = 0.1 * std::pow(5000.0, i / 200.0);
            const double lhs = bessel_j(nu, z) * bessel_j_derivative(-nu, z) -
                               bessel_j_derivative(nu, z) * bessel_j(-nu, z);
            const double target = -2.0 * std::sin(nu * pi) / (pi * z);
            CHECK(std::fabs(lhs - target) <= 1e-10 * (2.0 / (pi * z)));
        }
    }
}

TEST_CASE("series and asymptotic paths agree at the crossover") {
    // hankel_asymptotic_j is the public window into the asymptotic path;
    // just below the crossover bessel_j uses the series
    for (double nu : {0.25, -0.25, 0.75, -0.75}) {
        for (double x : {20.0, 20.0 - 1e-9}) {
            const double series_val = bessel_j(nu, x);
            const double asym_val = hankel_asymptotic_j(nu, x, 18);
            CHECK(std::fabs(series_val - asym_val) <= 1e-11 * std::fabs(asym_val));
        }
    }
}

TEST_CASE("self_test reports all green") {
    const auto report = self_test();
    for (const auto& e : report.entries) {
        INFO(e.name, " metric=", e.metric, " bound=", e.bound);
        CHECK(e.pass);
    }
    CHECK(report.pass);
}

TEST_SUITE_END();
