#include "adia/gaussian.hpp"

#include <cmath>
#include <numbers>

namespace adia {

namespace {

using cplx = std::complex<double>;
using std::numbers::pi;

constexpr cplx kI{0.0, 1.0};

}  // namespace

GaussianState ground_state() {
    return {std::pow(pi, -0.25), {1.0, 0.0}};
}

double norm_squared(const GaussianState& g) {
    if (!(g.l.real() > 0.0)) {
        throw domain_error("norm_squared: state not normalizable (Re l <= 0)");
    }
    return std::norm(g.m) * std::sqrt(pi / g.l.real());
}

std::complex<double> overlap_with_ground(const GaussianState& g) {
    const cplx one_plus_l = 1.0 + g.l;
    if (!(one_plus_l.real() > 0.0)) {
        throw domain_error("overlap_with_ground: divergent integral (Re(1+l) <= 0)");
    }
    return std::numbers::sqrt2 * std::pow(pi, 0.25) * g.m / std::sqrt(one_plus_l);
}

double survival_probability(const GaussianState& g) {
    const double p = std::norm(overlap_with_ground(g)) / norm_squared(g);
    return std::min(p, 1.0);
}

GaussianState free_propagate(const GaussianState& g, double T) {
    if (!(g.l.real() > 0.0)) {
        throw domain_error("free_propagate: requires Re l > 0");
    }
    if (!(T >= 0.0)) throw domain_error("free_propagate: requires T >= 0");
    // 1 + i l T traces a segment from 1 into the closed upper half-plane,
    // so the principal square root is already the T-continuous branch.
    const cplx denom = 1.0 + kI * g.l * T;
    return {g.m / std::sqrt(denom), g.l / denom};
}

std::complex<double> pair_overlap(const GaussianState& a, const GaussianState& b) {
    const cplx lsum = a.l + std::conj(b.l);
    if (!(lsum.real() > 0.0)) {
        throw domain_error("pair_overlap: divergent integral");
    }
    return a.m * std::conj(b.m) * std::sqrt(2.0 * pi / lsum);
}

double l2_distance(const GaussianState& a, const GaussianState& b) {
    const double d2 = norm_squared(a) + norm_squared(b) - 2.0 * pair_overlap(a, b).real();
    return std::sqrt(std::max(d2, 0.0));
}

}  // namespace adia
