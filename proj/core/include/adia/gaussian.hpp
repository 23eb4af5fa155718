#pragma once

#include <complex>

#include "adia/errors.hpp"

namespace adia {

/// Gaussian state v(x) = m exp(-l x^2 / 2); normalizable iff Re l > 0.
struct GaussianState {
    std::complex<double> m;  ///< amplitude prefactor
    std::complex<double> l;  ///< complex width parameter
};

/// The normalized ground state phi_0 = pi^(-1/4) e^{-x^2/2}.
GaussianState ground_state();

/// ||v||^2 = |m|^2 sqrt(pi / Re l). Throws domain_error if Re l <= 0.
double norm_squared(const GaussianState& g);

/// Bilinear overlap with the ground state (no conjugation; phi_0 is real):
/// integral phi_0 v dx = sqrt(2) pi^(1/4) m / (1 + l)^(1/2), principal root.
/// Requires Re(1 + l) > 0.
std::complex<double> overlap_with_ground(const GaussianState& g);

/// |<v, phi_0>|^2 / ||v||^2, in [0, 1].
double survival_probability(const GaussianState& g);

/// Exact free-Schroedinger propagation by time T >= 0:
/// l -> l / (1 + i l T), m -> m / (1 + i l T)^(1/2), branch continuous in T
/// from the principal root at T = 0.
GaussianState free_propagate(const GaussianState& g, double T);

/// Sesquilinear pair overlap <a, b> = integral a conj(b) dx.
std::complex<double> pair_overlap(const GaussianState& a, const GaussianState& b);

/// L^2 distance ||a - b||.
double l2_distance(const GaussianState& a, const GaussianState& b);

}  // namespace adia
