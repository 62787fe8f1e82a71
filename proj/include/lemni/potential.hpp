#pragma once

#include <vector>

#include "lemni/poly.hpp"

namespace lemni {

// Band-limited probability measure on the unit circle:
// density v(theta) = 1 + 2 sum_{k=1}^{N} Re(muhat(k) e^{i k theta}),
// dmu = v(theta) dtheta / 2pi. coeffs[k-1] stores muhat(k).
struct CircleMeasure {
    std::vector<Complex> coeffs;

    double density(double theta) const;
    // exact antiderivative is available, but cdf() goes through composite
    // Simpson so the partition code has a single quadrature path
    double min_density(int grid = 8192) const;
    double max_density(int grid = 8192) const;
    // mass of [0, theta]
    double cdf(double theta) const;
};

// Atoms e^{i theta_j}, uniform mass 1/M each; angles strictly increasing
// in [0, 2pi).
struct DiscreteCircleMeasure {
    std::vector<double> angles;

    RootConfiguration to_configuration() const;  // unit-mult roots, UNIT_CIRCLE
};

// Normalized log-potential U(z) = (1/deg) sum m_k log|z - w_k|;
// equals log_abs_eval / degree exactly. -inf at an atom.
double discrete_potential(const RootConfiguration& config, Complex z);
double discrete_potential(const DiscreteCircleMeasure& atoms, Complex z);

// Truncated series potential of a band-limited circle measure:
//   |z| < 1:  -sum_k Re(muhat(k) z^k) / k
//   |z| > 1:  log|z| - sum_k Re(conj(muhat(k)) z^{-k}) / k
// Throws if ||z| - 1| < 1e-9 unless allow_near_circle is set (the series
// loses meaning on the circle itself).
double series_potential(const CircleMeasure& measure, Complex z, bool allow_near_circle = false);

// Angles theta_1..theta_M with mu([theta_j, theta_{j+1})) = 1/M, theta_1 = 0;
// CDF inverted by Simpson quadrature + bisection to 1e-10 mass tolerance.
// midpoint shifts every atom to the mass midpoint of its arc.
// Requires strictly positive density.
DiscreteCircleMeasure equal_mass_partition(const CircleMeasure& measure, long long M,
                                           bool midpoint = false);

}  // namespace lemni
