#pragma once

#include <string>
#include <vector>

#include "lemni/area.hpp"
#include "lemni/poly.hpp"

namespace lemni {

// N x N occupancy of strict-sublevel membership, sampled at cell centers of
// the square [-window_radius, window_radius]^2.
struct GridMask {
    int resolution = 0;
    double window_radius = 0.0;
    std::vector<std::uint8_t> bits;  // row-major, resolution^2

    bool at(int row, int col) const { return bits[static_cast<size_t>(row) * resolution + col] != 0; }
    double cell_size() const { return 2.0 * window_radius / resolution; }
};

GridMask build_grid_mask(const LevelSetSpec& spec, int resolution, double window_radius);

struct ArcList {
    // disjoint arcs (start, end) with start in [0,2pi) and end > start
    // (end may exceed 2pi for the wrap-around arc)
    std::vector<std::pair<double, double>> arcs;
    std::vector<double> lengths() const;
    double total_length() const;
};

// Lower estimate of the inradius via an exact Euclidean distance transform of
// the grid mask; accurate to about two cell diagonals. Returns 0 for an empty
// mask.
double inradius_estimate(const LevelSetSpec& spec, int resolution,
                         double window_radius_override = 0.0);

// Total length of the marching-squares contour of log|p| - log t.
// Throws if the grid shows no contour (set empty or filling the window).
double perimeter_estimate(const LevelSetSpec& spec, int resolution,
                          double window_radius_override = 0.0);

// Marching-squares segments (for the SVG emitter and perimeter).
std::vector<std::pair<Complex, Complex>> contour_segments(const LevelSetSpec& spec, int resolution,
                                                          double window_radius_override = 0.0);

// Chained contour loops, one polyline per loop.
std::vector<std::vector<Complex>> contour_loops(const LevelSetSpec& spec, int resolution,
                                                double window_radius_override = 0.0);

std::string contour_svg(const LevelSetSpec& spec, int resolution,
                        double window_radius_override = 0.0);

// Number of 4-connected components of the grid mask.
int component_count(const LevelSetSpec& spec, int resolution, double window_radius_override = 0.0);

// Maximal arcs of the unit circle on which |p(e^{i theta})| < t, endpoints
// refined by bisection.
ArcList circle_arc_intersections(const LevelSetSpec& spec, int angular_samples,
                                 double bisection_tol = 1e-10);

// Cyclic sign alternations of log|p(center + radius e^{i theta})| - log t.
// Identically-zero h counts as 0.
int sign_changes(const RootConfiguration& config, double t, Complex center, double radius,
                 int angular_samples);

// log( sup_{|z|<1} |v| / sup_{|z|<1/2} |v| ) for v(z) = log|p(shrink z)|,
// roots on the unit circle.
double doubling_exponent(const RootConfiguration& config, double shrink = 0.98, int grid = 4096);

// sup over positive-length arcs (alpha, beta), 0 <= alpha < beta <= 2pi, of
// |empirical mass - normalized length|. Exact for the atom configuration.
double discrepancy(const RootConfiguration& config);

struct VerifyReport {
    std::string check;
    double lhs = 0.0;    // quantity that should be >= rhs (margin = lhs - rhs)
    double rhs = 0.0;
    double margin = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// rho(Lambda) >= sqrt(area)/(72 pi sqrt(pi) n)
VerifyReport verify_inradius_area(const LevelSetSpec& spec, int resolution,
                                  const SamplerConfig& sampler);

// |p(r e^{i theta})| <= |p((2-r) e^{i theta})| for roots in the closed disc;
// lhs = violation count, rhs = 0, pass iff no sample violates by > 1e-12.
VerifyReport verify_reflection(const RootConfiguration& config, long long samples,
                               std::uint64_t seed);

// L(Lambda) <= 4 n sqrt(pi) sqrt(A)
VerifyReport verify_perimeter_area(const LevelSetSpec& spec, int resolution,
                                   const SamplerConfig& sampler, double rel_tolerance);

// A <= 18 pi rho L
VerifyReport verify_area_chain(const LevelSetSpec& spec, int resolution,
                               const SamplerConfig& sampler, double rel_tolerance);

// m(Lambda_{p o q}(t)) <= pi (m(Lambda_p(t))/pi)^{1/d} + 4 sigma
VerifyReport verify_crane(const RootConfiguration& inner_q, const LevelSetSpec& outer_spec,
                          const SamplerConfig& sampler);

}  // namespace lemni
