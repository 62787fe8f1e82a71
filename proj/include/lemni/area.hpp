#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lemni/poly.hpp"

namespace lemni {

enum class SamplerKind { SquareLattice, TriangularLattice, UniformRandom };

std::string to_string(SamplerKind kind);
SamplerKind sampler_kind_from_string(const std::string& s);

struct SamplerConfig {
    SamplerKind kind = SamplerKind::TriangularLattice;
    long long target_points = 100000;  // p >= 100
    int trials = 1;                    // T >= 1
    std::uint64_t seed = 0;
    std::optional<double> bounding_radius_override;
};

struct AreaEstimate {
    double mean = 0.0;
    double stddev = 0.0;
    int trials = 0;
    long long points_per_trial = 0;  // target p; actual lattice counts vary by O(sqrt p)
    double bounding_radius = 0.0;
    std::uint64_t seed = 0;
};

// Smallest disc radius r with Lambda_p(t) contained in r*D that we certify:
// r = max(1 + t^(1/n), 1.05). Requires a disc/circle constraint tag unless
// the sampler supplies an override.
double bounding_radius(const LevelSetSpec& spec);

// All points of the randomly shifted+rotated+scaled lattice inside the disc
// of the given radius (or target_points uniform samples). Deterministic in
// (cfg.seed, trial_index).
std::vector<Complex> lattice_points(const SamplerConfig& cfg, double radius, int trial_index);

// Monte Carlo area of the lemniscate: per trial, area_i = pi r^2 * hits/points.
AreaEstimate estimate_area(const LevelSetSpec& spec, const SamplerConfig& cfg);

// Same estimator restricted to samples with |z| <= 1; estimates the area of
// the part of the lemniscate inside the closed unit disc.
AreaEstimate estimate_area_inside_disc(const LevelSetSpec& spec, const SamplerConfig& cfg);

// Area of {|z^n - 1| < 1} in closed form.
double erdos_area_closed_form(int n);

}  // namespace lemni
