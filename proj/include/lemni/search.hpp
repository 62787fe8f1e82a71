#pragma once

#include <cstdint>
#include <vector>

#include "lemni/area.hpp"
#include "lemni/poly.hpp"

namespace lemni {

enum class Symmetry { ConjugateSymmetric, None };

std::string to_string(Symmetry s);
Symmetry symmetry_from_string(const std::string& s);

// Candidate space: q roots at 1, s roots at -1, and r distinct points of the
// open upper-half grid {e^{i pi j / m} : 1 <= j <= m-1} together with their
// conjugates, q + s + 2r = n. With symmetry = None, plain n-element subsets
// of the full m-th-roots-of-unity grid instead.
struct SearchSpace {
    int n = 2;
    int m = 8;
    Symmetry symmetry = Symmetry::ConjugateSymmetric;
    bool anchor_one = true;  // force at least one root at 1
    long long budget = 10000000;
};

struct TraceRow {
    long long candidate_id = 0;
    std::vector<double> angles_over_2pi;  // sorted, with multiplicity
    int q = 0, s = 0, r = 0;
    double area_mean = 0.0;
    double area_std = 0.0;
};

struct SearchReport {
    RootConfiguration best;
    AreaEstimate best_area;  // winner re-measured at 10x points
    long long evaluated = 0;
    std::vector<std::vector<double>> ties;  // angle lists within 1 combined stddev
    std::vector<TraceRow> trace;
    std::uint64_t seed = 0;
};

// Every candidate is scored with the same lattice points (common random
// numbers), so the argmin is a deterministic function of (space, level,
// sampler.seed). Ties broken by lexicographically smallest sorted angles.
// Throws if the candidate count exceeds space.budget.
SearchReport exhaustive_search(const SearchSpace& space, double level,
                               const SamplerConfig& sampler);

// Cyclic coordinate descent: roots sorted by angle, z_0 stays pinned, each
// z_k in turn moves to the best of arc_discretization points on the arc
// between its neighbors; stops after a full cycle with no accepted move.
SearchReport local_search(const RootConfiguration& initial, double level,
                          const SamplerConfig& sampler, int arc_discretization);

struct CnhRow {
    int n = 0;
    int best_h = 0;
    std::vector<double> areas;    // areas[h-1] = estimated area of C_{n,h}
    std::vector<double> stddevs;
};

std::vector<CnhRow> cnh_sweep(int n_min, int n_max, double level, const SamplerConfig& sampler);

}  // namespace lemni
