#include "lemni/area.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "lemni/parallel.hpp"
#include "lemni/rng.hpp"

namespace lemni {

std::string to_string(SamplerKind kind) {
    switch (kind) {
        case SamplerKind::SquareLattice: return "SQUARE_LATTICE";
        case SamplerKind::TriangularLattice: return "TRIANGULAR_LATTICE";
        default: return "UNIFORM_RANDOM";
    }
}

SamplerKind sampler_kind_from_string(const std::string& s) {
    if (s == "SQUARE_LATTICE" || s == "square") return SamplerKind::SquareLattice;
    if (s == "TRIANGULAR_LATTICE" || s == "triangular") return SamplerKind::TriangularLattice;
    if (s == "UNIFORM_RANDOM" || s == "uniform") return SamplerKind::UniformRandom;
    throw std::invalid_argument("unknown sampler kind: " + s);
}

double bounding_radius(const LevelSetSpec& spec) {
    if (spec.config.tag() == ConstraintTag::None)
        throw std::invalid_argument(
            "bounding_radius: untagged configuration; supply bounding_radius_override");
    double n = static_cast<double>(spec.config.degree());
    return std::max(1.0 + std::pow(spec.level, 1.0 / n), 1.05);
}

std::vector<Complex> lattice_points(const SamplerConfig& cfg, double radius, int trial_index) {
    if (!(radius > 0.0)) throw std::invalid_argument("lattice_points: radius > 0 required");
    if (cfg.target_points < 100) throw std::invalid_argument("lattice_points: p >= 100 required");

    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(trial_index)));
    const double p = static_cast<double>(cfg.target_points);
    std::vector<Complex> pts;
    pts.reserve(static_cast<size_t>(cfg.target_points) + 64);

    if (cfg.kind == SamplerKind::UniformRandom) {
        for (long long i = 0; i < cfg.target_points; ++i) {
            // radius via inverse CDF, angle uniform
            double r = radius * std::sqrt(rng.next_double());
            double a = kTau * rng.next_double();
            pts.emplace_back(r * std::cos(a), r * std::sin(a));
        }
        return pts;
    }

    const bool tri = cfg.kind == SamplerKind::TriangularLattice;
    // basis vectors of the unscaled lattice: 1 and (1 or e^{2 pi i/3})
    const Complex e1(1.0, 0.0);
    const Complex e2 = tri ? Complex(std::cos(kTau / 3.0), std::sin(kTau / 3.0)) : Complex(0.0, 1.0);
    const double cell_area = tri ? std::sqrt(3.0) / 2.0 : 1.0;
    // scale so that the expected in-disc count equals p
    const double s = std::sqrt(kPi * radius * radius / (cell_area * p));

    const double u1 = rng.next_double();
    const double u2 = rng.next_double();
    const double theta = kTau * rng.next_double();
    const Complex rot(std::cos(theta), std::sin(theta));

    // enumerate (i,j) whose image can land in the disc
    const double reach = radius / s + 3.0;
    const long long lim = static_cast<long long>(std::ceil(reach / (tri ? std::sqrt(3.0) / 2.0 : 1.0))) + 2;
    const double r2 = radius * radius;
    for (long long j = -lim; j <= lim; ++j) {
        for (long long i = -lim; i <= lim; ++i) {
            Complex z = rot * (s * ((static_cast<double>(i) + u1) * e1 +
                                    (static_cast<double>(j) + u2) * e2));
            if (z.real() * z.real() + z.imag() * z.imag() < r2) pts.push_back(z);
        }
    }
    return pts;
}

namespace {

AreaEstimate estimate_impl(const LevelSetSpec& spec, const SamplerConfig& cfg,
                           bool restrict_to_unit_disc) {
    if (cfg.trials < 1) throw std::invalid_argument("estimate_area: trials >= 1 required");
    const double radius = cfg.bounding_radius_override ? *cfg.bounding_radius_override
                                                       : bounding_radius(spec);
    const double log_t = std::log(spec.level);

    std::vector<double> areas(cfg.trials, 0.0);
    parallel_for(cfg.trials, [&](long long trial) {
        std::vector<Complex> pts = lattice_points(cfg, radius, static_cast<int>(trial));
        long long hits = 0;
        long long total = 0;
        for (const Complex& z : pts) {
            if (restrict_to_unit_disc && std::abs(z) > 1.0) continue;
            ++total;
            if (log_abs_eval(spec.config, z) < log_t) ++hits;
        }
        // denominator stays the full in-window count so the weight per point
        // is pi r^2 / points in both variants
        long long denom = static_cast<long long>(pts.size());
        areas[trial] = kPi * radius * radius * static_cast<double>(hits) /
                       static_cast<double>(denom == 0 ? 1 : denom);
        (void)total;
    });

    double mean = 0.0;
    for (double a : areas) mean += a;
    mean /= cfg.trials;
    double var = 0.0;
    for (double a : areas) var += (a - mean) * (a - mean);
    var /= cfg.trials;

    AreaEstimate est;
    est.mean = mean;
    est.stddev = std::sqrt(var);
    est.trials = cfg.trials;
    est.points_per_trial = cfg.target_points;
    est.bounding_radius = radius;
    est.seed = cfg.seed;
    return est;
}

}  // namespace

AreaEstimate estimate_area(const LevelSetSpec& spec, const SamplerConfig& cfg) {
    return estimate_impl(spec, cfg, false);
}

AreaEstimate estimate_area_inside_disc(const LevelSetSpec& spec, const SamplerConfig& cfg) {
    return estimate_impl(spec, cfg, true);
}

double erdos_area_closed_form(int n) {
    if (n < 1) throw std::invalid_argument("erdos_area_closed_form: n >= 1 required");
    double inv = 1.0 / n;
    return std::pow(2.0, 2.0 * inv) * std::sqrt(kPi) * std::tgamma(0.5 + inv) /
           (2.0 * std::tgamma(1.0 + inv));
}

}  // namespace lemni
