#include <cmath>

#include "doctest.h"
#include "lemni/area.hpp"

using namespace lemni;

namespace {

SamplerConfig sampler(SamplerKind kind, long long p, int trials, std::uint64_t seed) {
    SamplerConfig cfg;
    cfg.kind = kind;
    cfg.target_points = p;
    cfg.trials = trials;
    cfg.seed = seed;
    return cfg;
}

// Independent oracle for the area of {|z^n - 1| < 1}: the boundary in polar
// coordinates is r^n = 2 cos(n theta), one petal per n-th root of unity, so
// area = n * (1/2) * int_{-pi/2n}^{pi/2n} (2 cos n theta)^{2/n} d theta,
// evaluated here by composite Simpson.
// The integrand has an endpoint singularity in its derivative, so we
// substitute theta = (pi/2n) sin(phi), which flattens it enough for Simpson
// to reach ~1e-10.
double petal_area_quadrature(int n) {
    const int panels = 20000;  // even
    double a = -kPi / 2.0, b = kPi / 2.0;
    double h = (b - a) / panels;
    auto f = [&](double phi) {
        double theta = kPi / (2.0 * n) * std::sin(phi);
        return std::pow(2.0 * std::cos(n * theta), 2.0 / n) * kPi / (2.0 * n) * std::cos(phi);
    };
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    double integral = s * h / 3.0;
    return n * 0.5 * integral;
}

}  // namespace

TEST_CASE("closed form area of the unit-level family agrees with petal quadrature") {
    for (int n = 2; n <= 10; ++n)
        CHECK(erdos_area_closed_form(n) == doctest::Approx(petal_area_quadrature(n)).epsilon(1e-7));
    CHECK(erdos_area_closed_form(2) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("all three samplers agree with the closed form") {
    for (int n : {2, 3}) {
        LevelSetSpec spec(RootConfiguration::roots_of_unity(n), 1.0);
        double exact = erdos_area_closed_form(n);
        for (SamplerKind k :
             {SamplerKind::SquareLattice, SamplerKind::TriangularLattice, SamplerKind::UniformRandom}) {
            AreaEstimate est = estimate_area(spec, sampler(k, 30000, 4, 17));
            CHECK(std::abs(est.mean - exact) < 0.03);
            CHECK(est.stddev >= 0.0);
            CHECK(est.trials == 4);
        }
    }
}

TEST_CASE("monomial sublevel set is a disc of radius t^(1/n)") {
    for (int n : {1, 3, 6}) {
        for (double t : {0.5, 1.0, 2.0}) {
            LevelSetSpec spec(RootConfiguration::monomial(n), t);
            double exact = kPi * std::pow(t, 2.0 / n);
            AreaEstimate est =
                estimate_area(spec, sampler(SamplerKind::TriangularLattice, 40000, 4, 3));
            CHECK(std::abs(est.mean - exact) < 0.02 * exact + 0.005);
        }
    }
}

TEST_CASE("same seed reruns are bit-identical, different seeds differ") {
    LevelSetSpec spec(RootConfiguration::roots_of_unity(4), 1.0);
    SamplerConfig cfg = sampler(SamplerKind::TriangularLattice, 20000, 3, 99);
    AreaEstimate a = estimate_area(spec, cfg);
    AreaEstimate b = estimate_area(spec, cfg);
    CHECK(a.mean == b.mean);
    CHECK(a.stddev == b.stddev);
    cfg.seed = 100;
    AreaEstimate c = estimate_area(spec, cfg);
    CHECK(a.mean != c.mean);
}

TEST_CASE("lattice points are deterministic per (seed, trial) and inside the disc") {
    SamplerConfig cfg = sampler(SamplerKind::TriangularLattice, 5000, 1, 5);
    std::vector<Complex> pts1 = lattice_points(cfg, 2.0, 0);
    std::vector<Complex> pts2 = lattice_points(cfg, 2.0, 0);
    REQUIRE(pts1.size() == pts2.size());
    for (size_t i = 0; i < pts1.size(); ++i) CHECK(pts1[i] == pts2[i]);
    for (Complex z : pts1) CHECK(std::abs(z) <= 2.0 + 1e-12);
    // target density: count within ~O(sqrt p) of p
    CHECK(std::abs(static_cast<double>(pts1.size()) - 5000.0) < 500.0);
    std::vector<Complex> pts3 = lattice_points(cfg, 2.0, 1);
    CHECK(pts1[0] != pts3[0]);
}

TEST_CASE("bounding radius certification") {
    CHECK(bounding_radius(LevelSetSpec(RootConfiguration::roots_of_unity(3), 1.0)) ==
          doctest::Approx(2.0));
    CHECK(bounding_radius(LevelSetSpec(RootConfiguration::monomial(2), 0.0001)) ==
          doctest::Approx(1.05));
    // untagged configurations need an explicit override
    RootConfiguration untagged({{Complex(2.0, 0.0), 1}});
    CHECK_THROWS(estimate_area(LevelSetSpec(untagged, 1.0),
                               sampler(SamplerKind::TriangularLattice, 1000, 1, 1)));
    SamplerConfig cfg = sampler(SamplerKind::TriangularLattice, 40000, 4, 1);
    cfg.bounding_radius_override = 4.0;
    // {|z - 2| < 1} is the unit disc centered at 2
    AreaEstimate est = estimate_area(LevelSetSpec(untagged, 1.0), cfg);
    CHECK(std::abs(est.mean - kPi) < 0.05);
}

TEST_CASE("estimate_area_inside_disc restricts to the closed unit disc") {
    // {|z^2| < 1} is exactly the open unit disc
    LevelSetSpec spec(RootConfiguration::monomial(2), 1.0);
    SamplerConfig cfg = sampler(SamplerKind::TriangularLattice, 40000, 4, 7);
    AreaEstimate inside = estimate_area_inside_disc(spec, cfg);
    AreaEstimate whole = estimate_area(spec, cfg);
    CHECK(std::abs(inside.mean - kPi) < 0.03);
    CHECK(inside.mean <= whole.mean + 0.03);

    // at t = 4 the sublevel set is the disc of radius 2; inside-disc trim
    // keeps only area pi of it
    LevelSetSpec big(RootConfiguration::monomial(2), 4.0);
    AreaEstimate trimmed = estimate_area_inside_disc(big, cfg);
    CHECK(std::abs(trimmed.mean - kPi) < 0.05);
}
