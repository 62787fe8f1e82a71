#include <cmath>

#include "doctest.h"
#include "lemni/area.hpp"
#include "lemni/search.hpp"

using namespace lemni;

namespace {

SamplerConfig mk_sampler(long long p, int trials, std::uint64_t seed) {
    SamplerConfig cfg;
    cfg.target_points = p;
    cfg.trials = trials;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST_CASE("exhaustive search over the degree-2 grid finds {1, -1}") {
    // candidates with q + s + 2r = 2 and q >= 1: {1,1} and {1,-1};
    // area of |z^2 - 1| < 1 is 2, area of |(z-1)^2| < 1 is pi
    SearchSpace space;
    space.n = 2;
    space.m = 4;
    SearchReport rep = exhaustive_search(space, 1.0, mk_sampler(20000, 4, 1));
    CHECK(rep.evaluated == 2);
    CHECK(rep.trace.size() == 2);
    std::vector<double> angles = rep.best.sorted_angles();
    REQUIRE(angles.size() == 2);
    CHECK(angles[0] == doctest::Approx(0.0));
    CHECK(angles[1] == doctest::Approx(kPi));
    CHECK(rep.best_area.mean == doctest::Approx(2.0).epsilon(0.02));
    // winner is re-measured at 10x the points
    CHECK(rep.best_area.points_per_trial == 200000);

    SearchReport again = exhaustive_search(space, 1.0, mk_sampler(20000, 4, 1));
    CHECK(rep.best_area.mean == again.best_area.mean);
}

TEST_CASE("trace rows carry the candidate pattern and common-random-number scores") {
    SearchSpace space;
    space.n = 3;
    space.m = 6;
    SearchReport rep = exhaustive_search(space, 1.0, mk_sampler(10000, 3, 5));
    CHECK(rep.evaluated == static_cast<long long>(rep.trace.size()));
    for (const TraceRow& row : rep.trace) {
        CHECK(row.q >= 1);
        CHECK(row.q + row.s + 2 * row.r == 3);
        CHECK(row.angles_over_2pi.size() == 3);
        CHECK(row.area_mean > 0.0);
    }
}

TEST_CASE("budget guard throws before evaluating") {
    SearchSpace space;
    space.n = 6;
    space.m = 24;
    space.budget = 10;
    CHECK_THROWS(exhaustive_search(space, 1.0, mk_sampler(1000, 1, 1)));
}

TEST_CASE("full-grid mode without the symmetry restriction") {
    SearchSpace space;
    space.n = 2;
    space.m = 4;
    space.symmetry = Symmetry::None;
    SearchReport rep = exhaustive_search(space, 1.0, mk_sampler(10000, 3, 2));
    CHECK(rep.best.degree() == 2);
    // antipodal pair is still the winner
    std::vector<double> angles = rep.best.sorted_angles();
    CHECK(angles[1] - angles[0] == doctest::Approx(kPi));
}

TEST_CASE("coordinate descent stays at the double-root local minimum") {
    RootConfiguration init = RootConfiguration::from_angles({0.0, 0.0, 0.5}, {1, 1, 1});
    SearchReport rep = local_search(init, 1.0, mk_sampler(20000, 4, 1), 16);
    std::vector<double> got = rep.best.sorted_angles();
    std::vector<double> want = init.sorted_angles();
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
    CHECK(rep.evaluated > 0);
}

TEST_CASE("coordinate descent improves a lopsided start") {
    // two roots crammed into a quarter circle: any descent step spreads them
    RootConfiguration init = RootConfiguration::from_angles({0.0, 0.05, 0.1}, {1, 1, 1});
    SamplerConfig cfg = mk_sampler(20000, 4, 3);
    SearchReport rep = local_search(init, 1.0, cfg, 16);
    AreaEstimate before = estimate_area(LevelSetSpec(init, 1.0), cfg);
    CHECK(rep.best_area.mean < before.mean);
}

TEST_CASE("merged-roots sweep identifies the unmerged optimum at n = 3") {
    std::vector<CnhRow> rows = cnh_sweep(3, 4, 1.0, mk_sampler(20000, 4, 1));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].n == 3);
    CHECK(rows[0].areas.size() == 3);
    CHECK(rows[0].best_h == 1);
    CHECK(rows[1].n == 4);
    CHECK(rows[1].areas.size() == 4);
    // the fully merged configuration is the unit disc, area pi: never best
    CHECK(rows[0].areas[2] == doctest::Approx(kPi).epsilon(0.02));
}
