#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "lemni/poly.hpp"
#include "lemni/rng.hpp"

using namespace lemni;

namespace {

// direct complex-product evaluation, the oracle for log_abs_eval
Complex eval_direct(const RootConfiguration& c, Complex z) {
    Complex v = 1.0;
    for (const Root& r : c.roots())
        for (long long k = 0; k < r.multiplicity; ++k) v *= z - r.location;
    return v;
}

}  // namespace

TEST_CASE("log_abs_eval matches direct product evaluation") {
    RootConfiguration c({{Complex(0.3, 0.4), 2}, {Complex(-0.5, 0.0), 1}, {Complex(0.0, -0.9), 3}},
                        ConstraintTag::UnitDisc);
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        Complex z(4.0 * rng.next_double() - 2.0, 4.0 * rng.next_double() - 2.0);
        double direct = std::log(std::abs(eval_direct(c, z)));
        if (!std::isfinite(direct)) continue;
        CHECK(log_abs_eval(c, z) == doctest::Approx(direct).epsilon(1e-10));
    }
    CHECK(log_abs_eval(c, Complex(0.3, 0.4)) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("membership is the strict sublevel set") {
    LevelSetSpec spec(RootConfiguration::roots_of_unity(2), 1.0);  // |z^2 - 1| < 1
    CHECK(membership(spec, Complex(1.0, 0.0)));                    // p = 0 there
    CHECK(membership(spec, Complex(1.2, 0.0)));                    // |1.44 - 1| = 0.44
    CHECK(!membership(spec, Complex(0.0, 0.0)));                   // |0 - 1| = 1, strict
    CHECK(!membership(spec, Complex(0.0, 1.0)));                   // |-2| = 2
}

TEST_CASE("factory constructors and tags") {
    RootConfiguration u = RootConfiguration::roots_of_unity(5);
    CHECK(u.degree() == 5);
    CHECK(u.tag() == ConstraintTag::UnitCircle);

    RootConfiguration m = RootConfiguration::monomial(4);
    CHECK(m.degree() == 4);
    CHECK(m.tag() == ConstraintTag::UnitDisc);
    CHECK(m.roots().size() == 1);
    CHECK(m.roots()[0].multiplicity == 4);

    RootConfiguration a = RootConfiguration::from_angles({0.0, 0.25, 0.75}, {1, 2, 1});
    CHECK(a.degree() == 4);
    CHECK(a.tag() == ConstraintTag::UnitCircle);
    std::vector<double> angles = a.sorted_angles();
    REQUIRE(angles.size() == 4);
    CHECK(angles[0] == doctest::Approx(0.0));
    CHECK(angles[1] == doctest::Approx(kPi / 2));
    CHECK(angles[2] == doctest::Approx(kPi / 2));
    CHECK(angles[3] == doctest::Approx(3 * kPi / 2));
}

TEST_CASE("constructor validation") {
    CHECK_THROWS(RootConfiguration({{Complex(0.5, 0.0), 0}}));
    CHECK_THROWS(RootConfiguration({{Complex(0.5, 0.0), -2}}));
    CHECK_THROWS(RootConfiguration({{Complex(1.5, 0.0), 1}}, ConstraintTag::UnitDisc));
    CHECK_THROWS(RootConfiguration({{Complex(0.5, 0.0), 1}}, ConstraintTag::UnitCircle));
    CHECK_THROWS(RootConfiguration({}));
}

TEST_CASE("blaschke_map basics") {
    Complex a(0.3, -0.2);
    CHECK(std::abs(blaschke_map(a, a)) == doctest::Approx(0.0));
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        Complex z = std::polar(1.0, kTau * rng.next_double());
        CHECK(std::abs(blaschke_map(a, z)) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("compose_with_generator gives the roots of p(q(z))") {
    RootConfiguration p = RootConfiguration::roots_of_unity(2);  // z^2 - 1
    RootConfiguration q = RootConfiguration::monomial(2);        // z^2
    RootConfiguration composed = compose_with_generator(q, p);   // z^4 - 1
    CHECK(composed.degree() == 4);
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        Complex z(3.0 * rng.next_double() - 1.5, 3.0 * rng.next_double() - 1.5);
        double lhs = log_abs_eval(composed, z);
        double rhs = log_abs_eval(p, z * z);
        if (!std::isfinite(rhs)) continue;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("coefficients_from_roots reproduces z^n - 1") {
    for (int n : {2, 3, 5, 8}) {
        std::vector<Complex> coeffs = coefficients_from_roots(RootConfiguration::roots_of_unity(n));
        REQUIRE(static_cast<int>(coeffs.size()) == n + 1);
        CHECK(std::abs(coeffs[0] - Complex(-1.0, 0.0)) < 1e-12);
        CHECK(std::abs(coeffs[n] - Complex(1.0, 0.0)) < 1e-12);
        for (int k = 1; k < n; ++k) CHECK(std::abs(coeffs[k]) < 1e-12);
    }
}

TEST_CASE("polynomial_roots inverts coefficients_from_roots") {
    RootConfiguration c({{Complex(0.2, 0.5), 1}, {Complex(-0.6, -0.1), 1}, {Complex(0.9, 0.0), 1},
                         {Complex(0.0, -0.4), 1}});
    std::vector<Complex> found = polynomial_roots(coefficients_from_roots(c));
    REQUIRE(found.size() == 4);
    for (const Root& r : c.roots()) {
        double best = 1e30;
        for (Complex f : found) best = std::min(best, std::abs(f - r.location));
        CHECK(best < 1e-8);
    }
}

TEST_CASE("power, rotated, conjugated") {
    RootConfiguration c = RootConfiguration::from_angles({0.1, 0.3}, {1, 1});

    RootConfiguration p2 = c.power(3);
    CHECK(p2.degree() == 6);
    for (size_t i = 0; i < c.roots().size(); ++i)
        CHECK(p2.roots()[i].multiplicity == 3 * c.roots()[i].multiplicity);

    Complex omega = std::polar(1.0, 0.7);
    RootConfiguration rot = c.rotated(omega);
    for (size_t i = 0; i < c.roots().size(); ++i)
        CHECK(std::abs(rot.roots()[i].location - omega * c.roots()[i].location) < 1e-14);

    RootConfiguration conj = c.conjugated();
    for (size_t i = 0; i < c.roots().size(); ++i)
        CHECK(std::abs(conj.roots()[i].location - std::conj(c.roots()[i].location)) < 1e-14);
}
