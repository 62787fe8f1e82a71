"""Smoke test for the python bindings: exercises one call from each area of
the API and checks a few values with known closed forms."""

import math
import sys

import lemnikit as lk


def approx(a, b, tol):
    assert abs(a - b) <= tol, f"{a} != {b} (tol {tol})"


def main():
    # closed form for degree 2 is exactly 2
    approx(lk.erdos_area_closed_form(2), 2.0, 1e-12)

    cube = lk.RootConfiguration.roots_of_unity(3)
    assert cube.degree == 3
    assert cube.tag == "UNIT_CIRCLE"

    est = lk.estimate_area(cube, p=30000, trials=4, seed=1)
    approx(est.mean, lk.erdos_area_closed_form(3), 0.02)
    rerun = lk.estimate_area(cube, p=30000, trials=4, seed=1)
    assert est.mean == rerun.mean, "same seed must reproduce bitwise"

    # json round trip through the parser
    back = lk.parse_config(cube.to_json())
    assert back.degree == 3

    # membership is the strict sublevel set
    assert lk.membership(cube, 1.0, 1.0 + 0j)
    assert not lk.membership(cube, 1.0, 1.5 + 0j)

    # metrics on the disc {|z| < 0.8}
    disc = lk.RootConfiguration.monomial(1)
    approx(lk.inradius(disc, t=0.8, resolution=512), 0.8, 0.02)
    approx(lk.perimeter(disc, t=0.8, resolution=512), 2 * math.pi * 0.8, 0.05)
    assert lk.component_count(cube, t=0.5, resolution=512) == 3

    arcs = lk.circle_arcs(cube, t=1.0)
    assert len(arcs) == 3
    for lo, hi in arcs:
        approx(hi - lo, 2 * math.pi / 9, 1e-6)

    approx(lk.discrepancy(cube), 1.0 / 3.0, 1e-12)

    # constructions
    pr = lk.push_zeros_deterministic(cube, 0.5)
    assert pr.L == 24
    assert pr.pushed.degree == 72
    assert pr.comparison_margin >= -1e-9

    w = lk.wagner_polynomial(1.1)
    assert w.M == w.config.degree
    approx(w.level, math.log(w.M), 1e-12)

    c42 = lk.c_nh(4, 2)
    assert c42.degree == 4
    assert lk.named_family("erdos-deflated", 5).degree == 4

    # search
    rep = lk.exhaustive_search(n=2, m=4, p=10000, trials=3, seed=1)
    angles = rep.best.sorted_angles()
    approx(angles[1] - angles[0], math.pi, 1e-12)
    approx(rep.best_area.mean, 2.0, 0.05)

    print("python smoke: ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
