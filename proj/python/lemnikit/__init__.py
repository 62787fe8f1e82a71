"""Numerical laboratory for polynomial lemniscates.

Thin Python wrapper over the C++ core: Monte Carlo area estimation of the
sublevel sets {z : |p(z)| < t}, geometric metrics (inradius, perimeter,
components, unit-circle arcs, discrepancy), constructive procedures
(zero pushing, entire-function truncations), and extremal configuration
search over roots on the unit circle.
"""

try:
    from . import _lemnikit  # installed layout: extension lives inside the package
except ImportError:
    import _lemnikit  # dev layout: extension on PYTHONPATH from the build tree

    import sys as _sys

    _sys.modules[__name__ + "._lemnikit"] = _lemnikit

from ._lemnikit import (
    AreaEstimate,
    PushResult,
    Root,
    RootConfiguration,
    SearchReport,
    WagnerResult,
    c_nh,
    circle_arcs,
    component_count,
    contour_svg,
    discrepancy,
    doubling_exponent,
    erdos_area_closed_form,
    estimate_area,
    exhaustive_search,
    inradius,
    local_search,
    log_abs_eval,
    membership,
    named_family,
    parse_config,
    perimeter,
    push_zeros_deterministic,
    push_zeros_probabilistic,
    sign_changes,
    wagner_polynomial,
)

__all__ = [
    "AreaEstimate",
    "PushResult",
    "Root",
    "RootConfiguration",
    "SearchReport",
    "WagnerResult",
    "c_nh",
    "circle_arcs",
    "component_count",
    "contour_svg",
    "discrepancy",
    "doubling_exponent",
    "erdos_area_closed_form",
    "estimate_area",
    "exhaustive_search",
    "inradius",
    "local_search",
    "log_abs_eval",
    "membership",
    "named_family",
    "parse_config",
    "perimeter",
    "push_zeros_deterministic",
    "push_zeros_probabilistic",
    "sign_changes",
    "wagner_polynomial",
]

__version__ = "0.1.0"
