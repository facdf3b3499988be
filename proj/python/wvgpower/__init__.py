"""Exact voting-power computations for weighted games.

All values are exact: fractions.Fraction in, fractions.Fraction out.
"""

from ._core import (
    CapError,
    Game,
    analytic_curves,
    argmax_summand,
    banzhaf,
    brute_force_banzhaf,
    brute_force_shapley_shubik,
    bzi_scan,
    check_lt_bounds,
    decimal_str,
    eta_one_big,
    f_curve,
    l1_distance,
    linf_distance,
    normalize,
    nucleolus,
    parse_game,
    prop1,
    prop2,
    random_game,
    shapley_shubik,
    ssi_scan,
    swing_counts,
    vnq,
    vnq_eta_printed,
    weight_stats,
)
from ._core import __version__

__all__ = [
    "CapError",
    "Game",
    "analytic_curves",
    "argmax_summand",
    "banzhaf",
    "brute_force_banzhaf",
    "brute_force_shapley_shubik",
    "bzi_scan",
    "check_lt_bounds",
    "decimal_str",
    "eta_one_big",
    "f_curve",
    "l1_distance",
    "linf_distance",
    "normalize",
    "nucleolus",
    "parse_game",
    "prop1",
    "prop2",
    "random_game",
    "shapley_shubik",
    "ssi_scan",
    "swing_counts",
    "vnq",
    "vnq_eta_printed",
    "weight_stats",
    "__version__",
]
