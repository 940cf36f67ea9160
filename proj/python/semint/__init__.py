"""Counts, main terms and local factors for semi-integral points on
x^3 = (y_1^2 + ... + y_4k^2) z."""

import json
from fractions import Fraction

from ._core import (
    CapacityError,
    PoleError,
    euler_product,
    f_poly,
    factorize,
    fp_closed,
    fp_series,
    gp,
    gp_special,
    intersection_mults,
    is_prime,
    local_factors,
    m_point_ok,
    mobius,
    n_mobius,
    n_oracle,
    n_star,
    r4_jacobi,
    r4k_bruteforce,
    r4k_star,
    run_suite,
    s_sum,
    semi_integral_ok,
    suite_names,
    t_sum,
    vp,
    zeta,
)
from . import _core

__all__ = [
    "CapacityError",
    "PoleError",
    "bernoulli",
    "count",
    "euler_product",
    "f_poly",
    "factorize",
    "fp_closed",
    "fp_series",
    "gp",
    "gp_special",
    "intersection_mults",
    "is_prime",
    "local_factors",
    "m_point_ok",
    "mobius",
    "n_mobius",
    "n_oracle",
    "n_star",
    "predict",
    "r4_jacobi",
    "r4k_bruteforce",
    "r4k_star",
    "run_suite",
    "s_sum",
    "semi_integral_ok",
    "suite_names",
    "t_sum",
    "vp",
    "zeta",
]


def bernoulli(m):
    return Fraction(_core._bernoulli(m))


def count(bound, k=1, S=(), r_source="", oracle=False, aux=False):
    """Count report as a dict. ``bound`` may be an int or a Fraction."""
    b = Fraction(bound)
    return json.loads(_core._count_json(b.numerator, b.denominator, k, list(S), r_source, oracle, aux))


def predict(k=1, S=(), prime_cutoff=100000, bounds=()):
    """Leading constant, Euler product and main terms as a dict."""
    return json.loads(_core._predict_json(k, list(S), prime_cutoff, [float(b) for b in bounds]))
