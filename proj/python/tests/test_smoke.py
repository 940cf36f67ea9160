import itertools
import math
from fractions import Fraction

import pytest

import semint


def reps4(d):
    r = math.isqrt(d)
    return sum(
        1
        for y in itertools.product(range(-r, r + 1), repeat=4)
        if sum(v * v for v in y) == d
    )


def test_jacobi_matches_enumeration():
    for d in range(1, 40):
        assert semint.r4_jacobi(d) == reps4(d)
        assert 8 * semint.r4k_star(d, 1) == reps4(d)


def test_arith():
    assert semint.factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert semint.mobius(30) == -1
    assert semint.vp(2, 48) == 4
    assert semint.bernoulli(12) == Fraction(-691, 2730)
    assert semint.zeta(3.0) == pytest.approx(1.2020569031595942, rel=1e-14)


def test_points():
    assert not semint.semi_integral_ok(1, 2, [1, 1, 0, 0], 4)
    assert semint.semi_integral_ok(1, 2, [1, 1, 0, 0], 4, S=[2])
    assert semint.intersection_mults(1, 2, [1, 1, 0, 0], 4, 2) == (0, 1)
    assert semint.m_point_ok(1, 2, [1, 0, 0, 0], 8)
    with pytest.raises(Exception):
        semint.semi_integral_ok(1, 2, [1, 0, 0, 0], 1)


def test_counts():
    assert semint.n_star(2) == 16
    assert semint.n_star(1) == 0
    assert semint.s_sum(2, 8) == 8
    assert semint.t_sum(2) == 4
    for B in (5, 10, 20):
        assert semint.n_mobius(B) == semint.n_oracle(B)
    report = semint.count(30, oracle=True, aux=True)
    assert report["schema"] == "v1"
    assert report["n_oracle"] == report["n_mobius"] == 220784
    assert report["points"] == 110392
    assert 16 * (report["s_value"] - report["t_value"]) == next(
        e["n_star"] for e in report["n_star_values"] if e["d"] == 1
    )
    assert semint.count(Fraction(21, 2))["request"]["bound"] == {"num": 21, "den": 2}


def test_capacity_error():
    with pytest.raises(semint.CapacityError):
        semint.n_oracle(1000)


def test_local_factors_and_constants():
    assert semint.gp(2, 1, False, 1.0, 1.0) == pytest.approx(69 / 140, rel=1e-13)
    assert semint.gp(2, 1, True, 1.0, 1.0) == pytest.approx(0.6, rel=1e-13)
    assert semint.f_poly(1.0, 1.0, 1.0) == -1.0
    assert semint.fp_series(3, 1, False, 2.0, 2.0) == pytest.approx(
        semint.fp_closed(3, 1, False, 2.0, 2.0), rel=1e-12
    )
    rows = semint.local_factors(1, [], 13)
    assert [r[0] for r in rows] == [2, 3, 5, 7, 11, 13]
    pred = semint.predict(1, [], 10000, [math.e])
    assert pred["prefactor"] == pytest.approx(4 / semint.zeta(3.0), rel=1e-13)
    row = pred["main_terms"][0]
    assert row["n_main"] == pytest.approx(pred["leading_constant"] * math.e**3, rel=1e-13)
    assert row["s_main"] / row["t_main"] == pytest.approx(4.0, rel=1e-13)
    prod = semint.euler_product(1, [], 10000)
    assert prod["value"] == pytest.approx(pred["euler_product"], rel=1e-14)


def test_suite():
    assert "mpoints" in semint.suite_names
    [result] = semint.run_suite("mpoints")
    assert result["passed"]
    with pytest.raises(ValueError):
        semint.run_suite("nope")
