import random
from fractions import Fraction

import pytest

from juddian.util import AlgebraError
from juddian.algebra import (
    Interval,
    RootInterval,
    UniPoly,
    companion_roots,
    real_root_count,
    refine_root,
    sturm_count,
    sturm_isolate,
)


def poly(*coeffs):
    return UniPoly(coeffs, 'x')


def test_sturm_count():
    assert sturm_count(poly(0, -1, 0, 1), Fraction(-2), Fraction(2)) == 3
    assert sturm_count(poly(0, -1, 0, 1), Fraction(1, 2), Fraction(2)) == 1


def test_isolate_and_refine_sqrt2():
    p = poly(-2, 0, 1)
    intervals = sturm_isolate(p, Interval.half_open(0, 2))
    assert len(intervals) == 1
    root = refine_root(p, intervals[0], Fraction(1, 10**20))
    assert abs(float(root) - 2**0.5) < 1e-15


def test_isolate_whole_line():
    p = poly(6, -5, -2, 1)  # (x-1)(x+2)(x-3)
    intervals = sturm_isolate(p)
    assert len(intervals) == 3
    roots = [refine_root(p, i, Fraction(1, 10**12)) for i in intervals]
    assert [round(float(r), 9) for r in roots] == [-2.0, 1.0, 3.0]


def test_half_open_ends():
    p = poly(-1, 0, 1)
    closed = sturm_isolate(p, Interval.half_open(0, 1))
    assert len(closed) == 1 and closed[0].exact
    assert closed[0].lo == 1
    assert sturm_isolate(p, Interval.half_open(-1, 0)) == []


def test_isolate_needs_squarefree():
    with pytest.raises(AlgebraError):
        sturm_isolate(poly(1, -2, 1))


def test_companion_roots():
    roots = companion_roots(poly(2, -3, 1))
    assert abs(roots[0] - 1) < 1e-12
    assert abs(roots[1] - 2) < 1e-12
    assert real_root_count(poly(1, 0, 1)) == 0
    assert real_root_count(poly(-2, 0, 1)) == 2


def test_empty_interval():
    with pytest.raises(AlgebraError):
        Interval(Fraction(1), Fraction(0))


def test_sturm_count_matches_companion_count():
    rng = random.Random(11)
    for _ in range(100):
        degree = rng.randint(1, 12)
        coeffs = [rng.randint(-9, 9) for _ in range(degree)]
        p = poly(*coeffs, rng.choice([-3, -1, 1, 2])).squarefree()
        # -- Cauchy bound: every root lies strictly inside (-bound, bound)
        bound = 1 + max(abs(c / p.lc) for c in p.coeffs)
        count = sturm_count(p, -bound, bound)
        assert count == real_root_count(p, tol=1e-6)
        assert count == len(sturm_isolate(p))


def test_refine_across_zero():
    # -- x^2 + x - 1 has its roots at (-1 +- sqrt 5)/2
    p = poly(-1, 1, 1)
    root = refine_root(
        p, RootInterval(Fraction(-1), Fraction(1)), Fraction(1, 10**15)
    )
    assert abs(float(root) - (5**0.5 - 1) / 2) < 1e-14


def test_refine_needs_an_isolating_interval():
    with pytest.raises(AlgebraError):
        refine_root(
            poly(-1, 0, 1), RootInterval(Fraction(-2), Fraction(2)),
            Fraction(1, 100),
        )
