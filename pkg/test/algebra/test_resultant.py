import random
from fractions import Fraction

import pytest

from juddian.util import AlgebraError
from juddian.algebra import Approx, QuadScalar, UniPoly, resultant
from juddian.algebra.linalg import nullspace, solve
from juddian.algebra.resultant import numeric_resultant, numeric_sylvester


def test_linear_resultant():
    assert resultant(UniPoly((-1, 1)), UniPoly((-3, 1))) == -2


def test_common_root():
    p = UniPoly((-1, 0, 1))
    q = UniPoly((-1, 1)) * UniPoly((5, 1))
    assert resultant(p, q) == 0


def test_parametric_resultant():
    # -- res_z(z - g, z^2 - 2) = g^2 - 2
    g = UniPoly.variable('g')
    res = resultant(UniPoly((-g, 1), 'z'), UniPoly((-2, 0, 1), 'z'))
    assert res == UniPoly((-2, 0, 1), 'g')


def test_resultant_of_constants():
    with pytest.raises(AlgebraError):
        resultant(UniPoly((2,)), UniPoly((3,)))


def test_numeric_sylvester():
    # -- rows of p first: z - 1 and z^2 - 2
    matrix = numeric_sylvester(UniPoly((-1, 1)), UniPoly((-2, 0, 1)))
    assert matrix.tolist() == [
        [1.0, -1.0, 0.0], [0.0, 1.0, -1.0], [1.0, 0.0, -2.0]
    ]
    value = numeric_resultant(UniPoly((-1, 1)), UniPoly((-2, 0, 1)))
    assert abs(value + 1) < 1e-12


def _random_poly(rng, degree):
    coeffs = [rng.randint(-4, 4) for _ in range(degree)]
    return UniPoly(coeffs + [rng.choice([-2, -1, 1, 2])])


def test_vanishing_resultant_iff_common_factor():
    rng = random.Random(7)
    for trial in range(200):
        p = _random_poly(rng, rng.randint(1, 4))
        q = _random_poly(rng, rng.randint(1, 4))
        if trial % 2:
            shared = _random_poly(rng, 1)
            p, q = p * shared, q * shared
        assert (resultant(p, q) == 0) == (p.gcd(q).degree > 0)


def test_solve_and_nullspace():
    half = Fraction(1, 2)
    assert solve([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]
    assert solve([[1, 1], [1, 1]], [1, 2]) is None
    basis = nullspace([[Fraction(1), Fraction(2)], [half, Fraction(1)]])
    assert basis == [[Fraction(-2), Fraction(1)]]


def test_solve_over_quadratic_field():
    root = QuadScalar.sqrt(2)
    assert solve([[1, root], [0, 1]], [1, root]) == [Fraction(-1), root]


def test_numeric_solve():
    values = solve([[Approx(2.0), 1], [1, 3]], [3, 5])
    assert abs(float(values[0]) - 0.8) < 1e-12
    assert abs(float(values[1]) - 1.4) < 1e-12
    assert solve([[Approx(1.0), 1], [1, 1]], [1, 2]) is None
