from fractions import Fraction

import pytest

from juddian.util import AlgebraError
from juddian.algebra import Approx, QuadScalar, UniPoly, poly_arith
from juddian.algebra.poly import substitute


def poly(*coeffs, var='x'):
    return UniPoly(coeffs, var)


def test_canonical_form():
    assert poly(1, 2, 0, 0).degree == 1
    assert poly().degree == -1
    assert poly(0, 0).is_zero()
    assert poly(3) == 3


def test_arith():
    a, b = poly(-1, 0, 1), poly(-1, 1)
    assert poly_arith(a, b, 'add') == poly(-2, 1, 1)
    assert poly_arith(a, b, 'sub') == poly(0, -1, 1)
    assert poly_arith(a, b, 'mul') == poly(1, -1, -1, 1)
    assert poly_arith(a, b, 'divrem') == (poly(1, 1), poly())


def test_arith_variable_mismatch():
    with pytest.raises(ValueError):
        poly_arith(poly(1, 1), poly(1, 1, var='g'), 'add')


def test_exquo():
    assert poly(-1, 0, 1).exquo(poly(1, 1)) == poly(-1, 1)
    with pytest.raises(AlgebraError):
        poly(-2, 0, 1).exquo(poly(1, 1))


def test_division_by_zero():
    with pytest.raises(AlgebraError):
        poly(1, 1).divrem(poly())


def test_gcd_and_squarefree():
    assert poly(-1, 0, 1).gcd(poly(1, -2, 1)) == poly(-1, 1)
    assert poly(1, 2, 1).squarefree() == poly(1, 1)
    cube = poly(-1, 1) ** 3 * poly(2, 1)
    assert cube.squarefree() == poly(-2, 1, 1)


def test_primitive():
    assert poly(Fraction(1, 2), Fraction(1, 3)).primitive() == poly(3, 2)
    assert poly(4, 6).primitive() == poly(2, 3)


def test_evaluate_rescale_shift():
    p = poly(1, 2, 1)
    assert p.evaluate(2) == 9
    assert p.rescale(2) == poly(1, 4, 4)
    assert p.shift(-1) == poly(0, 0, 1)
    assert p.derivative() == poly(2, 2)


def test_to_str():
    assert poly(-1, 0, 1, var='g').to_str() == 'g^2 - 1'
    assert poly(0, Fraction(1, 2), var='g').to_str() == '1/2*g'


def test_nested_substitute():
    g = UniPoly.variable('g')
    p = UniPoly((g * g, 1), 'z')
    fixed = substitute(p, 'g', Fraction(3))
    assert fixed == UniPoly((9, 1), 'z')


def test_quadratic_field_gcd():
    root = QuadScalar.sqrt(2)
    factor = poly(-root, 1)
    p = factor * poly(-1, 1)
    q = factor * poly(3, 1)
    assert p.gcd(q) == factor
    assert (p * factor).squarefree() == p


def test_nested_exact_division():
    # -- (z^2 - g^2) / (z - g) = z + g
    g = UniPoly.variable('g')
    p = UniPoly((-(g * g), 0, 1), 'z')
    assert p.exquo(UniPoly((-g, 1), 'z')) == UniPoly((g, 1), 'z')
    assert p / UniPoly((g, 1), 'z') == UniPoly((-g, 1), 'z')


def test_inexact_coefficients_rejected():
    with pytest.raises(AlgebraError):
        poly(Approx(1.0), 1).gcd(poly(1, 1))
    with pytest.raises(AlgebraError):
        poly(Fraction(1, 2), QuadScalar.sqrt(2)).primitive()
