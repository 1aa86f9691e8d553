from fractions import Fraction

import pytest

from juddian.algebra import (
    Approx,
    Interval,
    UniPoly,
    companion_roots,
    refine_root,
    sturm_isolate,
)
from juddian.gradation import slice_operator
from juddian.models import (
    ModelSpec,
    build_ode,
    find_points,
    kus_polynomial,
    root_count_expectation,
)
from juddian.models.points import pointwise
from juddian.recurrence import constraint_polynomials, solve_baseline
from juddian.verification import (
    bethe_residuals,
    point_spec,
    residual_certificate,
    sl2_decompose,
    sum_rule_certificate,
)

OMEGA = Fraction(2, 5)


def rabi(**fields):
    config = {
        'model': 'rabi', 'omega': '2/5', 'delta': '1/10',
        'sweep': {'param': 'g', 'min': '0', 'max': '2'},
    }
    config.update(fields)
    return ModelSpec.from_config(config)


def driven(drive, **fields):
    return rabi(model='driven-rabi', delta_drive=drive, **fields)


def generalized(**fields):
    config = {
        'model': 'generalized-rabi', 'omega': '1', 'n': 2,
        'sweep': {'param': 'kappa', 'min': '0', 'max': '2'},
    }
    config.update(fields)
    return ModelSpec.from_config(config)


def positive_zeros(poly, hi=2):
    """Exact zeros in (0, hi] as floats"""

    square_free = poly.squarefree()
    domain = Interval.half_open(0, hi)
    return [
        float(refine_root(square_free, interval, Fraction(1, 10**20)))
        for interval in sturm_isolate(square_free, domain)
    ]


def values_of(spec, n):
    return [float(p.value) for p in find_points(spec, n).points]


# ----------------------------------------
# -- Kus polynomials
# ----------------------------------------


@pytest.mark.parametrize('mu', [Fraction(1, 4), Fraction(1, 2),
                                Fraction(3, 4)])
@pytest.mark.parametrize('n', range(2, 9))
def test_juddian_points_are_kus_zeros(n, mu):
    spec = rabi(
        delta=str(mu * OMEGA),
        sweep={'param': 'g', 'min': '0', 'max': '10'},
    )
    kus = kus_polynomial(n, UniPoly.variable('g') / OMEGA, mu)

    points = values_of(spec, n)
    expected = positive_zeros(kus, hi=10)
    assert len(points) == len(expected) == n
    for value, target in zip(points, expected):
        assert abs(value - target) <= 1e-9 * target


@pytest.mark.parametrize('mu, count', [
    ('1/4', 5), ('3/2', 4), ('5/2', 3), ('7/2', 2), ('9/2', 1),
])
def test_real_zero_count_law(mu, count):
    mu = Fraction(mu)
    kus = kus_polynomial(5, UniPoly.variable('k'), mu)
    assert len(positive_zeros(kus, hi=50)) == count
    assert root_count_expectation(5, mu) == count


# ----------------------------------------
# -- Residuals, sum rules and Bethe equations at the points
# ----------------------------------------


@pytest.mark.parametrize('config', [
    {'model': 'two-photon', 'omega': '1', 'delta': '1/2', 'q': '1/4',
     'n': 2, 'sweep': {'param': 'Omega', 'min': '0', 'max': '1'}},
    {'model': 'two-mode', 'omega': '1', 'delta': '1/2', 'q': '1/2',
     'n': 2, 'sweep': {'param': 'Lambda', 'min': '0', 'max': '1'}},
])
def test_squeezed_models_vanishing_residual(config):
    spec = ModelSpec.from_config(config)
    found = find_points(spec)
    assert found.points
    for point in found.points:
        assert point.certified
        op = build_ode(point_spec(spec, point.param, point.value), 2)
        assert residual_certificate(op, point.solution, 1e-10).passed


@pytest.mark.parametrize('fields', [
    {'g1': '1', 'g2': '1/2', 'delta': '1/3'},
    {'g1': '1', 'g2': '1/3', 'delta': '1/4'},
    {'g1': '1', 'g2': '1/4', 'delta': '1/2'},
])
def test_generalized_vanishing_residual(fields):
    spec = generalized(**fields)
    for point in find_points(spec).points:
        fixed = point_spec(spec, point.param, point.value, point.extra)
        op = build_ode(fixed, 2)
        assert residual_certificate(op, point.solution, 1e-10).passed


@pytest.mark.parametrize('model', ['rabi', 'schweber', 'koc'])
@pytest.mark.parametrize('n', [1, 2, 3])
def test_sum_rule_and_bethe_at_points(model, n):
    spec = rabi(model=model)
    found = find_points(spec, n)
    assert len(found.points) == n
    for point in found.points:
        fixed = point_spec(spec, 'g', point.value)
        roots = companion_roots(point.solution.polynomial())
        assert sum_rule_certificate(fixed, n, roots).passed
        assert bethe_residuals(fixed, roots).passed


@pytest.mark.parametrize('model', ['schweber', 'koc'])
@pytest.mark.parametrize('n', [1, 2, 3])
def test_alternative_forms_share_points(model, n):
    reference = values_of(rabi(), n)
    assert values_of(rabi(model=model), n) == pytest.approx(
        reference, abs=1e-9
    )


# ----------------------------------------
# -- Driven model
# ----------------------------------------


@pytest.mark.parametrize('n', [1, 2, 3])
def test_small_drive_is_continuous(n):
    reference = values_of(rabi(), n)
    values = values_of(driven('1/100000000'), n)
    assert len(values) == len(reference) == n
    assert values == pytest.approx(reference, abs=1e-6)


def _bisect(poly, lo, hi):
    f_lo = poly.evaluate(lo)
    while hi - lo > Fraction(1, 10**14):
        mid = (lo + hi) / 2
        f_mid = poly.evaluate(mid)
        if f_mid == 0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return (lo + hi) / 2


def test_driven_points_match_dense_grid():
    # -- Exact sign changes of the cleared constraint on a dense grid
    spec = driven('1/50', n=9)
    found = find_points(spec)

    baseline = solve_baseline(build_ode(spec), 9)
    (constraint,) = constraint_polynomials(baseline)
    poly = constraint.polynomial

    grid = [Fraction(i, 5000) for i in range(1, 10001)]
    samples = [poly.evaluate(v) for v in grid]
    oracle = []
    for lo, hi, f_lo, f_hi in zip(grid, grid[1:], samples, samples[1:]):
        if f_lo == 0:
            oracle.append(float(lo))
        elif (f_lo > 0) != (f_hi > 0) and f_hi != 0:
            oracle.append(float(_bisect(poly, lo, hi)))
    if samples[-1] == 0:
        oracle.append(float(grid[-1]))

    values = [float(p.value) for p in found.points]
    assert values
    assert len(values) == len(oracle)
    for value, target in zip(values, oracle):
        assert abs(value - target) < 1e-8


# ----------------------------------------
# -- Generalized model
# ----------------------------------------


def _constraint_values(spec, kappa, mu):
    _, _, constraints = pointwise(spec, kappa, 2, ('mu',))
    return [
        float(c.evaluate(Approx(mu))) if isinstance(c, UniPoly) else float(c)
        for c in constraints
    ]


@pytest.mark.parametrize('fields', [
    {'g1': '1', 'g2': '1/2', 'delta': '1/3'},
    {'g1': '1', 'g2': '1/3', 'delta': '1/4'},
    {'g1': '1', 'g2': '1/4', 'delta': '1/2'},
])
def test_generalized_points_are_common_zeros(fields):
    spec = generalized(**fields)
    exact = find_points(spec).points
    if fields['g2'] == '1/2':
        assert exact

    # -- Both constraints change sign around every point
    step = 1e-8
    for point in exact:
        kappa, mu = float(point.value), float(point.extra['mu'])
        corners = [
            _constraint_values(spec, kappa + a * step, mu + b * step)
            for a in (-1, 1)
            for b in (-1, 1)
        ]
        for index in range(2):
            signs = {value[index] > 0 for value in corners}
            assert signs == {True, False}

    numeric = find_points(spec, mode='numeric').points
    for point in numeric:
        assert exact
        assert min(abs(point.value - float(p.value)) for p in exact) < 1e-6


def test_generic_generalized_operator_has_no_sl2_form():
    spec = generalized(g1='1', g2='1/2', delta='1/3')
    op = build_ode(spec.with_value('kappa', Fraction(1, 2)), 2)
    assert slice_operator(op)[0].gamma == 2
    assert sl2_decompose(op, 2) is None
