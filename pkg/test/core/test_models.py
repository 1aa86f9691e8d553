from fractions import Fraction

import pytest

from juddian.util import ConfigError, NotApplicable
from juddian.algebra import UniPoly
from juddian.gradation import slice_operator
from juddian.recurrence import (
    cleared_recurrence,
    constraint_polynomials,
    solve_baseline,
)
from juddian.models import (
    ModelSpec,
    baseline_energy,
    build_ode,
    coefficient_table,
    find_points,
    kus_polynomial,
    kus_value,
    root_count_expectation,
)

G_SWEEP = {'param': 'g', 'min': '0', 'max': '2'}

# -- One config per model, the sweep parameter left free
CONFIGS = {
    'rabi': {
        'model': 'rabi', 'omega': '1', 'delta': '1/2', 'sweep': G_SWEEP,
    },
    'driven-rabi': {
        'model': 'driven-rabi', 'omega': '2/5', 'delta': '1/10',
        'delta_drive': '1/50', 'branch': '-', 'sweep': G_SWEEP,
    },
    'two-photon': {
        'model': 'two-photon', 'omega': '1', 'delta': '1/2', 'q': '1/4',
        'sweep': {'param': 'Omega', 'min': '0', 'max': '1'},
    },
    'two-mode': {
        'model': 'two-mode', 'omega': '1', 'delta': '1/2', 'q': '1/2',
        'sweep': {'param': 'Lambda', 'min': '0', 'max': '1'},
    },
    'generalized-rabi': {
        'model': 'generalized-rabi', 'omega': '1', 'delta': '1/3',
        'g1': '1', 'g2': '1/2',
        'sweep': {'param': 'kappa', 'min': '0', 'max': '2'},
    },
    'schweber': {
        'model': 'schweber', 'omega': '2/5', 'delta': '1/10',
        'sweep': G_SWEEP,
    },
    'koc': {
        'model': 'koc', 'omega': '2/5', 'delta': '1/10', 'sweep': G_SWEEP,
    },
}

# -- Models with a closed-form table in their own coordinate
TABLE_MODELS = [
    'rabi', 'driven-rabi', 'two-photon', 'two-mode', 'schweber', 'koc'
]


def spec_of(name, **fields):
    config = dict(CONFIGS[name])
    config.update(fields)
    return ModelSpec.from_config(config)


@pytest.mark.parametrize('name', sorted(CONFIGS))
@pytest.mark.parametrize('n', [0, 1, 3])
def test_closed_form_energy(name, n):
    spec = spec_of(name)
    baseline = solve_baseline(build_ode(spec), n)
    assert baseline.energy == baseline_energy(spec, n)


def test_two_photon_energy_in_bargmann_coordinate():
    # -- Omega = sqrt(1 - 4 g^2/w^2) = sqrt(3)/2 at g = 1/4
    spec = ModelSpec.from_config({
        'model': 'two-photon', 'omega': '1', 'delta': '1/2', 'q': '1/4',
        'g': '1/4',
    })
    baseline = solve_baseline(build_ode(spec), 2)
    assert baseline.energy == baseline_energy(spec, 2)


@pytest.mark.parametrize('name', TABLE_MODELS)
@pytest.mark.parametrize('n', [1, 2, 4])
def test_table_matches_induced_multiplicators(name, n):
    spec = spec_of(name)
    baseline = solve_baseline(build_ode(spec), n)
    induced = baseline.multiplicators(n)
    table = coefficient_table(spec, n)

    grades = set(table.entries) | set(induced)
    for grade in grades:
        for k in range(n + 1):
            expected = induced[grade][k] if grade in induced else 0
            assert table.value(grade, k) == expected, (grade, k)


def test_table_top_grade_vanishes_at_n():
    for name in TABLE_MODELS:
        table = coefficient_table(spec_of(name), 3)
        assert table.value(table.gamma, 3) == 0


def test_table_needs_own_coordinate():
    spec = spec_of('rabi', shift='1/2')
    with pytest.raises(NotApplicable):
        coefficient_table(spec, 1)


@pytest.mark.parametrize('name, signature', [
    ('rabi', (1, -2, 4)),
    ('generalized-rabi', (2, -2, 5)),
    ('schweber', (1, -1, 3)),
    ('koc', (1, -1, 3)),
])
def test_signatures(name, signature):
    found, _ = slice_operator(build_ode(spec_of(name)))
    assert (found.gamma, found.gamma_star, found.width) == signature


@pytest.mark.parametrize('name', ['schweber', 'koc'])
def test_translated_alternative_forms(name):
    found, _ = slice_operator(build_ode(spec_of(name, shift='1/2')))
    assert (found.gamma, found.gamma_star, found.width) == (1, -2, 4)


def test_degenerate_generalized_signature():
    spec = ModelSpec.from_config({
        'model': 'generalized-rabi', 'omega': '1', 'g1': '1/2', 'g2': '1',
        'degenerate': True,
        'sweep': {'param': 'kappa', 'min': '0', 'max': '2'},
    })
    found, _ = slice_operator(build_ode(spec))
    assert (found.gamma, found.gamma_star, found.width) == (1, -2, 4)


# ----------------------------------------
# -- Kus polynomials
# ----------------------------------------


def test_kus_first_polynomials():
    kappa = UniPoly.variable('k')
    assert kus_polynomial(0, kappa, Fraction(1, 3)) == 1
    assert kus_polynomial(1, kappa, Fraction(1, 2)) == UniPoly(
        (Fraction(-3, 4), 0, 4), 'k'
    )


def _monic_constraint(spec, n):
    baseline = solve_baseline(build_ode(spec), n)
    cleared = cleared_recurrence(baseline)
    (constraint,) = constraint_polynomials(baseline, cleared)
    return constraint.polynomial


@pytest.mark.parametrize('n', [1, 2])
def test_rabi_constraint_is_kus_polynomial(n):
    spec = spec_of('rabi')
    kus = kus_polynomial(n, UniPoly.variable('g'), Fraction(1, 2))
    assert _monic_constraint(spec, n) == kus * (1 / kus.lc)


def test_kus_points():
    spec = spec_of('rabi', sweep={'param': 'g', 'min': '0', 'max': '10'})
    found = find_points(spec, 3)
    assert len(found.points) == root_count_expectation(3, Fraction(1, 2))
    for point in found.points:
        assert abs(float(kus_value(spec, point.value, 3))) < 1e-15


def test_kus_value_needs_a_kus_model():
    with pytest.raises(NotApplicable):
        kus_value(spec_of('driven-rabi'), Fraction(1), 1)


def test_root_count_expectation():
    assert root_count_expectation(1, Fraction(1, 2)) == 1
    assert root_count_expectation(4, Fraction(5, 2)) == 2
    assert root_count_expectation(1, Fraction(7, 2)) == 0
    with pytest.raises(NotApplicable):
        root_count_expectation(3, Fraction(2))
    with pytest.raises(NotApplicable):
        root_count_expectation(3, Fraction(0))


# ----------------------------------------
# -- Symmetries
# ----------------------------------------


@pytest.mark.parametrize('n', [1, 2])
def test_driven_branches_mirror(n):
    # -- (branch, drive) -> (-branch, -drive) is z -> -z
    plus = spec_of('driven-rabi', branch='+', delta_drive='1/50')
    minus = spec_of('driven-rabi', branch='-', delta_drive='-1/50')
    assert _monic_constraint(plus, n) == _monic_constraint(minus, n)


def test_undriven_is_rabi():
    driven = spec_of('driven-rabi', omega='1', delta='1/2', delta_drive='0')
    assert _monic_constraint(driven, 2) == _monic_constraint(
        spec_of('rabi'), 2
    )


# ----------------------------------------
# -- Configs
# ----------------------------------------


@pytest.mark.parametrize('config', [
    {'omega': '1'},
    {'model': 'jaynes-cummings', 'omega': '1'},
    {'model': 'rabi', 'omega': '1', 'delta': '1/2'},
    {'model': 'rabi', 'omega': '1', 'delta': '1/2', 'g': '1', 'x': '2'},
    {'model': 'rabi', 'omega': '0', 'delta': '1/2', 'g': '1'},
    {'model': 'rabi', 'omega': '1', 'delta': '1/2', 'g': 'one'},
    {'model': 'rabi', 'omega': '1', 'delta': '1/2', 'g': '1', 'n': -1},
    {'model': 'rabi', 'omega': '1', 'delta': '1/2',
     'sweep': {'param': 'g', 'min': '-1', 'max': '1'}},
    {'model': 'rabi', 'omega': '1', 'delta': '1/2',
     'sweep': {'param': 'omega', 'min': '0', 'max': '1'}},
    {'model': 'rabi', 'omega': '1', 'delta': '1/2',
     'sweep': {'param': 'g', 'min': '1', 'max': '1'}},
    {'model': 'two-photon', 'omega': '1', 'delta': '1/2', 'q': '1/2',
     'g': '1/4'},
    {'model': 'two-photon', 'omega': '1', 'delta': '1/2', 'q': '1/4',
     'g': '1/2'},
    {'model': 'two-mode', 'omega': '1', 'delta': '1/2', 'q': '1/3',
     'g': '1/4'},
    {'model': 'generalized-rabi', 'omega': '1', 'delta': '1/2',
     'g1': '1', 'g2': '1'},
    {'model': 'driven-rabi', 'omega': '1', 'delta': '1/2', 'g': '1',
     'delta_drive': '0', 'branch': 'up'},
])
def test_invalid_configs(config):
    with pytest.raises(ConfigError):
        ModelSpec.from_config(config)


def test_config_round_trip():
    spec = spec_of('driven-rabi', n=3)
    assert ModelSpec.from_config(spec.to_config()) == spec


def test_replaced_parameter():
    spec = spec_of('two-photon', g='1/4')
    assert 'g' not in spec.params
    assert spec.scaled


def test_grid():
    spec = spec_of('rabi')
    assert spec.sweep.grid(4) == [
        Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)
    ]
    with pytest.raises(ConfigError):
        spec.sweep.grid(1)
