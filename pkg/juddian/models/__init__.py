"""The Rabi family: operators, closed-form multiplicators, Kus polynomials
and Juddian points"""
# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2

from juddian.models.spec import ModelKind, ModelSpec, Sweep
from juddian.models.builders import (
    ENERGY,
    baseline_energy,
    build_ode,
    generalized_constants,
    squeezing,
)
from juddian.models.tables import CoefficientTable, coefficient_table
from juddian.models.kus import (
    KUS_MODELS,
    kus_polynomial,
    kus_value,
    root_count_expectation,
)
from juddian.models.points import (
    ConstraintSweep,
    JuddianPoint,
    constraint_modulus,
    PointSet,
    evaluate_chunk,
    find_points,
    juddian_points,
    split_chunks,
)

__all__ = [
    "ENERGY",
    "KUS_MODELS",
    "CoefficientTable",
    "ConstraintSweep",
    "JuddianPoint",
    "ModelKind",
    "ModelSpec",
    "PointSet",
    "Sweep",
    "baseline_energy",
    "build_ode",
    "coefficient_table",
    "constraint_modulus",
    "evaluate_chunk",
    "find_points",
    "generalized_constants",
    "juddian_points",
    "kus_polynomial",
    "kus_value",
    "root_count_expectation",
    "split_chunks",
    "squeezing",
]
