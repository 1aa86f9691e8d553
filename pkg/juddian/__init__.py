"""Exact polynomial solutions of Rabi-type differential equations"""
# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2

# --------------------------------------------
# - Information for the Distribution package
# --------------------------------------------

VERSION = (0, 3, 0)
__version__ = ".".join([str(s) for s in VERSION])

__title__ = "juddian"
__description__ = (
    "Gradation slicing, constraint polynomials and Juddian points "
    "of quasi-exactly solvable Rabi models"
)
__url__ = "https://github.com/juddian/juddian"

__author__ = "The Juddian developers"
__email__ = "juddian@users.noreply.github.com"

__license__ = "GPLv2"

# -- Version of the solution files written by `juddian roots`
# -- Files are accepted by `juddian verify` when their version matches
# -- this semantic version spec
SOLUTION_FORMAT = "1.1.0"
SOLUTION_FORMAT_SPEC = ">=1.0.0,<2.0.0"
