"""Common helpers: exceptions, paths, environment options and number
formatting shared by the library, the managers and the commands"""
# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2

import os
import sys
from fractions import Fraction
from os.path import dirname, exists, isfile
from pathlib import Path

import click
import semantic_version

# ----------------------------------------
# -- Constants
# ----------------------------------------

# -- Default name of the model config file
CONFIG_FILENAME = "juddian.json"

# -- Exit codes of the command line tool
EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_CONFIG = 2
EXIT_DEGENERATE = 3
EXIT_VERIFICATION = 4


class JuddianException(Exception):
    """Base class of every error reported by juddian.
    The MESSAGE template is formatted with the exception arguments"""

    MESSAGE = None
    EXIT_CODE = EXIT_INTERNAL

    def __str__(self):
        if self.MESSAGE:
            return self.MESSAGE.format(*self.args)

        return Exception.__str__(self)


class ConfigError(JuddianException):
    """Invalid model config or command options"""

    EXIT_CODE = EXIT_CONFIG


class AlgebraError(JuddianException):
    """Invalid input to an exact-algebra operation"""


class BaselineError(JuddianException):
    """The highest-grade multiplicator does not fix a baseline"""

    EXIT_CODE = EXIT_DEGENERATE


class DegenerateBaseline(BaselineError):
    """Some F_gamma(k) vanishes below the baseline degree"""

    MESSAGE = (
        "degenerate baseline: F_{1}({0}) vanishes below the degree n={2}"
    )

    @property
    def k(self):
        """Offending index"""
        return self.args[0]


class VerificationFailure(JuddianException):
    """A certificate did not pass"""

    EXIT_CODE = EXIT_VERIFICATION


class NotApplicable(JuddianException):
    """The requested check does not exist for the given model"""


def _get_projconf_option_dir(name, default=None):
    """Return the project option with the given name.
    All the JUDDIAN environment variables have the prefix "JUDDIAN_"

    Project options:

    * home_dir : JUDDIAN home directory
    """

    # -- Get the full name of the environment variable
    _env_name = f"JUDDIAN_{name.upper()}"

    if _env_name in os.environ:
        _env_value = os.getenv(_env_name)

        # -- On windows the variables can include the quotes
        if _env_value.startswith('"') and _env_value.endswith('"'):
            _env_value = _env_value[1:-1]

        return _env_value

    return default


def get_home_dir():
    """Get the JUDDIAN home dir, where the profile is stored. It is set in
    the JUDDIAN_HOME_DIR environment variable, or ~/.juddian by default.
    The folder is created if it does not exist"""

    home_dir_env = _get_projconf_option_dir("home_dir")

    if home_dir_env:
        home_dir = Path(home_dir_env)
    else:
        home_dir = Path.home() / ".juddian"

    # -- Create the folders if they do not exist
    try:
        home_dir.mkdir(parents=True, exist_ok=True)
    except PermissionError:
        click.secho(f"Error: no usable home directory {home_dir}", fg="red")
        sys.exit(EXIT_INTERNAL)

    return str(home_dir)


def get_full_path(folder: str):
    """Get the full path of a folder inside the juddian package.
    Example: folder="commands" -> PosixPath('/.../juddian/commands')
    """

    return Path(__file__).parent / folder


def mkdir(path):
    """Create the parent folder of the given file path"""

    path = dirname(path)
    if path and not exists(path):
        try:
            os.makedirs(path)
        except OSError:
            pass


def check_dir(_dir):
    """Check if the given path is a folder. If no path is given
    the current path is used"""

    if _dir is None:
        _dir = os.getcwd()

    if isfile(_dir):
        raise ConfigError(f"project directory is already a file: {_dir}")

    if not exists(_dir):
        click.secho(f"Warning: The path does not exist: {_dir}", fg="yellow")
        click.secho(f"Creating folder: {_dir}")
        os.makedirs(_dir)

    return _dir


# W0703: Catching too general exception Exception (broad-except)
# pylint: disable=W0703
def command(function):
    """Command decorator. The wrapped function returns an exit code;
    exceptions are printed and mapped to their exit code"""

    def decorate(*args, **kwargs):
        exit_code = EXIT_INTERNAL
        try:
            exit_code = function(*args, **kwargs)

        except JuddianException as exc:
            click.secho("Error: " + str(exc), fg="red")
            exit_code = exc.EXIT_CODE

        except Exception as exc:
            if str(exc):
                click.secho("Error: " + str(exc), fg="red")

        return exit_code

    return decorate


# ----------------------------------------
# -- Numbers
# ----------------------------------------


def parse_rational(value, name="value"):
    """Parse an exact number from a config value. Decimal strings and
    p/q strings are read exactly; JSON floats go through their shortest
    decimal representation"""

    if isinstance(value, bool):
        raise ConfigError(f"{name}: expected a number, got {value!r}")

    if isinstance(value, (int, Fraction)):
        return Fraction(value)

    if isinstance(value, float):
        return Fraction(repr(value))

    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(f"{name}: not a number: '{value}'") from exc

    raise ConfigError(f"{name}: expected a number, got {value!r}")


def format_rational(value):
    """Exact rationals are written as `p/q` strings"""

    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_float(value):
    """17 significant digits, enough to round-trip a double"""

    return format(float(value), ".17g")


def check_format_version(version, spec_version):
    """True when the version string matches the semantic version spec"""

    spec = semantic_version.SimpleSpec(spec_version)
    try:
        semver = semantic_version.Version(version)
    except ValueError:
        return False

    return semver in spec
