# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2
"""Terminal tables, solution files and CSV output"""

import csv
import json
import shutil
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

import click

import juddian
from juddian import util
from juddian.algebra.poly import UniPoly, format_scalar
from juddian.algebra.roots import RootInterval
from juddian.recurrence import PolynomialSolution
from juddian.verification import CertificateBundle

# ----------------------------------------
# -- Plain values
# ----------------------------------------


def exact_text(value):
    """Text of an exact value: p/q for rationals"""

    if isinstance(value, Fraction):
        return util.format_rational(value)
    if isinstance(value, UniPoly):
        return value.to_str()
    return format_scalar(value)


def number(value, exact):
    """JSON number of a parameter value: p/q string or float"""

    if exact and isinstance(value, Fraction):
        return util.format_rational(value)
    return float(value)


def read_number(value, exact):
    """Inverse of number()"""

    if exact and isinstance(value, str):
        return util.parse_rational(value)
    return float(value)


def _rule():
    terminal_width, _ = shutil.get_terminal_size()
    click.echo("-" * terminal_width)


def write_csv(path, header, rows):
    """CSV file with a header line"""

    with open(path, "w", newline="", encoding="utf-8") as file:
        writer = csv.writer(file)
        writer.writerow(header)
        writer.writerows(rows)


def write_json(path, payload):
    """JSON file, keys sorted"""

    Path(path).write_text(
        json.dumps(payload, indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )


# ----------------------------------------
# -- slice / baseline / constraint
# ----------------------------------------


def print_slices(op, signature, slices, alternative, verbose=0):
    """Grade signature and the terms of every slice"""

    click.secho(
        f"Grade signature: gamma={signature.gamma}, "
        f"gamma*={signature.gamma_star}, width={signature.width}",
        fg="cyan",
    )
    for slice_ in slices:
        terms = " + ".join(
            f"{format_scalar(t.coef)} z^{t.m} D^{t.l}" for t in slice_.terms
        )
        click.echo(f"  grade {slice_.grade:>3}: {terms or '0'}")

    click.echo(f"Alternative: {alternative.value}")
    if verbose:
        click.echo("\nOperator:")
        click.echo(op.dump())


def print_baseline(baseline, clearing_factor, rows):
    """E_n, the clearing factor and the multiplicators k -> F_g(k)"""

    click.secho(f"E_{baseline.n} = {exact_text(baseline.energy)}", fg="cyan")
    click.echo(f"Clearing factor: {exact_text(clearing_factor)}")

    grades = [s.grade for s in baseline.slices]
    columns = "  ".join("{%d:24}" % i for i in range(len(grades)))
    table_tpl = "{k:>4}  " + columns

    click.echo()
    _rule()
    click.echo(table_tpl.format(*[f"F_{g}" for g in grades], k="k"))
    _rule()
    for k, values in rows:
        click.echo(
            table_tpl.format(
                *[exact_text(values[g]) for g in grades], k=k
            )
        )


def constraint_payload(spec, n, constraints, clearing_factor):
    """Monic constraint coefficients, lowest degree first"""

    items = []
    for item in constraints:
        poly = item.polynomial
        coeffs = poly.coeffs if isinstance(poly, UniPoly) else (poly,)
        items.append(
            {
                "grade": item.grade,
                "coefficients": [exact_text(c) for c in coeffs],
                "cleared": exact_text(item.cleared),
            }
        )
    return {
        "model": spec.name,
        "n": n,
        "param": spec.sweep.param if spec.sweep else None,
        "constraints": items,
        "clearing_factor": exact_text(clearing_factor),
    }


# ----------------------------------------
# -- roots / verify
# ----------------------------------------


def print_points(param, points, bundles, verbose=0):
    """One line per Juddian point with its overall status"""

    if not points:
        click.secho("No Juddian points in the sweep range", fg="yellow")
        return

    point_tpl = "{index:>4}  {value:26} {status:6} {extra}"
    click.echo()
    _rule()
    click.echo(
        point_tpl.format(
            index="#",
            value=click.style(param, fg="cyan"),
            status="Status",
            extra="",
        )
    )
    _rule()
    for index, (point, bundle) in enumerate(zip(points, bundles)):
        extra = ", ".join(
            f"{k}={util.format_float(v)}" for k, v in point.extra.items()
        )
        status = bundle.overall
        click.echo(
            point_tpl.format(
                index=index,
                value=util.format_float(point.value),
                status=click.style(
                    status, fg="green" if status == "pass" else "red"
                ),
                extra=extra,
            )
        )
        if verbose:
            print_bundle(bundle)


def print_bundle(bundle):
    """Status of every certificate in the bundle"""

    for certificate in bundle.certificates:
        method = certificate.witnesses.get("method")
        label = certificate.kind.value + (f" ({method})" if method else "")
        click.echo(f"        {label:22} {certificate.status}")


@dataclass(frozen=True)
class StoredPoint:
    """A point read back from a solution file"""

    value: object
    solution: PolynomialSolution
    extra: dict
    interval: Optional[tuple]
    bundle: CertificateBundle


def _located(item):
    """An isolating interval as [lo, hi], a float root as itself"""

    if isinstance(item, RootInterval):
        return [util.format_rational(item.lo), util.format_rational(item.hi)]
    return util.format_float(item)


def solution_payload(run, n, found, bundles):
    """Solution file of a `roots` run"""

    spec = run.spec
    points = []
    for point, bundle in zip(found.points, bundles):
        interval = None
        if point.interval is not None:
            interval = [
                util.format_rational(point.interval.lo),
                util.format_rational(point.interval.hi),
            ]
        points.append(
            {
                "value": number(point.value, run.exact),
                "interval": interval,
                "extra": {k: float(v) for k, v in point.extra.items()},
                "coefficients": [
                    number(c, run.exact) for c in point.solution.coefficients
                ],
                "certified": point.certified,
                "bundle": bundle.to_dict(),
            }
        )

    return {
        "format": juddian.SOLUTION_FORMAT,
        "model": spec.to_config(),
        "n": n,
        "mode": run.mode,
        "param": spec.variable,
        "points": points,
        "excluded": [_located(item) for item in found.excluded],
        "rejected": [_located(item) for item in found.rejected],
        "modulus": exact_text(found.modulus) if found.modulus else None,
    }


def points_rows(found, bundles):
    """Rows of the roots CSV"""

    return [
        [util.format_float(p.value), b.overall]
        for p, b in zip(found.points, bundles)
    ]


def read_solution(path):
    """Solution file contents. Raise ConfigError for unreadable files and
    unsupported format versions"""

    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise util.ConfigError(
            f"cannot read solution file {path}: {exc}"
        ) from exc

    version = str(data.get("format", ""))
    if not util.check_format_version(
        version, juddian.SOLUTION_FORMAT_SPEC
    ):
        raise util.ConfigError(
            f"unsupported solution format '{version}', "
            f"expected {juddian.SOLUTION_FORMAT_SPEC}"
        )

    for key in ("model", "n", "mode", "param", "points"):
        if key not in data:
            raise util.ConfigError(f"solution file without '{key}'")
    return data


def stored_points(data):
    """[StoredPoint] of a solution file"""

    exact = data["mode"] == "exact"
    n = int(data["n"])
    out = []
    for item in data["points"]:
        coefficients = tuple(
            read_number(c, exact) for c in item["coefficients"]
        )
        interval = item.get("interval")
        if interval is not None:
            interval = tuple(util.parse_rational(v) for v in interval)
        out.append(
            StoredPoint(
                read_number(item["value"], exact),
                PolynomialSolution(n, coefficients),
                {k: float(v) for k, v in item.get("extra", {}).items()},
                interval,
                CertificateBundle.from_dict(item["bundle"]),
            )
        )
    return out
