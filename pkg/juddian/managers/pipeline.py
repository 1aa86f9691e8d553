"""Pipeline steps behind the commands: slicing, baseline, constraints,
Juddian points, sweeps and offline verification"""
# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2

import io
import csv
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from functools import partial
from pathlib import Path

import click

from juddian import util
from juddian.gradation import (
    classify_alternative,
    irregular_at_infinity,
    slice_operator,
    wronskian_uniqueness_flag,
)
from juddian.managers import report
from juddian.managers.arguments import process_arguments
from juddian.models import (
    ConstraintSweep,
    ModelSpec,
    build_ode,
    coefficient_table,
    constraint_modulus,
    evaluate_chunk,
    find_points,
    split_chunks,
)
from juddian.profile import Profile
from juddian.recurrence import (
    cleared_recurrence,
    constraint_polynomials,
    solve_baseline,
)
from juddian.resources import Resources
from juddian.verification import (
    CertificateBundle,
    Tolerances,
    certify_point,
    isolation_certificate,
    modular_certificate,
    point_spec,
    probe_certificate,
)


class Pipeline:
    """Class for running the pipeline steps on a model config"""

    def __init__(self):
        # -- Read the juddian profile file
        self.profile = Profile()

        # -- Read the model catalogue
        self.resources = Resources()

    @util.command
    def slice(self, args):
        """Grade signature and slices of the model operator"""

        run = process_arguments(args, self.profile)
        op = build_ode(run.spec)
        signature, slices = slice_operator(op)

        report.print_slices(
            op, signature, slices, classify_alternative(op), run.verbose
        )
        if wronskian_uniqueness_flag(op):
            click.secho(
                "Info: B = -A', a second polynomial solution is possible",
                fg="yellow",
            )
        if irregular_at_infinity(op):
            click.echo("Infinity is an irregular singular point")
        return util.EXIT_OK

    @util.command
    def baseline(self, args):
        """Baseline energy, clearing factor and multiplicators"""

        run = process_arguments(args, self.profile)
        spec = run.spec
        n = spec.require_degree()

        baseline = solve_baseline(build_ode(spec), n)
        cleared = cleared_recurrence(baseline)

        try:
            rows = coefficient_table(spec, n).rows(n)
        except util.NotApplicable:
            table = baseline.multiplicators(n)
            rows = [
                (k, {g: values[k] for g, values in table.items()})
                for k in range(n + 1)
            ]

        report.print_baseline(baseline, cleared.clearing_factor, rows)
        return util.EXIT_OK

    @util.command
    def constraint(self, args):
        """Normalized constraint polynomials"""

        run = process_arguments(args, self.profile)
        spec = run.spec
        n = spec.require_degree()

        baseline = solve_baseline(build_ode(spec), n)
        cleared = cleared_recurrence(baseline)
        constraints = constraint_polynomials(baseline, cleared)
        payload = report.constraint_payload(
            spec, n, constraints, cleared.clearing_factor
        )

        if run.out:
            report.write_json(run.out, payload)
            click.secho(f"Constraints written to {run.out}", fg="green")
        else:
            click.echo(json.dumps(payload, indent=2))
        return util.EXIT_OK

    @util.command
    def roots(self, args):
        """Certified Juddian points in the sweep range"""

        run = process_arguments(args, self.profile)
        spec = run.spec
        n = spec.require_degree()

        found = find_points(spec, n, mode=run.mode, grid=run.grid)

        modular = None
        if run.exact and found.modulus is not None:
            modular = modular_certificate(spec, n, found.modulus)

        bundles = [
            certify_point(
                spec,
                n,
                point.param,
                point.value,
                point.solution,
                run.tolerances,
                point.extra,
                modular,
            )
            for point in found.points
        ]

        report.print_points(spec.variable, found.points, bundles, run.verbose)
        for item in found.excluded:
            click.secho(
                f"Info: excluded a root of the clearing factor: {item}",
                fg="yellow",
            )

        if run.out:
            if Path(run.out).suffix == ".csv":
                report.write_csv(
                    run.out,
                    [spec.variable, "status"],
                    report.points_rows(found, bundles),
                )
            else:
                report.write_json(
                    run.out, report.solution_payload(run, n, found, bundles)
                )
            click.secho(f"Solutions written to {run.out}", fg="green")

        failed = [b for b in bundles if b.overall != "pass"]
        if failed:
            click.secho(
                f"Error: {len(failed)} point(s) failed verification", fg="red"
            )
            return util.EXIT_VERIFICATION
        return util.EXIT_OK

    @util.command
    def sweep(self, args):
        """Constraint values on the sweep grid, as CSV"""

        run = process_arguments(args, self.profile)
        spec = run.spec
        sweeper = ConstraintSweep(spec, spec.require_degree(), run.mode)

        values = spec.sweep.grid(run.grid)
        chunks = split_chunks(values, run.workers)
        if run.workers > 1:
            with ProcessPoolExecutor(max_workers=run.workers) as executor:
                results = list(
                    executor.map(partial(evaluate_chunk, sweeper), chunks)
                )
        else:
            results = [evaluate_chunk(sweeper, chunk) for chunk in chunks]

        rows = []
        for chunk in results:
            for value, constraints, kus in chunk:
                row = [util.format_float(value)]
                row += [util.format_float(c) for c in constraints]
                if kus is not None:
                    row.append(util.format_float(kus))
                rows.append(row)

        if run.out:
            report.write_csv(run.out, sweeper.header, rows)
            click.secho(f"Sweep written to {run.out}", fg="green")
        else:
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(sweeper.header)
            writer.writerows(rows)
            click.echo(buffer.getvalue(), nl=False)
        return util.EXIT_OK

    @util.command
    def verify(self, args):
        """Recompute every certificate of a solution file"""

        data = report.read_solution(args["solution"])
        spec = ModelSpec.from_config(data["model"], self.resources)
        n = int(data["n"])
        param = data["param"]
        exact = data["mode"] == "exact"

        tolerances = Tolerances.from_profile(self.profile)
        if args.get("tol") is not None:
            tolerances = replace(tolerances, residual=args["tol"])
        seed = args.get("seed")
        if seed is None:
            seed = int(self.profile.get("seed"))

        modulus, modular = None, None
        if exact and data.get("modulus"):
            modulus = constraint_modulus(spec, n)
            modular = modular_certificate(spec, n, modulus)

        points = report.stored_points(data)
        bundles = []
        for index, point in enumerate(points):
            bundle = certify_point(
                spec,
                n,
                param,
                point.value,
                point.solution,
                tolerances,
                point.extra,
                modular,
            )
            fixed = point_spec(spec, param, point.value, point.extra)
            op = build_ode(fixed, n)
            extra = [
                probe_certificate(
                    op, point.solution, seed + index, tol=tolerances.residual
                )
            ]
            if modulus is not None and point.interval is not None:
                lo, hi = point.interval
                extra.append(
                    isolation_certificate(modulus, lo, hi, point.value)
                )
            bundle = CertificateBundle(bundle.certificates + tuple(extra))

            if bundle.overall != point.bundle.overall:
                click.secho(
                    f"Warning: point {index}: stored status "
                    f"{point.bundle.overall}, recomputed {bundle.overall}",
                    fg="yellow",
                )
            bundles.append(bundle)

        report.print_points(param, points, bundles, verbose=1)

        if args.get("out"):
            report.write_json(
                args["out"], {"bundles": [b.to_dict() for b in bundles]}
            )

        failed = [b for b in bundles if b.overall != "pass"]
        if failed:
            click.secho(
                f"Error: {len(failed)} point(s) failed verification", fg="red"
            )
            return util.EXIT_VERIFICATION

        click.secho("All the certificates pass", fg="green")
        return util.EXIT_OK
