# autosieve - large sieve and zero density toolkit
# Copyright (C) 2024 autosieve contributors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

import argparse
import typing as T

from autosieve.api import Api
from autosieve.api.cmd import BaseCommand
from autosieve.cmd.common import (
    add_family_arguments,
    character,
    emit,
    load_family,
    validate,
)
from autosieve.core.characters import primitive_characters
from autosieve.core.ideals import IdealFactorization
from autosieve.core.rep import character_rep
from autosieve.fmt.report import calibrated, envelope, exact, measured
from autosieve.sieve import (
    residual_trend,
    rs_partial_sum_lower,
    selberg_weights,
    smoothed_rs_sum,
)
from autosieve.util import integer, number


class SieveWeightsCommand(BaseCommand):
    names = ["sieve-weights"]
    help_text = "Solves for Selberg weights of every family member."
    help_text_extra = (
        "The solved diagonal is compared with its closed form; "
        "(d, rho(d)) pairs go to a CSV table next to the report."
    )

    async def run(self) -> None:
        family = load_family(self.args)
        diagonal_tolerance = self.api.report.tolerance("sieve_diagonal")
        weight_tolerance = self.api.report.tolerance("sieve_weight")
        psd_tolerance = float(self.api.cfg.opt["sieve"]["psd_tolerance"])

        members: T.Dict[str, T.Any] = {}
        rows = []
        failures = []
        for i, rep in enumerate(family):
            label = rep.label or f"member-{i}"
            weights = selberg_weights(rep, self.args.z, psd_tolerance)
            closed = weights.closed_form_diagonal
            deviation = (
                abs(weights.diagonal - closed) if closed is not None else 0.0
            )
            if deviation > diagonal_tolerance:
                failures.append(f"{label}: diagonal off by {deviation:.3e}")
            if weights.max_weight() > 1 + weight_tolerance:
                failures.append(
                    f"{label}: weight {weights.max_weight():.6f} exceeds 1"
                )
            members[label] = {
                "support_size": exact(len(weights.support)),
                "diagonal": measured(weights.diagonal),
                "closed_form_diagonal": measured(closed),
                "max_weight": measured(weights.max_weight()),
                "min_eigenvalue": measured(weights.min_eigenvalue),
                "flagged_primes": [prime.label for prime in weights.flagged],
            }
            rows.extend(
                (label, d.label, weights.rho[d]) for d in weights.support
            )

        table = self.api.report.emit_table(
            "weights", ["member", "d", "rho"], rows
        )
        emit(
            self,
            {
                "members": members,
                "table": str(table) if table else None,
                "passed": not failures,
            },
        )
        validate("sieve-weights", not failures, "; ".join(failures))

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        add_family_arguments(parser)
        parser.add_argument("--z", help="sieve level", type=number, default=10)


class SieveSmoothedCommand(BaseCommand):
    names = ["sieve-smoothed"]
    help_text = "Compares smoothed Rankin-Selberg sums with their main term."
    help_text_extra = (
        "The relative residual must stay within the calibrated tolerance "
        "and must not grow with x when both characters agree."
    )

    async def run(self) -> None:
        rep_a = character_rep(self.args.character, primitive=False)
        rep_b = character_rep(
            self.args.other or self.args.character, primitive=False
        )
        d = IdealFactorization.of_integer(self.args.d)
        relative_tolerance = self.api.report.constant(
            "smoothed_relative_tolerance"
        )
        noise_floor = self.api.report.constant("smoothed_noise_floor")

        points = {}
        ratios = []
        for x in sorted(self.args.x):
            report = smoothed_rs_sum(
                rep_a, rep_b, d, x, self.args.T, mapper=self.api.threading.map
            )
            ratios.append(report.relative_residual)
            points[repr(x)] = {
                "direct_sum": measured(report.direct_sum),
                "main_term": measured(report.main_term),
                "relative_residual": measured(report.relative_residual),
                "terms": exact(report.terms),
            }
        trend_ok, _ratios = residual_trend(ratios, noise_floor)
        has_main_term = report.kappa > 0
        within = not has_main_term or ratios[-1] <= relative_tolerance
        emit(
            self,
            {
                "kappa": exact(report.kappa),
                "density": exact(report.density),
                "points": points,
                "relative_tolerance": calibrated(relative_tolerance),
                "trend_nonincreasing": trend_ok,
                "passed": within and (trend_ok or not has_main_term),
            },
            constants=["smoothed_relative_tolerance", "smoothed_noise_floor"],
        )
        validate(
            "smoothed-residual",
            within,
            f"relative residual {ratios[-1]:.3e} > {relative_tolerance}",
        )
        validate(
            "smoothed-trend",
            trend_ok or not has_main_term,
            "relative residuals grow with x: "
            + ", ".join(f"{ratio:.3e}" for ratio in ratios),
        )

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "--character",
            help='character label "q.index"',
            type=character,
            default="3.1",
        )
        parser.add_argument(
            "--other",
            help="second character, the first one when omitted",
            type=character,
        )
        parser.add_argument(
            "--d", help="squarefree integer d", type=integer, default=1
        )
        parser.add_argument(
            "--x",
            help="lengths of the sum",
            type=number,
            nargs="+",
            default=[1e4, 1e5, 1e6],
        )
        parser.add_argument(
            "--T", help="sharpness of the smoothing", type=number, default=1
        )


class SievePartialLowerCommand(BaseCommand):
    names = ["sieve-partial-lower"]
    help_text = "Checks the harmonic lower bound for primitive characters."

    async def run(self) -> None:
        rows = []
        failures = []
        results: T.Dict[str, T.Any] = {}
        for modulus in range(1, self.args.qmax + 1):
            for chi in primitive_characters(modulus):
                rep = character_rep(chi)
                sides = {}
                for z in sorted(self.args.z):
                    lhs, rhs = rs_partial_sum_lower(rep, z)
                    rows.append((chi.label, z, lhs, rhs))
                    if lhs < rhs:
                        failures.append(f"{chi} at z={z}")
                    sides[repr(z)] = {
                        "lhs": measured(lhs),
                        "rhs": envelope(rhs),
                    }
                results[chi.label] = sides

        table = self.api.report.emit_table(
            "partial-lower", ["character", "z", "lhs", "rhs"], rows
        )
        emit(
            self,
            {
                "characters": results,
                "table": str(table) if table else None,
                "passed": not failures,
            },
        )
        validate(
            "partial-lower",
            not failures,
            "lhs < rhs for " + ", ".join(failures),
        )

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "--qmax", help="largest modulus", type=integer, default=20
        )
        parser.add_argument(
            "--z",
            help="lengths of the sum",
            type=number,
            nargs="+",
            default=[1e2, 1e3, 1e4],
        )


COMMANDS = [
    SieveWeightsCommand,
    SieveSmoothedCommand,
    SievePartialLowerCommand,
]
