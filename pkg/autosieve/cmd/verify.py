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

from autosieve.api import Api
from autosieve.api.cmd import BaseCommand
from autosieve.cmd.common import character, emit, validate
from autosieve.fmt.report import calibrated, envelope, exact, measured
from autosieve.inequalities import HISTOGRAM_EDGES, verify_gram_forms
from autosieve.schur_rs import verify_cauchy, verify_hseries
from autosieve.util import integer, number
from autosieve.zero_lab.coefficients import mertens_sum
from autosieve.zero_lab.turan import verify_turan


class VerifyCauchyCommand(BaseCommand):
    names = ["verify-cauchy"]
    help_text = (
        "Compares Rankin-Selberg local series with Schur partition sums."
    )
    help_text_extra = "Pairs of unitary parameter sets are drawn at random."

    async def run(self) -> None:
        tolerance = self.api.report.tolerance("cauchy")
        summary = verify_cauchy(
            self.args.n,
            self.args.nprime,
            self.args.degree,
            self.args.trials,
            self.api.seed,
            mapper=self.api.threading.map,
        )
        emit(
            self,
            {
                "trials": exact(summary.trials),
                "max_deviation": measured(summary.max_deviation),
                "passed": summary.max_deviation <= tolerance,
            },
        )
        validate(
            "cauchy",
            summary.max_deviation <= tolerance,
            f"deviation {summary.max_deviation:.3e} > {tolerance:.1e}",
        )

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "--n", help="size of the first set", type=integer, default=2
        )
        parser.add_argument(
            "--nprime", help="size of the second set", type=integer, default=2
        )
        parser.add_argument(
            "--degree", help="highest coefficient", type=integer, default=6
        )
        parser.add_argument(
            "--trials", help="number of pairs", type=integer, default=200
        )


class VerifyGramCommand(BaseCommand):
    names = ["verify-gram", "verify-prop31"]
    help_text = "Checks the Rankin-Selberg quadratic forms for definiteness."
    help_text_extra = (
        "Degrees not given are drawn per instance; "
        "exits with status 2 when any discriminant is positive."
    )

    async def run(self) -> None:
        tolerance = self.api.report.tolerance("gram")
        summary = verify_gram_forms(
            self.args.trials,
            self.api.seed,
            n=self.args.n,
            nprime=self.args.nprime,
            tolerance=tolerance,
            mapper=self.api.threading.map,
        )
        passed = (
            summary.violations == 0
            and summary.max_normalized_discriminant <= tolerance
        )
        emit(
            self,
            {
                "trials": exact(summary.trials),
                "violations": measured(summary.violations),
                "max_normalized_discriminant": measured(
                    summary.max_normalized_discriminant
                ),
                "min_normalized_a": measured(summary.min_normalized_a),
                "min_normalized_c": measured(summary.min_normalized_c),
                "max_discriminant": measured(summary.max_discriminant),
                "min_a": measured(summary.min_a),
                "min_c": measured(summary.min_c),
                "absolute_violations": measured(summary.absolute_violations),
                "histogram": measured(summary.histogram),
                "histogram_edges": exact(list(HISTOGRAM_EDGES)),
                "passed": passed,
            },
        )
        validate(
            "gram",
            passed,
            f"{summary.violations} violations, largest discriminant "
            f"{summary.max_normalized_discriminant:.3e}",
        )

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "--trials", help="number of instances", type=integer, default=10000
        )
        parser.add_argument(
            "--n", help="degree of the first representation", type=integer
        )
        parser.add_argument(
            "--nprime",
            help="degree of the second representation",
            type=integer,
        )


class VerifyHseriesCommand(BaseCommand):
    names = ["verify-hseries"]
    help_text = "Compares H-series local factors with their closed forms."

    async def run(self) -> None:
        tolerance = self.api.report.tolerance("hseries")
        summaries = verify_hseries(
            self.args.trials, self.api.seed, self.args.degree
        )
        worst = max(summary.max_deviation for summary in summaries.values())
        emit(
            self,
            {
                "degree": exact(self.args.degree),
                "max_deviation": {
                    key: measured(summary.max_deviation)
                    for key, summary in summaries.items()
                },
                "passed": worst <= tolerance,
            },
        )
        validate(
            "hseries",
            worst <= tolerance,
            f"deviation {worst:.3e} > {tolerance:.1e}",
        )

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "--trials", help="number of pairs", type=integer, default=100
        )
        parser.add_argument(
            "--degree", help="truncation order", type=integer, default=8
        )


class VerifyMertensCommand(BaseCommand):
    names = ["verify-mertens"]
    help_text = "Checks the Mertens-type bound for a Dirichlet character."
    help_text_extra = (
        "The left side folds in the certified tail; "
        "the bound is allowed the calibrated slack."
    )

    async def run(self) -> None:
        slack = self.api.report.constant("mertens_slack")
        tolerance = self.api.report.tolerance("mertens_pointwise")
        report = mertens_sum(self.args.character, self.args.eta, self.args.N)
        bound_holds = report.lhs <= report.rhs + slack
        pointwise_holds = report.pointwise_max_excess <= tolerance
        emit(
            self,
            {
                "truncated_sum": measured(report.truncated_sum),
                "tail_bound": envelope(report.tail_bound),
                "lhs": measured(report.lhs),
                "rhs": envelope(report.rhs),
                "slack": calibrated(slack),
                "pointwise_checked": exact(report.pointwise_checked),
                "pointwise_max_excess": measured(
                    report.pointwise_max_excess
                ),
                "flags": dict(report.flags),
                "passed": bound_holds and pointwise_holds,
            },
            constants=["mertens_slack", "chebyshev_psi"],
        )
        validate(
            "mertens",
            bound_holds,
            f"lhs {report.lhs:.6f} > rhs {report.rhs:.6f} + {slack}",
        )
        validate(
            "mertens-pointwise",
            pointwise_holds,
            f"excess {report.pointwise_max_excess:.3e}",
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
            "--eta", help="exponent shift in (0, 1]", type=number, default=0.5
        )
        parser.add_argument(
            "--N", help="truncation point", type=integer, default=10 ** 5
        )


class VerifyTuranCommand(BaseCommand):
    names = ["verify-turan"]
    help_text = "Runs the power sum search on random unimodular points."
    help_text_extra = (
        "Every result is compared with an exhaustive scan of [K, 2K]."
    )

    async def run(self) -> None:
        base = self.api.report.constant("turan_base")
        summary = verify_turan(
            self.args.trials,
            self.args.max_terms,
            self.api.seed,
            base=base,
            mapper=self.api.threading.map,
        )
        passed = summary.failures == 0 and summary.oracle_mismatches == 0
        emit(
            self,
            {
                "trials": exact(summary.trials),
                "failures": measured(summary.failures),
                "oracle_mismatches": measured(summary.oracle_mismatches),
                "largest_k_ratio": measured(summary.largest_k_ratio),
                "passed": passed,
            },
            constants=["turan_base"],
        )
        validate(
            "turan",
            passed,
            f"{summary.failures} failed searches, "
            f"{summary.oracle_mismatches} oracle mismatches",
        )

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "--trials",
            help="number of configurations",
            type=integer,
            default=1000,
        )
        parser.add_argument(
            "--max-terms",
            help="largest configuration",
            type=integer,
            default=8,
        )


COMMANDS = [
    VerifyCauchyCommand,
    VerifyGramCommand,
    VerifyHseriesCommand,
    VerifyMertensCommand,
    VerifyTuranCommand,
]
