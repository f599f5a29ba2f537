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
import math
import typing as T

from autosieve.api import Api
from autosieve.api.cmd import BaseCommand
from autosieve.cmd.common import (
    FancyPath,
    add_character_arguments,
    character,
    emit,
    load_characters,
    validate,
)
from autosieve.core.characters import DirichletCharacter
from autosieve.core.rep import character_family
from autosieve.fmt.report import calibrated, envelope, exact, measured
from autosieve.fmt.zerolist import read_zero_list, write_zero_list
from autosieve.util import integer, number
from autosieve.zero_lab.density import (
    subconvexity_rhs,
    zero_density_sum,
    zero_sum_identity,
)
from autosieve.zero_lab.detection import (
    derivative_residual,
    planted_zero_check,
    zero_detect_criterion,
)
from autosieve.zero_lab.logderiv import scaled_logderiv
from autosieve.zero_lab.turan import NEARBY_RADIUS
from autosieve.zero_lab.zeros import (
    MAX_SCAN_HEIGHT,
    ZeroList,
    critical_line_sign_changes,
)


def zero_values(zeros: ZeroList) -> T.List[T.List[float]]:
    return [[rho.real, rho.imag] for rho in zeros]


class ZerosScanCommand(BaseCommand):
    names = ["zeros-scan"]
    help_text = "Finds the zeros of Dirichlet L-functions in a box."
    help_text_extra = (
        "For real characters the zeros on the critical line are also "
        "counted by sign changes."
    )

    async def run(self) -> None:
        tolerance = self.api.report.tolerance("critical_line")
        results: T.Dict[str, T.Any] = {}
        rows = []
        failures = []
        for chi in load_characters(self.args):
            zeros = self.api.zeros.scan(chi, self.args.T, self.args.sigma_min)
            if self.args.save:
                path = self.args.save.get_save_dir() / f"{chi.label}.json"
                with path.open("w") as handle:
                    write_zero_list(zeros, handle)
            entry: T.Dict[str, T.Any] = {
                "count": measured(len(zeros.upper())),
                "total": measured(len(zeros)),
                "zeros": measured(zero_values(zeros)),
                "max_critical_line_offset": measured(
                    max((abs(rho.real - 0.5) for rho in zeros), default=0.0)
                ),
            }
            if chi.is_real() and self.args.sigma_min < 0.5:
                on_line = sum(
                    1 for rho in zeros if abs(rho.real - 0.5) <= tolerance
                )
                changes = critical_line_sign_changes(chi, self.args.T)
                entry["sign_changes"] = measured(changes)
                if changes != on_line:
                    failures.append(
                        f"{chi}: {on_line} zeros on the line, "
                        f"{changes} sign changes"
                    )
            results[chi.label] = entry
            rows.extend((chi.label, rho.real, rho.imag) for rho in zeros)

        table = self.api.report.emit_table(
            "zeros", ["character", "beta", "gamma"], rows
        )
        emit(
            self,
            {
                "characters": results,
                "table": str(table) if table else None,
                "passed": not failures,
            },
        )
        validate("critical-line-count", not failures, "; ".join(failures))

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        add_character_arguments(parser)
        parser.add_argument(
            "--T", help="box height, at most 60", type=number, default=30
        )
        parser.add_argument(
            "--sigma-min", help="left end of the box", type=number, default=0
        )
        parser.add_argument(
            "--save",
            help="directory receiving one zero list file per character",
            type=FancyPath,
        )


class ZerosZdeCommand(BaseCommand):
    names = ["zeros-zde"]
    help_text = "Counts zeros over a character family against the envelopes."
    help_text_extra = (
        "The family holds the primitive characters up to an analytic "
        "conductor or modulus cap."
    )

    async def run(self) -> None:
        if self.args.qmax:
            family = character_family(q_max=self.args.qmax)
        else:
            family = character_family(Q=self.args.Qmax)
        report = zero_density_sum(
            family,
            self.args.sigma,
            self.args.T,
            mapper=self.api.threading.map,
            scanner=self.api.zeros.scanner(),
        )
        emit(
            self,
            {
                "count": measured(report.count),
                "counts": {
                    label: measured(count)
                    for label, count in report.counts.items()
                },
                "family_size": exact(report.family_size),
                "Q": exact(report.Q),
                "log_envelope": envelope(report.log_envelope),
                "envelope": envelope(report.envelope),
                "log_montgomery": envelope(report.log_montgomery),
                "log_jutila": envelope(report.log_jutila),
                "regime_boundaries": {
                    key: envelope(value)
                    for key, value in report.regime_boundaries.items()
                },
                "passed": report.count <= report.envelope,
            },
        )
        validate(
            "zero-density",
            report.count <= report.envelope,
            f"count {report.count} exceeds the envelope",
        )

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        group = parser.add_mutually_exclusive_group()
        group.add_argument(
            "--Qmax",
            help="analytic conductor cap",
            type=number,
            default=40,
        )
        group.add_argument("--qmax", help="modulus cap", type=integer)
        parser.add_argument(
            "--sigma", help="real part threshold", type=number, default=0.6
        )
        parser.add_argument(
            "--T", help="height, at most 60", type=number, default=30
        )


class ZerosDetectCommand(BaseCommand):
    names = ["zeros-detect"]
    help_text = "Evaluates the zero detection criterion at 1 + i tau."
    help_text_extra = (
        "Optionally adds planted-zero checks, high log-derivative residuals "
        "and the outside-window split of the scaled log-derivative."
    )

    def _zeros(self, chi: DirichletCharacter) -> ZeroList:
        if self.args.zeros:
            return read_zero_list(self.args.zeros.get_load_path())
        height = min(
            MAX_SCAN_HEIGHT,
            abs(self.args.tau) + NEARBY_RADIUS * self.args.eta,
        )
        return self.api.zeros.scan(chi, height)

    async def run(self) -> None:
        chi = self.args.character
        eta = self.args.eta
        tau = self.args.tau
        zeros = self._zeros(chi)
        cap = int(self.api.cfg.opt["zeros"]["series_cap"])
        report = zero_detect_criterion(
            chi,
            tau,
            eta,
            zeros,
            K=self.args.K,
            cap=cap,
            mean_square_T=self.args.mean_square_T,
            mapper=self.api.threading.map,
        )
        results: T.Dict[str, T.Any] = {
            "K": exact(report.K),
            "near_zero": report.near_zero,
            "nearest_distance": measured(report.nearest_distance),
            "vacuous": report.vacuous,
            "log_N0": exact(report.log_N0),
            "log_N1": exact(report.log_N1),
            "integral": measured(report.integral),
            "log10_rhs": measured(report.log10_rhs),
            "mean_square_log10_rhs": envelope(report.mean_square_log10_rhs),
            "implication_holds": report.implication_holds,
            "flags": dict(report.flags),
        }
        failures = []
        if not report.implication_holds:
            failures.append("a nearby zero left the right hand side below 1")

        if self.args.planted:
            checks = [
                planted_zero_check(
                    eta,
                    tau,
                    cluster=self.args.cluster,
                    seed=self.api.seed + i,
                )
                for i in range(self.args.planted)
            ]
            results["planted"] = [
                {
                    "k": exact(check.k),
                    "scaled_derivative": measured(check.scaled_derivative),
                    "lower_bound": envelope(check.lower_bound),
                    "holds": check.holds,
                }
                for check in checks
            ]
            if not all(check.holds for check in checks):
                failures.append("planted zeros missed the lower bound")

        constant = self.api.report.constant("detection_residual")
        results["residuals"] = {}
        for k in self.args.residual_k:
            residual = derivative_residual(chi, k, eta, tau, zeros, constant)
            results["residuals"][str(k)] = {
                "residual": measured(residual.residual),
                "envelope": envelope(residual.envelope),
                "uncertainty": measured(residual.uncertainty),
                "ratio": measured(residual.ratio),
                "within_envelope": residual.within_envelope,
            }

        ratios = []
        results["logderiv"] = {}
        for k in self.args.logderiv_k:
            split = scaled_logderiv(chi, k, eta, tau, K=self.args.K, cap=cap)
            ratios.append(split.outside_ratio)
            results["logderiv"][str(k)] = {
                "value": measured(split.value),
                "series_value": measured(split.series_value),
                "window": measured(split.split.window),
                "outside": measured(split.split.outside),
                "prime_powers": measured(split.split.prime_powers),
                "tail_bound": envelope(split.tail_bound),
                "outside_envelope": envelope(split.outside_envelope),
                "outside_ratio": measured(split.outside_ratio),
                "flags": dict(split.flags),
            }
        results["outside_ratios_decreasing"] = all(
            later <= earlier for earlier, later in zip(ratios, ratios[1:])
        )
        results["residual_constant"] = calibrated(constant)
        results["passed"] = not failures
        emit(self, results, constants=["detection_residual"])
        validate("zero-detection", not failures, "; ".join(failures))

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "--character",
            help='character label "q.index"',
            type=character,
            default="3.1",
        )
        parser.add_argument("--tau", help="height", type=number, default=0)
        parser.add_argument(
            "--eta", help="scale in (0, 1/2]", type=number, default=0.05
        )
        parser.add_argument(
            "--K",
            help="power sum range, 10^5 eta log(qT) when omitted",
            type=integer,
        )
        parser.add_argument(
            "--zeros",
            help="zero list file, scanned when omitted",
            type=FancyPath,
        )
        parser.add_argument(
            "--mean-square-T",
            help="also evaluate the mean square bound over |tau| <= T",
            type=number,
        )
        parser.add_argument(
            "--planted",
            help="number of planted-zero configurations to check",
            type=integer,
            default=0,
        )
        parser.add_argument(
            "--cluster",
            help="zeros per planted configuration",
            type=integer,
            default=5,
        )
        parser.add_argument(
            "--residual-k",
            help="derivative orders compared with nearby zero sums",
            type=integer,
            nargs="*",
            default=[],
        )
        parser.add_argument(
            "--logderiv-k",
            help="orders of the scaled log-derivative split",
            type=integer,
            nargs="*",
            default=[],
        )


class ZerosIdentityCommand(BaseCommand):
    names = ["zeros-identity"]
    help_text = "Compares partial sums over zeros with the explicit formula."
    help_text_extra = (
        "The partial sum must stay below the analytic side and approach it "
        "as the box grows."
    )

    async def run(self) -> None:
        chi = self.args.character
        tolerance = self.api.report.tolerance("identity")
        slack = self.api.report.constant("identity_slack")
        local_slack = self.api.report.constant("local_count_slack")
        heights = sorted(self.args.T)
        zeros = self.api.zeros.scan(chi, heights[-1])

        boxes = {}
        gaps = []
        failures = []
        for height in heights:
            report = zero_sum_identity(
                chi,
                self.args.eta,
                self.args.t,
                zeros.truncated(height),
                slack=slack,
                local_slack=local_slack,
            )
            gaps.append(report.gap)
            if report.partial > report.analytic + tolerance:
                failures.append(f"T={height}: partial sum above analytic")
            if report.partial > report.identity_bound:
                failures.append(f"T={height}: zero sum above its bound")
            if report.local_count > report.local_bound:
                failures.append(f"T={height}: too many nearby zeros")
            boxes[repr(height)] = {
                "partial": measured(report.partial),
                "analytic": measured(report.analytic),
                "gap": measured(report.gap),
                "identity_bound": envelope(report.identity_bound),
                "local_count": measured(report.local_count),
                "local_bound": envelope(report.local_bound),
                "zero_count": measured(report.zero_count),
            }
        monotone = all(
            later <= earlier + tolerance
            for earlier, later in zip(gaps, gaps[1:])
        )
        if not monotone:
            failures.append("gap grows with the box")
        emit(
            self,
            {
                "boxes": boxes,
                "gap_nonincreasing": monotone,
                "passed": not failures,
            },
            constants=["identity_slack", "local_count_slack"],
        )
        validate("zero-sum-identity", not failures, "; ".join(failures))

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "--character",
            help='character label "q.index"',
            type=character,
            default="3.1",
        )
        parser.add_argument("--eta", help="scale", type=number, default=0.5)
        parser.add_argument("--t", help="height", type=number, default=0)
        parser.add_argument(
            "--T",
            help="box heights, at most 60",
            type=number,
            nargs="+",
            default=[10, 30, 50],
        )


class ZerosSubconvexityCommand(BaseCommand):
    names = ["zeros-subconvexity"]
    help_text = "Evaluates the explicit terms bounding log |L(1/2, chi)|."

    async def run(self) -> None:
        report = subconvexity_rhs(
            self.args.character,
            self.args.alpha,
            scanner=self.api.zeros.scanner(),
        )
        emit(
            self,
            {
                "log_conductor": exact(report.log_conductor),
                "zero_count": measured(report.zero_count),
                "conductor_term": envelope(report.conductor_term),
                "zero_term": envelope(report.zero_term),
                "l_term": measured(report.l_term),
                "total": envelope(report.total),
                "notes": list(report.notes),
            },
        )

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "--character",
            help='non-principal character label "q.index"',
            type=character,
            default="5.1",
        )
        parser.add_argument(
            "--alpha", help="parameter in [0, 1/2)", type=number, default=0.4
        )


COMMANDS = [
    ZerosScanCommand,
    ZerosZdeCommand,
    ZerosDetectCommand,
    ZerosIdentityCommand,
    ZerosSubconvexityCommand,
]
