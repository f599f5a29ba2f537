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
    add_coefficient_arguments,
    add_family_arguments,
    emit,
    load_family,
    load_norm_coefficients,
    validate,
)
from autosieve.core.arith import euler_phi
from autosieve.fmt.coeffs import spread_over_ideals
from autosieve.fmt.report import calibrated, envelope, exact, measured
from autosieve.large_sieve_lab import (
    RatioReport,
    dyadic_window_ratio,
    gallagher_check,
    large_sieve_ratio,
    mvt_nominal_parameters,
    mvt_primes_sum,
    prime_window_ratio,
    trivial_mvt_bound,
)
from autosieve.util import integer, number


def ratio_results(report: RatioReport) -> T.Dict[str, T.Any]:
    return {
        "lhs": measured(report.lhs),
        "rhs_envelope": envelope(report.rhs_envelope),
        "log_rhs_envelope": envelope(report.log_rhs_envelope),
        "ratio": measured(report.ratio),
        "family_size": exact(report.family_size),
        "coefficient_mass": measured(report.coefficient_mass),
        "flags": dict(report.flags),
    }


class LargesieveRatioCommand(BaseCommand):
    names = ["largesieve-ratio"]
    help_text = "Measures the large sieve ratio of a family."
    help_text_extra = (
        "For the full character group modulo q and N <= q the orthogonality "
        "identity is checked as well."
    )

    async def run(self) -> None:
        family = load_family(self.args)
        norm_coeffs = {
            norm: value
            for norm, value in load_norm_coefficients(
                self.args, self.args.N, self.api.seed
            ).items()
            if norm <= self.args.N
        }
        report = large_sieve_ratio(
            family,
            spread_over_ideals(norm_coeffs, family.field),
            self.args.N,
            mapper=self.api.threading.map,
        )
        results = ratio_results(report)

        modulus = self.args.characters_mod
        if modulus and self.args.N <= modulus:
            tolerance = self.api.report.tolerance("orthogonality")
            expected = euler_phi(modulus) * math.fsum(
                abs(value) ** 2
                for norm, value in norm_coeffs.items()
                if math.gcd(norm, modulus) == 1
            )
            deviation = abs(report.lhs - expected) / max(expected, 1.0)
            results["orthogonality"] = {
                "expected": exact(expected),
                "relative_deviation": measured(deviation),
            }
            results["passed"] = deviation <= tolerance
            emit(self, results)
            validate(
                "orthogonality",
                deviation <= tolerance,
                f"relative deviation {deviation:.3e}",
            )
            return

        emit(self, results)

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        add_family_arguments(parser)
        add_coefficient_arguments(parser)
        parser.add_argument(
            "--N", help="length of the sum", type=integer, default=100
        )


class LargesievePrimeWindowCommand(BaseCommand):
    names = ["largesieve-prime-window"]
    help_text = "Measures the large sieve over primes in a short window."
    help_text_extra = (
        "The window is (x, x e^(1/T)] with primes above z; the ratio is "
        "recorded next to the calibrated envelope."
    )

    async def run(self) -> None:
        family = load_family(self.args)
        top = math.ceil(self.args.x * math.exp(1 / self.args.T))
        coeffs = spread_over_ideals(
            load_norm_coefficients(self.args, top, self.api.seed),
            family.field,
        )
        report = prime_window_ratio(
            family,
            self.args.x,
            self.args.T,
            self.args.z,
            coeffs,
            mapper=self.api.threading.map,
        )
        constant = self.api.report.constant("prime_window_envelope")
        results = ratio_results(report)
        results["envelope_constant"] = calibrated(constant)
        results["within_calibrated_envelope"] = report.ratio <= constant
        emit(self, results, constants=["prime_window_envelope"])
        validate(
            "prime-window",
            math.isfinite(report.ratio),
            "ratio is not finite",
        )

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        add_family_arguments(parser)
        add_coefficient_arguments(parser)
        parser.add_argument(
            "--x", help="start of the window", type=number, default=1e4
        )
        parser.add_argument(
            "--T", help="inverse width of the window", type=number, default=1
        )
        parser.add_argument(
            "--z", help="sifting level", type=number, default=100
        )


class LargesieveWindowCommand(BaseCommand):
    names = ["largesieve-window"]
    help_text = "Measures the large sieve over one window (x, e x]."

    async def run(self) -> None:
        family = load_family(self.args)
        top = math.ceil(math.e * self.args.x)
        coeffs = spread_over_ideals(
            load_norm_coefficients(self.args, top, self.api.seed),
            family.field,
        )
        report = dyadic_window_ratio(
            family, self.args.x, coeffs, mapper=self.api.threading.map
        )
        emit(self, ratio_results(report))

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        add_family_arguments(parser)
        add_coefficient_arguments(parser)
        parser.add_argument(
            "--x", help="start of the window", type=number, default=100
        )


class LargesieveGallagherCommand(BaseCommand):
    names = ["largesieve-gallagher"]
    help_text = "Compares both sides of Gallagher's mean value lemma."
    help_text_extra = (
        "With --point-mass the ratio must equal 2; otherwise it must stay "
        "below the calibrated envelope."
    )

    async def run(self) -> None:
        if self.args.point_mass:
            coeffs = {self.args.point_mass: 1 + 0j}
        else:
            coeffs = load_norm_coefficients(
                self.args, self.args.N, self.api.seed
            )
        constant = self.api.report.constant("gallagher_envelope")
        tolerance = self.api.report.tolerance("gallagher_point_mass")

        points = {}
        failures = []
        for T_height in sorted(self.args.T):
            lhs, rhs = gallagher_check(coeffs, T_height)
            ratio = lhs / rhs if rhs > 0 else 0.0
            points[repr(T_height)] = {
                "lhs": measured(lhs),
                "rhs": measured(rhs),
                "ratio": measured(ratio),
            }
            if self.args.point_mass:
                if abs(ratio - 2) > tolerance * 2:
                    failures.append(f"T={T_height}: ratio {ratio:.9f} != 2")
            elif ratio > constant:
                failures.append(f"T={T_height}: ratio {ratio:.3f}")

        results: T.Dict[str, T.Any] = {"points": points}
        if self.args.point_mass:
            results["expected_ratio"] = exact(2)
        else:
            results["envelope_constant"] = calibrated(constant)
        results["passed"] = not failures
        emit(self, results, constants=["gallagher_envelope"])
        validate("gallagher", not failures, "; ".join(failures))

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        add_coefficient_arguments(parser)
        parser.add_argument(
            "--N",
            help="support of random coefficients",
            type=integer,
            default=100,
        )
        parser.add_argument(
            "--point-mass",
            help="use a single unit coefficient at this integer",
            type=integer,
        )
        parser.add_argument(
            "--T",
            help="heights",
            type=number,
            nargs="+",
            default=[1, 5, 10],
        )


class LargesieveMvtCommand(BaseCommand):
    names = ["largesieve-mvt"]
    help_text = "Evaluates the prime mean value sum over a family."
    help_text_extra = (
        "The value is recorded against log u and the nominal parameter "
        "ranges are reported in log form."
    )

    async def run(self) -> None:
        family = load_family(self.args)
        value = mvt_primes_sum(
            family,
            self.args.y,
            self.args.u,
            self.args.T,
            mapper=self.api.threading.map,
        )
        log_u = math.log(self.args.u)
        constant = self.api.report.constant("mvt_envelope")
        nominal = mvt_nominal_parameters(
            family, self.args.T, self.args.y, self.args.u
        )
        emit(
            self,
            {
                "value": measured(value),
                "log_u": exact(log_u),
                "value_over_log_u": measured(value / log_u),
                "trivial_bound": envelope(
                    len(family)
                    * trivial_mvt_bound(self.args.y, self.args.u, self.args.T)
                ),
                "envelope_constant": calibrated(constant),
                "within_calibrated_envelope": value / log_u <= constant,
                "nominal": {
                    "log_y": envelope(nominal.log_y),
                    "log_z": envelope(nominal.log_z),
                    "log_u_min": envelope(nominal.log_u_min),
                    "log_u_max": envelope(nominal.log_u_max),
                    "honoured": nominal.honoured,
                },
            },
            constants=["mvt_envelope"],
        )

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        add_family_arguments(parser)
        parser.add_argument(
            "--y", help="lower end of the primes", type=number, default=100
        )
        parser.add_argument(
            "--u", help="upper end of the primes", type=number, default=1e4
        )
        parser.add_argument("--T", help="height", type=number, default=2)


COMMANDS = [
    LargesieveRatioCommand,
    LargesievePrimeWindowCommand,
    LargesieveWindowCommand,
    LargesieveGallagherCommand,
    LargesieveMvtCommand,
]
