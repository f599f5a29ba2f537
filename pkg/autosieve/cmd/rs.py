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
from autosieve.api.cmd import BaseCommand, CommandUnavailable
from autosieve.cmd.common import (
    add_family_arguments,
    emit,
    family_given,
    load_family,
    validate,
)
from autosieve.core.ideals import (
    IdealFactorization,
    PrimeIdeal,
    parse_prime_key,
)
from autosieve.core.rep import AutomorphicRepData
from autosieve.core.sampling import make_rng, random_unitary
from autosieve.fmt.report import exact, measured
from autosieve.schur_rs import (
    check_unramified,
    rs_coefficient_ideal,
    rs_local_series,
    schur_partition_sum,
)
from autosieve.util import integer


def prime_key(text: str) -> PrimeIdeal:
    return parse_prime_key(text)


class RsExpandCommand(BaseCommand):
    names = ["rs-expand"]
    help_text = "Expands a Rankin-Selberg local factor into coefficients."
    help_text_extra = (
        "Without a family two sets of random unitary parameters are used; "
        "every coefficient is compared with its Schur partition sum."
    )

    async def run(self) -> None:
        if family_given(self.args):
            A, B, partition_sums = self._from_family()
        else:
            rng = make_rng(self.api.seed)
            A = tuple(complex(a) for a in random_unitary(rng, self.args.n))
            B = tuple(
                complex(b) for b in random_unitary(rng, self.args.nprime)
            )
            partition_sums = [
                schur_partition_sum(A, B, k)
                for k in range(self.args.degree + 1)
            ]

        tolerance = self.api.report.tolerance("cauchy")
        series = rs_local_series(A, B, self.args.degree)
        deviation = series.max_deviation(partition_sums)
        rows = [
            (k, float(value.real), float(value.imag))
            for k, value in enumerate(series.as_array())
        ]
        table = self.api.report.emit_table(
            "coefficients", ["k", "re", "im"], rows
        )
        emit(
            self,
            {
                "coefficients": measured(
                    [complex(value) for value in series.as_array()]
                ),
                "max_deviation": measured(deviation),
                "table": str(table) if table else None,
                "passed": deviation <= tolerance,
            },
        )
        validate(
            "cauchy",
            deviation <= tolerance,
            f"deviation {deviation:.3e} > {tolerance:.1e}",
        )

    def _from_family(
        self,
    ) -> T.Tuple[T.Sequence[complex], T.Sequence[complex], T.List[complex]]:
        if self.args.prime is None:
            raise CommandUnavailable("--prime is required with a family")
        members = list(load_family(self.args))
        first, second = self.args.members
        if not 0 <= first < len(members) or not 0 <= second < len(members):
            raise CommandUnavailable(
                f"family has {len(members)} members, "
                f"no member {max(first, second)}"
            )
        repA: AutomorphicRepData = members[first]
        repB: AutomorphicRepData = members[second]
        if self.args.dual:
            repB = repB.contragredient()
        prime = self.args.prime
        check_unramified(IdealFactorization.of_prime(prime), repA, repB)
        partition_sums = [1 + 0j] + [
            rs_coefficient_ideal(
                repA, repB, IdealFactorization.of_prime(prime, k)
            )
            for k in range(1, self.args.degree + 1)
        ]
        return repA.satake_at(prime), repB.satake_at(prime), partition_sums

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        add_family_arguments(parser, required=False)
        parser.add_argument(
            "--members",
            help="indices of the two family members",
            type=integer,
            nargs=2,
            default=[0, 0],
        )
        parser.add_argument(
            "--dual",
            help="pair with the contragredient of the second member",
            action="store_true",
        )
        parser.add_argument(
            "--prime",
            help='prime ideal key such as "7" or "5^1#1"',
            type=prime_key,
        )
        parser.add_argument(
            "--n",
            help="size of the first random set",
            type=integer,
            default=2,
        )
        parser.add_argument(
            "--nprime",
            help="size of the second random set",
            type=integer,
            default=2,
        )
        parser.add_argument(
            "--degree", help="highest coefficient", type=integer, default=6
        )


COMMANDS = [RsExpandCommand]
