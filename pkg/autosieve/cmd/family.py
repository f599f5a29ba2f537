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
from autosieve.cmd.common import (
    FancyPath,
    add_family_arguments,
    emit,
    load_family,
)
from autosieve.core.rep import analytic_conductor, default_theta
from autosieve.fmt.family import read_family, write_family
from autosieve.fmt.report import exact
from autosieve.large_sieve_lab import sample_unitary_family
from autosieve.util import integer, number


class FamilySampleCommand(BaseCommand):
    names = ["family-sample"]
    help_text = "Draws a family with random Satake parameters."
    help_text_extra = (
        "The family is seeded by the global seed and saved in the family "
        "file format."
    )

    async def run(self) -> None:
        field_spec = None
        if self.args.field_of:
            field_spec = read_family(self.args.field_of.get_load_path()).field
        theta = (
            default_theta(self.args.n)
            if self.args.theta is None
            else self.args.theta
        )
        family = sample_unitary_family(
            self.args.n,
            self.args.count,
            field_spec=field_spec,
            primes_up_to_norm=self.args.primes_up_to,
            seed=self.api.seed,
            theta=theta,
        )
        path = self.args.output.get_save_path()
        with path.open("w") as handle:
            write_family(family, handle)
        self.api.log.info(f"saved {len(family)} members to {path}")
        emit(
            self,
            {
                "family_size": exact(len(family)),
                "degree": exact(family.degree),
                "field_degree": exact(family.field.degree),
                "theta": exact(theta),
                "output": str(path),
            },
        )

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "--output",
            help="family file to write",
            type=FancyPath,
            required=True,
        )
        parser.add_argument("--n", help="degree", type=integer, default=2)
        parser.add_argument(
            "--count", help="number of members", type=integer, default=10
        )
        parser.add_argument(
            "--primes-up-to",
            help="largest prime norm carrying Satake parameters",
            type=integer,
            default=100,
        )
        parser.add_argument(
            "--theta",
            help="Ramanujan margin, the best known bound when omitted",
            type=number,
        )
        parser.add_argument(
            "--field-of",
            help="family file whose base field to use, Q when omitted",
            type=FancyPath,
        )


class FamilyShowCommand(BaseCommand):
    names = ["family-show", "family-characters"]
    help_text = "Lists the members of a family with their conductors."
    help_text_extra = (
        "Character families may be saved in the family file format."
    )

    async def run(self) -> None:
        family = load_family(self.args)
        rows = [
            (member.label or f"#{i}", member.n, analytic_conductor(member))
            for i, member in enumerate(family)
        ]
        if self.args.output:
            path = self.args.output.get_save_path()
            with path.open("w") as handle:
                write_family(family, handle)
            self.api.log.info(f"saved {len(family)} members to {path}")
        table = self.api.report.emit_table(
            "members", ["label", "degree", "analytic_conductor"], rows
        )
        emit(
            self,
            {
                "family_size": exact(len(family)),
                "degree": exact(family.degree),
                "members": {
                    label: exact(conductor) for label, _n, conductor in rows
                },
                "max_analytic_conductor": exact(
                    max((row[2] for row in rows), default=0.0)
                ),
                "table": str(table) if table else None,
                "output": str(self.args.output) if self.args.output else None,
            },
        )

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        add_family_arguments(parser)
        parser.add_argument(
            "--output", help="family file to write", type=FancyPath
        )


COMMANDS = [FamilySampleCommand, FamilyShowCommand]
