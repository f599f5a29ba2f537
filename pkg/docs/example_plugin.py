# Example plugin: table of Hecke eigenvalues at small primes
#
# Put this file in ~/.config/autosieve/scripts/ and run
#   autosieve hecke-table --qmax 7 --X 50 --out hecke.json
import argparse
import typing as T

from autosieve.api import Api
from autosieve.api.cmd import BaseCommand
from autosieve.cmd.common import add_family_arguments, emit, load_family
from autosieve.core.ideals import IdealFactorization
from autosieve.fmt.report import exact, measured
from autosieve.schur_rs import hecke_eigenvalue
from autosieve.util import number


class HeckeTableCommand(BaseCommand):
    names = ["hecke-table"]
    help_text = "Tabulates Hecke eigenvalues of a family at small primes."

    async def run(self) -> None:
        family = load_family(self.args)
        rows: T.List[T.Tuple[str, str, float, float]] = []
        largest = 0.0
        for i, rep in enumerate(family):
            label = rep.label or f"#{i}"
            for prime in rep.field.prime_ideals_up_to(self.args.X):
                ideal = IdealFactorization.of_prime(prime)
                if not ideal.coprime_to(rep.conductor):
                    continue
                value = hecke_eigenvalue(rep, ideal)
                largest = max(largest, abs(value))
                rows.append((label, prime.label, value.real, value.imag))

        table = self.api.report.emit_table(
            "hecke", ["member", "prime", "re", "im"], rows
        )
        emit(
            self,
            {
                "rows": exact(len(rows)),
                "largest_modulus": measured(largest),
                "table": str(table) if table else None,
            },
        )

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        add_family_arguments(parser)
        parser.add_argument(
            "--X", help="largest prime norm", type=number, default=50
        )


COMMANDS = [HeckeTableCommand]
