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

"""Families, characters and coefficients given on the command line."""

import argparse
import typing as T

from autosieve.api.cmd import CommandUnavailable
from autosieve.core.characters import (
    DirichletCharacter,
    character_by_label,
    characters_mod,
    primitive_characters,
)
from autosieve.core.ideals import IdealFactorization
from autosieve.core.rep import Family, character_family, character_rep
from autosieve.core.sampling import make_rng
from autosieve.fmt.coeffs import read_norm_coefficients, spread_over_ideals
from autosieve.fmt.family import read_family
from autosieve.util import integer, number

from .path import FancyPath


def character(text: str) -> DirichletCharacter:
    return character_by_label(text)


def add_family_arguments(
    parser: argparse.ArgumentParser, required: bool = True
) -> None:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument(
        "--family", help="family spec file (JSON)", type=FancyPath
    )
    group.add_argument(
        "--characters-mod",
        help="all Dirichlet characters to this modulus",
        type=integer,
    )
    group.add_argument(
        "--qmax", help="primitive characters up to this modulus", type=integer
    )
    group.add_argument(
        "--Qmax",
        help="primitive characters up to this analytic conductor",
        type=number,
    )


def family_given(args: argparse.Namespace) -> bool:
    return any(
        getattr(args, key) is not None
        for key in ("family", "characters_mod", "qmax", "Qmax")
    )


def load_family(args: argparse.Namespace) -> Family:
    if args.family:
        return read_family(args.family.get_load_path())
    if args.characters_mod:
        return Family.of(
            character_rep(chi, primitive=False)
            for chi in characters_mod(args.characters_mod)
        )
    if args.qmax:
        return character_family(q_max=args.qmax)
    return character_family(Q=args.Qmax)


def add_character_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--character", help='character label "q.index"', type=character
    )
    group.add_argument(
        "--q", help="every primitive character to this modulus", type=integer
    )


def load_characters(args: argparse.Namespace) -> T.List[DirichletCharacter]:
    if args.character:
        return [args.character]
    ret = primitive_characters(args.q)
    if not ret:
        raise CommandUnavailable(f"no primitive characters modulo {args.q}")
    return ret


def random_norm_coefficients(N: int, seed: int) -> T.Dict[int, complex]:
    rng = make_rng(seed)
    values = rng.standard_normal(N) + 1j * rng.standard_normal(N)
    return {norm: complex(value) for norm, value in enumerate(values, 1)}


def add_coefficient_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--coeffs",
        help="coefficient file (CSV norm,re,im), random when omitted",
        type=FancyPath,
    )


def load_norm_coefficients(
    args: argparse.Namespace, N: int, seed: int
) -> T.Dict[int, complex]:
    if args.coeffs:
        return read_norm_coefficients(args.coeffs.get_load_path())
    return random_norm_coefficients(N, seed)


def load_coefficients(
    args: argparse.Namespace, family: Family, N: int, seed: int
) -> T.Dict[IdealFactorization, complex]:
    return spread_over_ideals(
        load_norm_coefficients(args, N, seed), family.field
    )
