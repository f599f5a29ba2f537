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

"""Family specification JSON reader and writer."""

import io
import json
import typing as T
from pathlib import Path

from autosieve.core.characters import character_by_label
from autosieve.core.ideals import (
    FieldSpec,
    IdealFactorization,
    parse_prime_key,
)
from autosieve.core.rep import AutomorphicRepData, Family, character_rep

Source = T.Union[Path, T.IO[str], str]


def _complex(pair: T.Sequence[float]) -> complex:
    real, imag = pair
    return complex(float(real), float(imag))


def _pair(value: complex) -> T.List[float]:
    return [value.real, value.imag]


def _load_field(data: T.Mapping[str, T.Any]) -> FieldSpec:
    return FieldSpec(
        degree=int(data.get("degree", 1)),
        discriminant_norm=int(data.get("discriminant", 1)),
        real_places=int(data.get("real_places", 1)),
        complex_places=int(data.get("complex_places", 0)),
        splitting={
            int(p): tuple(parse_prime_key(key) for key in keys)
            for p, keys in data.get("splitting", {}).items()
        },
    )


def _load_rep(
    data: T.Mapping[str, T.Any], field_spec: FieldSpec
) -> AutomorphicRepData:
    if "character" in data:
        return character_rep(character_by_label(data["character"]))
    return AutomorphicRepData(
        n=int(data["n"]),
        field=field_spec,
        conductor=IdealFactorization(
            tuple(
                (parse_prime_key(key), int(exponent))
                for key, exponent in data.get("conductor", {}).items()
            )
        ),
        satake={
            parse_prime_key(key): tuple(_complex(pair) for pair in pairs)
            for key, pairs in data.get("satake", {}).items()
        },
        arch=tuple(
            tuple(_complex(pair) for pair in place)
            for place in data.get("arch", [])
        ),
        pole_order=int(data.get("pole_order", 0)),
        theta=data.get("theta"),
        label=str(data.get("label", "")),
    )


def load_family(handle: T.IO[str]) -> Family:
    """Load a family from a JSON stream.

    :param handle: readable stream
    :return: family
    """
    try:
        data = json.load(handle)
    except json.JSONDecodeError as ex:
        raise ValueError(f"corrupt family file: {ex}") from ex
    field_spec = _load_field(data.get("field", {}))
    members = []
    for i, item in enumerate(data.get("reps", [])):
        try:
            members.append(_load_rep(item, field_spec))
        except (KeyError, TypeError, ValueError) as ex:
            raise ValueError(
                f"corrupt family file at member #{i + 1}: {ex}"
            ) from ex
    if data.get("Q") is not None:
        return Family(members=tuple(members), Q=float(data["Q"]))
    return Family.of(members)


def read_family(source: Source) -> Family:
    """Read a family from the specified source.

    :param source: readable stream, path, or JSON text
    :return: family
    """
    if isinstance(source, str):
        with io.StringIO(source) as handle:
            return load_family(handle)
    if isinstance(source, Path):
        with source.open("r") as handle:
            return load_family(handle)
    return load_family(source)


def _dump_rep(rep: AutomorphicRepData) -> T.Dict[str, T.Any]:
    if rep.character is not None:
        return {"character": rep.character.label, "label": rep.label}
    return {
        "n": rep.n,
        "conductor": {
            prime.label: exponent for prime, exponent in rep.conductor.factors
        },
        "satake": {
            prime.label: [_pair(alpha) for alpha in alphas]
            for prime, alphas in sorted(rep.satake.items())
        },
        "arch": [[_pair(mu) for mu in place] for place in rep.arch],
        "pole_order": rep.pole_order,
        "theta": rep.theta,
        "label": rep.label,
    }


def dump_family(family: Family) -> T.Dict[str, T.Any]:
    """Convert a family to its JSON structure.

    :param family: family
    :return: JSON-ready dictionary
    """
    field_spec = family.field
    return {
        "field": {
            "degree": field_spec.degree,
            "discriminant": field_spec.discriminant_norm,
            "real_places": field_spec.real_places,
            "complex_places": field_spec.complex_places,
            "splitting": {
                str(p): [prime.label for prime in primes]
                for p, primes in sorted(field_spec.splitting.items())
            },
        },
        "Q": family.Q,
        "reps": [_dump_rep(rep) for rep in family],
    }


def write_family(family: Family, handle: T.IO[str]) -> None:
    """Write a family as JSON.

    :param family: family to write
    :param handle: writable stream
    """
    json.dump(dump_family(family), handle, indent=4, sort_keys=True)
    handle.write("\n")
