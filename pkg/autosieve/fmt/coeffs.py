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

"""Coefficient CSV reader and writer.

Rows are "norm,re,im". A norm shared by several ideals assigns the same
coefficient to each of them.
"""

import csv
import io
import typing as T
from pathlib import Path

from autosieve.core.ideals import FieldSpec, IdealFactorization, ideals_up_to

Source = T.Union[Path, T.IO[str], str]
HEADER = ["norm", "re", "im"]


def load_norm_coefficients(handle: T.IO[str]) -> T.Dict[int, complex]:
    """Load coefficients keyed by norm.

    :param handle: readable stream
    :return: norm -> coefficient
    """
    ret: T.Dict[int, complex] = {}
    reader = csv.reader(
        line for line in handle if line.strip() and not line.startswith("#")
    )
    for i, row in enumerate(reader):
        if i == 0 and row == HEADER:
            continue
        try:
            norm, real, imag = row
            if int(norm) < 1:
                raise ValueError("norm must be positive")
            ret[int(norm)] = complex(float(real), float(imag))
        except ValueError:
            raise ValueError(
                f'corrupt coefficient file at row #{i + 1}: "{",".join(row)}"'
            )
    return ret


def read_norm_coefficients(source: Source) -> T.Dict[int, complex]:
    """Read coefficients keyed by norm from the specified source.

    :param source: readable stream, path, or CSV text
    :return: norm -> coefficient
    """
    if isinstance(source, str):
        with io.StringIO(source) as handle:
            return load_norm_coefficients(handle)
    if isinstance(source, Path):
        with source.open("r") as handle:
            return load_norm_coefficients(handle)
    return load_norm_coefficients(source)


def spread_over_ideals(
    coeffs: T.Mapping[int, complex], field_spec: T.Optional[FieldSpec] = None
) -> T.Dict[IdealFactorization, complex]:
    """Assign every coefficient to all ideals of its norm.

    :param coeffs: norm -> coefficient
    :param field_spec: base field, Q when omitted
    :return: ideal -> coefficient
    """
    if not coeffs:
        return {}
    field_spec = field_spec or FieldSpec.rationals()
    return {
        ideal: coeffs[ideal.norm]
        for ideal in ideals_up_to(field_spec, max(coeffs))
        if ideal.norm in coeffs
    }


def read_coefficients(
    source: Source, field_spec: T.Optional[FieldSpec] = None
) -> T.Dict[IdealFactorization, complex]:
    """Read coefficients and attach them to ideals.

    :param source: readable stream, path, or CSV text
    :param field_spec: base field, Q when omitted
    :return: ideal -> coefficient
    """
    return spread_over_ideals(read_norm_coefficients(source), field_spec)


def write_norm_coefficients(
    coeffs: T.Mapping[int, complex], handle: T.IO[str]
) -> None:
    """Write coefficients keyed by norm.

    :param coeffs: norm -> coefficient
    :param handle: writable stream
    """
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(HEADER)
    for norm, value in sorted(coeffs.items()):
        value = complex(value)
        writer.writerow([norm, repr(value.real), repr(value.imag)])
