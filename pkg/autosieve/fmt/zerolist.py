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

"""Zero list JSON reader and writer."""

import io
import json
import typing as T
from pathlib import Path

from autosieve.zero_lab.zeros import ZeroList

Source = T.Union[Path, T.IO[str], str]


def dump_zero_list(zeros: ZeroList) -> T.Dict[str, T.Any]:
    """Convert a zero list to its JSON structure.

    :param zeros: zero list
    :return: JSON-ready dictionary
    """
    return {
        "q": zeros.q,
        "index": zeros.index,
        "box": [zeros.sigma_min, zeros.T],
        "provenance": zeros.provenance,
        "zeros": [[rho.real, rho.imag] for rho in zeros],
    }


def load_zero_list(handle: T.IO[str]) -> ZeroList:
    """Load a zero list from a JSON stream.

    :param handle: readable stream
    :return: zero list
    """
    try:
        data = json.load(handle)
        sigma_min, height = data["box"]
        return ZeroList(
            zeros=tuple(complex(beta, gamma) for beta, gamma in data["zeros"]),
            sigma_min=float(sigma_min),
            T=float(height),
            provenance=data.get("provenance", "scanned"),
            q=int(data.get("q", 1)),
            index=int(data.get("index", 0)),
        )
    except (KeyError, TypeError, ValueError) as ex:
        raise ValueError(f"corrupt zero list: {ex}") from ex


def read_zero_list(source: Source) -> ZeroList:
    """Read a zero list from the specified source.

    :param source: readable stream, path, or JSON text
    :return: zero list
    """
    if isinstance(source, str):
        with io.StringIO(source) as handle:
            return load_zero_list(handle)
    if isinstance(source, Path):
        with source.open("r") as handle:
            return load_zero_list(handle)
    return load_zero_list(source)


def write_zero_list(zeros: ZeroList, handle: T.IO[str]) -> None:
    """Write a zero list as JSON.

    :param zeros: zero list
    :param handle: writable stream
    """
    json.dump(dump_zero_list(zeros), handle, indent=4, sort_keys=True)
    handle.write("\n")
