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

"""Report JSON and CSV writers.

Every number in a report's results is a labelled quantity carrying its
provenance, one of "measured", "envelope", "calibrated-constant" or
"exact". Only the generated_at field changes between identical runs.
"""

import csv
import json
import math
import subprocess
import typing as T
from datetime import datetime
from pathlib import Path

import numpy as np
from dataclasses import dataclass, field

SCHEMA_VERSION = 1
PROVENANCES = ("measured", "envelope", "calibrated-constant", "exact")
NUMBER_TYPES = (
    int,
    float,
    complex,
    np.integer,
    np.floating,
    np.complexfloating,
)


@dataclass(frozen=True)
class Quantity:
    """Number tagged with where it comes from."""

    value: T.Any
    provenance: str

    def __post_init__(self) -> None:
        """Validate the provenance."""
        if self.provenance not in PROVENANCES:
            raise ValueError(f'unknown provenance "{self.provenance}"')


def measured(value: T.Any) -> Quantity:
    """Tag a computed value.

    :param value: number
    :return: quantity
    """
    return Quantity(value, "measured")


def envelope(value: T.Any) -> Quantity:
    """Tag a theorem-shaped bound.

    :param value: number
    :return: quantity
    """
    return Quantity(value, "envelope")


def calibrated(value: T.Any) -> Quantity:
    """Tag a repository-calibrated constant.

    :param value: number
    :return: quantity
    """
    return Quantity(value, "calibrated-constant")


def exact(value: T.Any) -> Quantity:
    """Tag an exactly known value.

    :param value: number
    :return: quantity
    """
    return Quantity(value, "exact")


def _number(value: T.Any) -> T.Any:
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return [_number(value.real), _number(value.imag)]
    value = float(value)
    if not math.isfinite(value):
        return str(value)
    return value


def _is_number(value: T.Any) -> bool:
    return isinstance(value, NUMBER_TYPES) and not isinstance(
        value, (bool, np.bool_)
    )


def encode_results(value: T.Any, path: str = "results") -> T.Any:
    """Convert results to JSON, insisting that numbers are labelled.

    :param value: nested dicts, lists, strings, booleans and quantities
    :param path: location used in error messages
    :return: JSON-ready structure
    """
    if isinstance(value, Quantity):
        inner = value.value
        if isinstance(inner, (list, tuple, np.ndarray)):
            encoded: T.Any = [_number(item) for item in inner]
        elif inner is None:
            encoded = None
        else:
            encoded = _number(inner)
        return {"value": encoded, "provenance": value.provenance}
    if isinstance(value, dict):
        return {
            str(key): encode_results(item, f"{path}.{key}")
            for key, item in value.items()
        }
    if isinstance(value, (list, tuple)):
        return [
            encode_results(item, f"{path}[{i}]")
            for i, item in enumerate(value)
        ]
    if _is_number(value):
        raise ValueError(f"number without provenance at {path}")
    if value is None or isinstance(value, (str, bool, np.bool_)):
        return bool(value) if isinstance(value, np.bool_) else value
    raise ValueError(f"cannot encode {type(value).__name__} at {path}")


def _plain(value: T.Any) -> T.Any:
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if isinstance(value, Path):
        return str(value)
    if _is_number(value) or isinstance(value, (bool, np.bool_)):
        return _number(value)
    if value is None or isinstance(value, str):
        return value
    return str(value)


def build_description() -> str:
    """Return the git description of the source tree.

    :return: output of git describe, or "unknown" outside a checkout
    """
    try:
        result = subprocess.run(
            ["git", "describe", "--always", "--dirty"],
            cwd=Path(__file__).parent,
            capture_output=True,
            text=True,
            check=True,
        )
    except (OSError, subprocess.CalledProcessError):
        return "unknown"
    return result.stdout.strip() or "unknown"


@dataclass
class Report:
    """Result of one command run."""

    command: str
    config: T.Dict[str, T.Any] = field(default_factory=dict)
    constants: T.Dict[str, T.Any] = field(default_factory=dict)
    results: T.Dict[str, T.Any] = field(default_factory=dict)
    build: str = field(default_factory=build_description)

    def to_json(self, generated_at: T.Optional[str] = None) -> str:
        """Serialize the report.

        :param generated_at: timestamp, now when omitted
        :return: JSON text ending with a newline
        """
        data = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "config": _plain(self.config),
            "constants": {
                key: encode_results(calibrated(value), f"constants.{key}")
                for key, value in self.constants.items()
            },
            "build": self.build,
            "results": encode_results(self.results),
            "generated_at": generated_at or datetime.now().isoformat(),
        }
        return json.dumps(data, indent=4, sort_keys=True) + "\n"


def write_report(
    report: Report, handle: T.IO[str], generated_at: T.Optional[str] = None
) -> None:
    """Write a report as JSON.

    :param report: report to write
    :param handle: writable stream
    :param generated_at: timestamp, now when omitted
    """
    handle.write(report.to_json(generated_at))


def write_table(
    header: T.Sequence[str],
    rows: T.Iterable[T.Sequence[T.Any]],
    handle: T.IO[str],
) -> None:
    """Write a CSV table headed by the schema version.

    :param header: column names
    :param rows: rows of plain values
    :param handle: writable stream
    """
    print(f"# schema_version: {SCHEMA_VERSION}", file=handle)
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_plain(item) for item in row])
