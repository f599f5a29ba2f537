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

"""Report helpers shared between commands."""

import typing as T

from autosieve.api.cmd import BaseCommand, ValidationFailed
from autosieve.fmt.report import Report


def emit(
    cmd: BaseCommand,
    results: T.Dict[str, T.Any],
    constants: T.Iterable[str] = (),
) -> Report:
    config = {
        key: value
        for key, value in sorted(vars(cmd.args).items())
        if not key.startswith("_")
    }
    config["seed"] = cmd.api.seed
    return cmd.api.report.emit(
        cmd.names[0], config, results, constants=sorted(set(constants))
    )


def validate(check: str, passed: bool, detail: str) -> None:
    if not passed:
        raise ValidationFailed(check, detail)
