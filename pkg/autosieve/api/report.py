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

"""Report API.

Collects what a command measured, tags it with the resolved configuration
and the calibrated constants it relied on, and writes it out.
"""

import sys
import typing as T
from pathlib import Path

from autosieve.api.log import LogApi
from autosieve.cfg import Config
from autosieve.fmt.report import Report, write_report, write_table


class ReportApi:
    """The report API."""

    def __init__(
        self,
        cfg: Config,
        log_api: LogApi,
        out: T.Optional[Path] = None,
        stream: T.Optional[T.IO[str]] = None,
    ) -> None:
        """Initialize self.

        :param cfg: program configuration
        :param log_api: logging API
        :param out: report path, stdout when omitted
        :param stream: stream used instead of stdout
        """
        self._cfg = cfg
        self._log_api = log_api
        self.out = out
        self._stream = stream
        self.generated_at: T.Optional[str] = None
        self.last: T.Optional[Report] = None

    def tolerance(self, name: str) -> float:
        """Return a configured tolerance.

        :param name: entry of the tolerances section
        :return: tolerance value
        """
        return float(self._cfg.opt["tolerances"][name])

    def constant(self, name: str) -> float:
        """Return a calibrated constant.

        :param name: entry of the calibrated section
        :return: constant value
        """
        return float(self._cfg.opt["calibrated"][name])

    def emit(
        self,
        command: str,
        config: T.Dict[str, T.Any],
        results: T.Dict[str, T.Any],
        constants: T.Iterable[str] = (),
    ) -> Report:
        """Write a report to the output path or stdout.

        :param command: command name
        :param config: resolved arguments
        :param results: results made of labelled quantities
        :param constants: names of the calibrated constants used
        :return: the written report
        """
        report = Report(
            command=command,
            config={
                **config,
                "tolerances": dict(self._cfg.opt["tolerances"]),
            },
            constants={name: self.constant(name) for name in constants},
            results=results,
        )
        if self.out:
            self.out.parent.mkdir(parents=True, exist_ok=True)
            with self.out.open("w") as handle:
                write_report(report, handle, self.generated_at)
            self._log_api.info(f"report written to {self.out}")
        else:
            write_report(report, self._stream or sys.stdout, self.generated_at)
        self.last = report
        return report

    def emit_table(
        self,
        name: str,
        header: T.Sequence[str],
        rows: T.Iterable[T.Sequence[T.Any]],
    ) -> T.Optional[Path]:
        """Write a CSV table next to the report.

        Tables are only written when the report goes to a file.

        :param name: table name, used as file name suffix
        :param header: column names
        :param rows: table rows
        :return: path of the table, None when skipped
        """
        if not self.out:
            self._log_api.debug(f"table {name} skipped, no --out given")
            return None
        path = self.out.with_name(f"{self.out.stem}.{name}.csv")
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w") as handle:
            write_table(header, rows, handle)
        self._log_api.info(f"table written to {path}")
        return path
