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
import itertools
import typing as T

from autosieve.api import Api
from autosieve.api.cmd import BaseCommand, CommandNotFound, make_parser


def group_of(cls: T.Type[BaseCommand]) -> str:
    return cls.names[0].split("-", 1)[0]


def summary_line(cls: T.Type[BaseCommand]) -> str:
    text = cls.help_text[0].lower() + cls.help_text[1:].rstrip(".")
    line = f"  {cls.names[0]}: {text}"
    if len(cls.names) > 1:
        line += f" (also {', '.join(cls.names[1:])})"
    return line


class HelpCommand(BaseCommand):
    names = ["help"]
    help_text = "Lists available commands or describes one of them."
    help_text_extra = (
        'A command may be given as one word or as two, "zeros scan" '
        'and "zeros-scan" are the same.'
    )

    async def run(self) -> None:
        if self.args.cmd:
            self._describe("-".join(self.args.cmd))
        else:
            self._list(self.api.cmd.CORE_COMMAND, "commands")
            if self.api.cmd.get_all(self.api.cmd.USER_COMMAND):
                self._list(self.api.cmd.USER_COMMAND, "user commands")

    def _describe(self, name: str) -> None:
        cls = self.api.cmd.get(name)
        if not cls:
            raise CommandNotFound(f'no command named "{name}"')
        parser = make_parser(cls)
        cls.decorate_parser(self.api, parser)
        for line in summary_line(cls).strip().splitlines():
            self.api.log.info(line)
        if cls.help_text_extra:
            self.api.log.info(cls.help_text_extra)
        self.api.log.info("")
        self.api.log.info(parser.format_help().rstrip())

    def _list(self, identifier: str, title: str) -> None:
        self.api.log.info(f"{title}:")
        classes = sorted(
            self.api.cmd.get_all(identifier), key=lambda cls: cls.names[0]
        )
        for group, members in itertools.groupby(classes, key=group_of):
            self.api.log.info(f"{group}:")
            for cls in members:
                self.api.log.info(summary_line(cls))

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "cmd", help="command to describe", type=str, nargs="*"
        )


COMMANDS = [HelpCommand]
