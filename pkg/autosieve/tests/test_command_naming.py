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

"""Tests for autosieve command naming."""

import re
import typing as T

import pytest

from autosieve.api import Api
from autosieve.api.cmd import BaseCommand
from autosieve.tests.common import api  # pylint: disable=unused-import

GROUPS = {
    "family",
    "help",
    "largesieve",
    "rs",
    "sieve",
    "verify",
    "zeros",
}


def command_name_of_class(name: str) -> str:
    """Turn a command class name into the command name it should define.

    :param name: class name such as "ZerosScanCommand"
    :return: kebab-case name such as "zeros-scan"
    """
    stem = re.sub("Command$", "", name)
    return re.sub(r"(?<!^)(?=[A-Z])", "-", stem).lower()


@pytest.mark.parametrize(
    "cls_name,cmd_name",
    [
        ("HelpCommand", "help"),
        ("ZerosScanCommand", "zeros-scan"),
        ("SievePartialLowerCommand", "sieve-partial-lower"),
        ("VerifyHseriesCommand", "verify-hseries"),
    ],
)
def test_command_name_of_class(cls_name: str, cmd_name: str) -> None:
    """Test the class name convention itself.

    :param cls_name: class name
    :param cmd_name: expected command name
    """
    assert command_name_of_class(cls_name) == cmd_name


def core_commands(core_api: Api) -> T.List[T.Type[BaseCommand]]:
    """Load and return the core commands.

    :param core_api: core API
    :return: command classes sorted by name
    """
    core_api.cmd.reload_commands()
    return sorted(
        core_api.cmd.get_all(core_api.cmd.CORE_COMMAND),
        key=lambda cls: cls.names[0],
    )


def test_command_naming(  # pylint: disable=redefined-outer-name
    api: Api,
) -> None:
    """Checks class names against the command names they define.

    :param api: core API
    """
    commands = core_commands(api)
    assert len(commands) >= 20
    for cls in commands:
        assert command_name_of_class(cls.__name__) == cls.names[0], cls


def test_command_groups(  # pylint: disable=redefined-outer-name
    api: Api,
) -> None:
    """Checks that every name and alias stays inside its command group.

    :param api: core API
    """
    seen: T.Set[str] = set()
    for cls in core_commands(api):
        assert isinstance(cls.names, list)
        group = cls.names[0].split("-", 1)[0]
        assert group in GROUPS, cls
        for name in cls.names:
            assert name not in seen, name
            assert name == group or name.startswith(f"{group}-"), name
            assert re.match("^[a-z0-9-]+$", name), name
            seen.add(name)
