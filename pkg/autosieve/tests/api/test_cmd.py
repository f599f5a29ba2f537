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

"""Tests for autosieve.api.cmd module."""

import argparse
import asyncio
import json
import typing as T

import pytest

from autosieve.api import Api
from autosieve.api.cmd import (
    EXIT_ERROR,
    EXIT_OK,
    EXIT_VALIDATION_FAILED,
    BadInvocation,
    BaseCommand,
    CommandNotFound,
    CommandUnavailable,
    ValidationFailed,
)
from autosieve.tests.common import api  # pylint: disable=unused-import


class _PassingCommand(BaseCommand):
    names = ["test-pass", "test-ok"]
    help_text = "Does nothing."

    async def run(self) -> None:
        """Do nothing."""

    @staticmethod
    def decorate_parser(api: Api, parser: argparse.ArgumentParser) -> None:
        """Add a required switch.

        :param api: core API
        :param parser: parser to configure
        """
        parser.add_argument("--N", help="length", type=int, required=True)


class _FailingCheckCommand(BaseCommand):
    names = ["test-check"]
    help_text = "Fails a check."

    async def run(self) -> None:
        """Fail the check."""
        raise ValidationFailed("bound", "3 > 2")


class _UnavailableCommand(BaseCommand):
    names = ["test-unavailable"]
    help_text = "Lacks its inputs."

    async def run(self) -> None:
        """Give up for lack of inputs."""
        raise CommandUnavailable("no characters")


class _CrashingCommand(BaseCommand):
    names = ["test-crash"]
    help_text = "Divides by zero."

    async def run(self) -> None:
        """Divide by zero."""
        print(1 / 0)


def _records(err: str) -> T.List[T.Dict[str, T.Any]]:
    return [json.loads(line) for line in err.splitlines() if line[:1] == "{"]


@pytest.fixture(name="test_api")
def fixture_test_api(  # pylint: disable=redefined-outer-name
    api: Api,
) -> Api:
    """Return core API with the test commands registered.

    :param api: core API
    :return: core API
    """
    for cls in (
        _PassingCommand,
        _FailingCheckCommand,
        _UnavailableCommand,
        _CrashingCommand,
    ):
        api.cmd.register(cls)
    return api


def test_parse_invocation(test_api: Api) -> None:
    """Test that names and aliases resolve and switches are parsed.

    :param test_api: core API with test commands
    """
    cmd = test_api.cmd.parse_invocation(["test-ok", "--N", "5"])
    assert isinstance(cmd, _PassingCommand)
    assert cmd.args.N == 5
    assert cmd.invocation == "test-ok --N 5"
    assert test_api.cmd.get("test-pass") is _PassingCommand


@pytest.mark.parametrize("invocation", [[], ["test-nothing"]])
def test_parse_unknown_command(
    test_api: Api, invocation: T.List[str]
) -> None:
    """Test that missing or unknown commands are rejected.

    :param test_api: core API with test commands
    :param invocation: command words
    """
    with pytest.raises(CommandNotFound):
        test_api.cmd.parse_invocation(invocation)


@pytest.mark.parametrize(
    "invocation",
    [["test-pass"], ["test-pass", "--N", "x"], ["test-pass", "--n", "1"]],
)
def test_parse_bad_switches(test_api: Api, invocation: T.List[str]) -> None:
    """Test that bad switches raise instead of exiting.

    :param test_api: core API with test commands
    :param invocation: command words
    """
    with pytest.raises(BadInvocation) as info:
        test_api.cmd.parse_invocation(invocation)
    assert "test-pass: error:" in str(info.value)


@pytest.mark.parametrize(
    "invocation,status,error",
    [
        (["test-pass", "--N", "1"], EXIT_OK, None),
        (["test-check"], EXIT_VALIDATION_FAILED, "validation_failed"),
        (["test-unavailable"], EXIT_ERROR, "command_error"),
        (["test-crash"], EXIT_ERROR, "ZeroDivisionError"),
    ],
)
def test_exit_status(
    test_api: Api,
    capsys: pytest.CaptureFixture,
    invocation: T.List[str],
    status: int,
    error: T.Optional[str],
) -> None:
    """Test the exit status and the error record of each outcome.

    :param test_api: core API with test commands
    :param capsys: output capture fixture
    :param invocation: command words
    :param status: expected exit status
    :param error: expected error kind, None when nothing should fail
    """
    cmd = test_api.cmd.parse_invocation(invocation)
    assert asyncio.run(test_api.cmd.run_async(cmd)) == status
    records = _records(capsys.readouterr().err)
    if error is None:
        assert not records
    else:
        assert [record["error"] for record in records] == [error]
        assert records[0]["command"] == invocation[0]


def test_validation_record(
    test_api: Api, capsys: pytest.CaptureFixture
) -> None:
    """Test that failed checks name the check.

    :param test_api: core API with test commands
    :param capsys: output capture fixture
    """
    cmd = test_api.cmd.parse_invocation(["test-check"])
    asyncio.run(test_api.cmd.run_async(cmd))
    (record,) = _records(capsys.readouterr().err)
    assert record["check"] == "bound"
    assert record["message"] == "bound failed: 3 > 2"
