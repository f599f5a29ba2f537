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

"""Tests for autosieve.api.api module."""

import typing as T

import pytest

from autosieve.api import Api
from autosieve.api.api import THREADS_ENV, parse_tolerance, resolve_threads
from autosieve.cfg import Config, ConfigError

from ..common import make_args


@pytest.mark.parametrize(
    "text,expected",
    [("cauchy=1e-6", ("cauchy", 1e-6)), (" identity = 2", ("identity", 2))],
)
def test_parse_tolerance(text: str, expected: T.Tuple[str, float]) -> None:
    """Test parsing of tolerance overrides.

    :param text: override
    :param expected: name and value
    """
    assert parse_tolerance(text) == expected


@pytest.mark.parametrize("text", ["cauchy", "=1", "cauchy=abc"])
def test_parse_bad_tolerance(text: str) -> None:
    """Test that malformed overrides are refused.

    :param text: override
    """
    with pytest.raises(ConfigError):
        parse_tolerance(text)


def test_resolve_threads(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test the flag, environment, config order.

    :param monkeypatch: monkeypatch fixture
    """
    cfg = Config()
    monkeypatch.delenv(THREADS_ENV, raising=False)
    assert resolve_threads(make_args(threads=3), cfg) == 3
    assert resolve_threads(make_args(threads=None), cfg) == 4
    monkeypatch.setenv(THREADS_ENV, "2")
    assert resolve_threads(make_args(threads=None), cfg) == 2
    assert resolve_threads(make_args(threads=5), cfg) == 5


@pytest.mark.parametrize("threads", [0, "many"])
def test_resolve_bad_threads(threads: T.Any) -> None:
    """Test that unusable worker counts are refused.

    :param threads: worker count
    """
    with pytest.raises(ConfigError):
        resolve_threads(make_args(threads=threads), Config())


def test_api_applies_overrides() -> None:
    """Test that tolerance overrides reach the report API."""
    api = Api(make_args(tolerance=["cauchy=0.25"], seed=7))
    try:
        assert api.report.tolerance("cauchy") == 0.25
        assert api.report.tolerance("gram") == pytest.approx(1e-9)
        assert api.seed == 7
        assert api.threading.max_workers == 1
        assert not api.zeros.use_cache
    finally:
        api.shutdown()


def test_api_rejects_unknown_tolerance() -> None:
    """Test that unknown tolerance names are refused."""
    with pytest.raises(ConfigError):
        Api(make_args(tolerance=["bogus=1"]))
