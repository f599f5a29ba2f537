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

"""Tests for autosieve.cfg.options module."""

from pathlib import Path

import pytest

from autosieve.cfg import Config, ConfigError
from autosieve.cfg.options import OptionsConfig
from autosieve.tests.common import (
    APP_ROOT_DIR,
    TESTS_ROOT_DIR,
    collect_source_files,
)


def test_defaults() -> None:
    """Test that the built-in options are loaded."""
    opt = OptionsConfig()
    assert opt["tolerances"]["cauchy"] == pytest.approx(1e-9)
    assert opt["calibrated"]["chebyshev_psi"] == pytest.approx(1.03883)
    assert opt["basic"]["threads"] == 4
    assert "zeros" in opt
    assert opt.get("missing", 5) == 5


def test_user_overrides(tmp_path: Path) -> None:
    """Test that a user file overrides single keys only.

    :param tmp_path: temporary directory
    """
    (tmp_path / "options.yaml").write_text(
        "tolerances:\n    cauchy: 1.0e-6\nbasic:\n    threads: 2\n"
    )
    opt = OptionsConfig()
    opt.load(tmp_path)
    assert opt["tolerances"]["cauchy"] == pytest.approx(1e-6)
    assert opt["tolerances"]["gram"] == pytest.approx(1e-9)
    assert opt["basic"]["threads"] == 2

    opt.load(None)
    assert opt["tolerances"]["cauchy"] == pytest.approx(1e-9)


def test_missing_user_file(tmp_path: Path) -> None:
    """Test that a missing user file leaves the defaults.

    :param tmp_path: temporary directory
    """
    opt = OptionsConfig()
    opt.load(tmp_path)
    assert opt["tolerances"]["cauchy"] == pytest.approx(1e-9)


@pytest.mark.parametrize(
    "text,message",
    [
        ("tolerances:\n    bogus: 1\n", "tolerances.bogus"),
        ("nonsense: 1\n", "nonsense"),
        ("- 1\n- 2\n", "mapping"),
        ("tolerances: [\n", "error loading"),
    ],
)
def test_bad_user_file(tmp_path: Path, text: str, message: str) -> None:
    """Test that bad user files are reported.

    :param tmp_path: temporary directory
    :param text: file contents
    :param message: expected part of the error message
    """
    (tmp_path / "options.yaml").write_text(text)
    with pytest.raises(ConfigError, match=message):
        OptionsConfig().load(tmp_path)


def test_override_tolerance() -> None:
    """Test replacing tolerances."""
    opt = OptionsConfig()
    opt.override_tolerance("cauchy", 2)
    assert opt["tolerances"]["cauchy"] == 2.0
    with pytest.raises(ConfigError):
        opt.override_tolerance("bogus", 1)


def test_config_root_dir(tmp_path: Path) -> None:
    """Test that the umbrella config remembers its root directory.

    :param tmp_path: temporary directory
    """
    cfg = Config()
    assert cfg.root_dir is None
    cfg.load(tmp_path)
    assert cfg.root_dir == tmp_path
    cfg.load(None)
    assert cfg.root_dir is None


def test_every_option_is_read() -> None:
    """Test that the code looks up every built-in option by name."""
    source = "\n".join(
        path.read_text()
        for path in collect_source_files(APP_ROOT_DIR)
        if TESTS_ROOT_DIR not in path.parents
    )
    opt = OptionsConfig()
    sections = ["basic", "cache", "tolerances", "calibrated", "zeros", "sieve"]
    for section in sections:
        for key in opt[section]:
            assert f'"{key}"' in source, f"{section}.{key}"
