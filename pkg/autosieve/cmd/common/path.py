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

"""Path objects resolved when a command runs, not when it is parsed."""

from pathlib import Path

from autosieve.api.cmd import CommandUnavailable


class FancyPath:
    def __init__(self, value: str) -> None:
        self.value = value

    def __str__(self) -> str:
        return self.value

    def get_load_path(self) -> Path:
        path = Path(self.value).expanduser()
        if not path.exists():
            raise CommandUnavailable(f'file "{path}" does not exist')
        return path

    def get_save_path(self) -> Path:
        path = Path(self.value).expanduser()
        path.parent.mkdir(parents=True, exist_ok=True)
        return path

    def get_save_dir(self) -> Path:
        path = Path(self.value).expanduser()
        path.mkdir(parents=True, exist_ok=True)
        return path
