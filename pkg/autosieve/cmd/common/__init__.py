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

"""Common utilities shared between commands."""

from .inputs import (
    add_character_arguments,
    add_coefficient_arguments,
    add_family_arguments,
    character,
    family_given,
    load_characters,
    load_coefficients,
    load_family,
    load_norm_coefficients,
    random_norm_coefficients,
)
from .path import FancyPath
from .report import emit, validate
