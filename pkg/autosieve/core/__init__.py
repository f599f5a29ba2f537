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

"""Shared data model: partitions, ideals, representations, characters."""

from .characters import (
    DirichletCharacter,
    characters_mod,
    primitive_characters,
)
from .ideals import (
    FieldSpec,
    IdealFactorization,
    PrimeIdeal,
    ideals_up_to,
    parse_prime_key,
)
from .partition import (
    Partition,
    PartitionSequence,
    partition_sequences,
    partitions_of,
)
from .rep import (
    AutomorphicRepData,
    Family,
    analytic_conductor,
    character_family,
    character_rep,
    default_theta,
)
