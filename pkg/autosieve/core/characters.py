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

"""Dirichlet characters built from the structure of (Z/qZ)^*.

Values are stored as exact phases (fractions of a full turn), so that real
characters take exactly the values 1, -1 and 0.
"""

import cmath
import functools
import itertools
import math
import typing as T
from fractions import Fraction

import numpy as np
from dataclasses import dataclass, field

from autosieve.core.arith import divisors, euler_phi, factorize

_EXACT_ROOTS = {
    Fraction(0): 1 + 0j,
    Fraction(1, 2): -1 + 0j,
    Fraction(1, 4): 1j,
    Fraction(3, 4): -1j,
}


def unit_root(phase: Fraction) -> complex:
    """Return exp(2 pi i phase), exactly for multiples of a quarter turn.

    :param phase: fraction of a full turn
    :return: root of unity
    """
    phase = phase % 1
    try:
        return _EXACT_ROOTS[phase]
    except KeyError:
        return cmath.exp(2j * math.pi * float(phase))


def _primitive_root(p: int) -> int:
    phi = p - 1
    factors = [prime for prime, _exponent in factorize(phi)] if phi > 1 else []
    for g in range(2, p):
        if all(pow(g, phi // prime, p) != 1 for prime in factors):
            return g
    return 1


def _component_logs(
    p: int, k: int
) -> T.Tuple[T.Tuple[int, ...], T.Dict[int, T.Tuple[int, ...]]]:
    """Discrete logarithms for the group (Z/p^kZ)^*.

    :param p: prime
    :param k: exponent
    :return: orders of the cyclic factors and the log vector of each unit
    """
    modulus = p ** k
    logs: T.Dict[int, T.Tuple[int, ...]] = {}
    if p == 2:
        if k == 1:
            return (), {1: ()}
        if k == 2:
            return (2,), {1: (0,), 3: (1,)}
        order = 2 ** (k - 2)
        for sign, exponent in itertools.product(range(2), range(order)):
            value = pow(5, exponent, modulus)
            if sign:
                value = modulus - value
            logs[value] = (sign, exponent)
        return (2, order), logs

    g = _primitive_root(p)
    if k > 1 and pow(g, p - 1, p * p) == 1:
        g += p
    order = euler_phi(modulus)
    value = 1
    for exponent in range(order):
        logs[value] = (exponent,)
        value = value * g % modulus
    return (order,), logs


@dataclass(frozen=True)
class DirichletCharacter:
    """Dirichlet character modulo q.

    phases[a] is the phase of chi(a) for residues coprime to q and None for
    the others.
    """

    modulus: int
    index: int
    phases: T.Tuple[T.Optional[Fraction], ...]
    table: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        """Validate the value table and precompute complex values."""
        if len(self.phases) != self.modulus:
            raise ValueError("value table must cover every residue")
        for residue, phase in enumerate(self.phases):
            if (phase is None) != (math.gcd(residue, self.modulus) > 1):
                raise ValueError(
                    f"chi({residue}) must vanish exactly when "
                    f"gcd({residue}, {self.modulus}) > 1"
                )
        object.__setattr__(
            self,
            "table",
            np.array(
                [
                    0j if phase is None else unit_root(phase)
                    for phase in self.phases
                ],
                dtype=np.complex128,
            ),
        )

    @classmethod
    def trivial(cls) -> "DirichletCharacter":
        """Return the character modulo 1, whose L-function is zeta.

        :return: trivial character
        """
        return cls(modulus=1, index=0, phases=(Fraction(0),))

    def __call__(self, value: int) -> complex:
        """Evaluate the character.

        :param value: integer argument
        :return: chi(value)
        """
        return complex(self.table[value % self.modulus])

    def values(self, array: np.ndarray) -> np.ndarray:
        """Evaluate the character on an integer array.

        :param array: integer arguments
        :return: complex values
        """
        return self.table[np.asarray(array, dtype=np.int64) % self.modulus]

    def phase(self, value: int) -> T.Optional[Fraction]:
        """Return the exact phase of chi(value).

        :param value: integer argument
        :return: phase, None when chi(value) = 0
        """
        return self.phases[value % self.modulus]

    @property
    def label(self) -> str:
        """Return the label "q.index".

        :return: label
        """
        return f"{self.modulus}.{self.index}"

    @property
    def order(self) -> int:
        """Return the order of chi in the character group.

        :return: order
        """
        ret = 1
        for phase in self.phases:
            if phase is not None:
                denominator = phase.denominator
                ret = ret * denominator // math.gcd(ret, denominator)
        return ret

    def is_principal(self) -> bool:
        """Return whether chi is identically 1 on the units.

        :return: whether chi is principal
        """
        return all(phase in (None, 0) for phase in self.phases)

    def is_trivial(self) -> bool:
        """Return whether chi is the character modulo 1.

        :return: whether the modulus is 1
        """
        return self.modulus == 1

    def is_real(self) -> bool:
        """Return whether chi takes only real values.

        :return: whether the order divides 2
        """
        return self.order <= 2

    @property
    def parity(self) -> int:
        """Return chi(-1).

        :return: 1 for even characters, -1 for odd ones
        """
        if self.modulus <= 2:
            return 1
        return 1 if self.phases[self.modulus - 1] == 0 else -1

    @property
    def conductor(self) -> int:
        """Return the conductor.

        :return: smallest d | q such that chi is 1 on units congruent to 1
            mod d
        """
        for candidate in divisors(self.modulus):
            if all(
                self.phases[residue] in (None, 0)
                for residue in range(1, self.modulus, candidate)
            ):
                return candidate
        return self.modulus

    def is_primitive(self) -> bool:
        """Return whether the conductor equals the modulus.

        :return: whether chi is primitive
        """
        return self.conductor == self.modulus

    def conjugate(self) -> "DirichletCharacter":
        """Return the complex conjugate character.

        :return: conjugate character, same modulus
        """
        phases = tuple(
            None if phase is None else (-phase) % 1 for phase in self.phases
        )
        for chi in characters_mod(self.modulus):
            if chi.phases == phases:
                return chi
        raise AssertionError("character group is not closed")

    def __str__(self) -> str:
        """Return the label.

        :return: label
        """
        return f"chi_{self.label}"


def characters_mod(modulus: int) -> T.List[DirichletCharacter]:
    """Return every Dirichlet character modulo q.

    Characters are numbered by their exponent vectors on the cyclic factors
    of (Z/qZ)^*, prime powers in increasing order; index 0 is principal.

    :param modulus: positive modulus
    :return: phi(q) characters ordered by index
    """
    return list(_characters_mod(modulus))


@functools.lru_cache(maxsize=None)
def _characters_mod(modulus: int) -> T.Tuple[DirichletCharacter, ...]:
    if modulus < 1:
        raise ValueError(f"invalid modulus {modulus}")
    components = [
        (p ** k, *_component_logs(p, k)) for p, k in factorize(modulus)
    ]
    orders = [
        order
        for _modulus, component_orders, _logs in components
        for order in component_orders
    ]
    unit_logs: T.Dict[int, T.Tuple[int, ...]] = {}
    for residue in range(modulus):
        if math.gcd(residue, modulus) != 1:
            continue
        vector: T.Tuple[int, ...] = ()
        for component_modulus, _orders, logs in components:
            vector += logs[residue % component_modulus]
        unit_logs[residue] = vector

    ret = []
    for index, exponents in enumerate(
        itertools.product(*(range(order) for order in orders))
    ):
        phases = tuple(
            sum(
                (
                    Fraction(j * e, order)
                    for j, e, order in zip(
                        exponents, unit_logs[residue], orders
                    )
                ),
                Fraction(0),
            )
            % 1
            if residue in unit_logs
            else None
            for residue in range(modulus)
        )
        ret.append(
            DirichletCharacter(modulus=modulus, index=index, phases=phases)
        )
    return tuple(ret)


def primitive_characters(modulus: int) -> T.List[DirichletCharacter]:
    """Return the primitive characters modulo q.

    :param modulus: positive modulus
    :return: primitive characters ordered by index
    """
    return [chi for chi in characters_mod(modulus) if chi.is_primitive()]


def character_by_label(label: str) -> DirichletCharacter:
    """Look a character up by its "q.index" label.

    :param label: label such as "5.2"
    :return: character
    """
    try:
        modulus, index = (int(part) for part in label.split("."))
        return characters_mod(modulus)[index]
    except (ValueError, IndexError) as ex:
        raise ValueError(f'invalid character label: "{label}"') from ex
