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

"""Dirichlet L-functions evaluated through the Hurwitz zeta function.

Hurwitz zeta values come from Euler-Maclaurin summation with the shift
M = max(10, ceil(|s|) + 10) and Bernoulli corrections through B_20.
Log-derivatives are read off Taylor coefficients of log L on a small
circle, computed with the FFT.
"""

import functools
import math
import typing as T

import numpy as np
import scipy.special

from autosieve.core.characters import DirichletCharacter
from autosieve.errors import ContourError, PoleError

EULER_MACLAURIN_ORDER = 10
CIRCLE_NODES = 256
MAX_RADIUS = 0.25
MIN_RADIUS = 1e-4


@functools.lru_cache(maxsize=None)
def _bernoulli_factors(order: int) -> T.Tuple[float, ...]:
    numbers = scipy.special.bernoulli(2 * order)
    return tuple(
        float(numbers[2 * j]) / math.factorial(2 * j)
        for j in range(1, order + 1)
    )


def euler_maclaurin_shift(s: complex) -> int:
    """Return the number of terms summed before the asymptotic tail.

    :param s: argument
    :return: max(10, ceil(|s|) + 10)
    """
    return max(10, math.ceil(abs(s)) + 10)


def hurwitz_zeta_regular(
    s: complex,
    a: T.Union[float, np.ndarray],
    order: int = EULER_MACLAURIN_ORDER,
) -> T.Union[complex, np.ndarray]:
    """Return zeta(s, a) - 1 / (s - 1), which is entire in s.

    :param s: argument
    :param a: shift or array of shifts, each positive
    :param order: number of Bernoulli corrections
    :return: regular part of the Hurwitz zeta function
    """
    shifts = np.atleast_1d(np.asarray(a, dtype=np.float64))
    if np.any(shifts <= 0):
        raise ValueError("Hurwitz shift must be positive")
    s = complex(s)
    count = euler_maclaurin_shift(s)
    terms = shifts[:, None] + np.arange(count)[None, :]
    ret = np.sum(np.exp(-s * np.log(terms)), axis=1)

    w = shifts + count
    log_w = np.log(w)
    if s == 1:
        ret -= log_w
    else:
        ret += np.expm1((1 - s) * log_w) / (s - 1)
    power = np.exp(-s * log_w)
    ret += power / 2

    rising = s
    power = power / w
    for j, factor in enumerate(_bernoulli_factors(order), start=1):
        ret += factor * rising * power
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        power = power / (w * w)

    if np.ndim(a) == 0:
        return complex(ret[0])
    return ret


def hurwitz_zeta(s: complex, a: float) -> complex:
    """Return the Hurwitz zeta function zeta(s, a).

    :param s: argument, not 1
    :param a: positive shift
    :return: zeta(s, a)
    """
    if s == 1:
        raise PoleError("Hurwitz zeta has a pole at s = 1")
    return T.cast(complex, hurwitz_zeta_regular(s, a)) + 1 / (complex(s) - 1)


def _residues(chi: DirichletCharacter) -> T.Tuple[np.ndarray, np.ndarray]:
    residues = np.arange(1, chi.modulus + 1)
    values = chi.values(residues)
    keep = values != 0
    return residues[keep], values[keep]


def l_value(chi: DirichletCharacter, s: complex) -> complex:
    """Return L(s, chi) = q^-s sum over a of chi(a) zeta(s, a / q).

    :param chi: Dirichlet character
    :param s: argument
    :return: L(s, chi)
    """
    s = complex(s)
    q = chi.modulus
    residues, values = _residues(chi)
    regular = hurwitz_zeta_regular(s, residues / q)
    ret = complex(np.sum(values * regular))
    mass = complex(np.sum(values))
    if abs(mass) > 1e-12:
        if s == 1:
            raise PoleError(f"L(s, {chi}) has a pole at s = 1")
        ret += mass / (s - 1)
    return ret * q ** (-s)


def gamma_shift(chi: DirichletCharacter) -> int:
    """Return the archimedean parameter a of chi.

    :param chi: Dirichlet character
    :return: 0 for even characters, 1 for odd ones
    """
    return (1 - chi.parity) // 2


def log_gamma_factor(chi: DirichletCharacter, s: complex) -> complex:
    """Return log of (q / pi)^((s + a) / 2) Gamma((s + a) / 2).

    :param chi: Dirichlet character
    :param s: argument
    :return: logarithm of the completing factor
    """
    half = (complex(s) + gamma_shift(chi)) / 2
    return complex(
        half * math.log(chi.modulus / math.pi) + scipy.special.loggamma(half)
    )


def hardy_z(chi: DirichletCharacter, t: float) -> float:
    """Return the real-rotated L-function on the critical line.

    For a real primitive character the completed L-function is real on
    Re(s) = 1/2; rotating L(1/2 + it) by the phase of the gamma factor
    keeps the sign while removing the exponential decay.

    :param chi: real primitive Dirichlet character
    :param t: height
    :return: exp(i arg G(1/2 + it)) L(1/2 + it, chi)
    """
    s = complex(0.5, t)
    phase = log_gamma_factor(chi, s).imag
    return float((np.exp(1j * phase) * l_value(chi, s)).real)


def gamma_logderiv(chi: DirichletCharacter, s: complex) -> complex:
    """Return the log-derivative of the archimedean factor.

    :param chi: Dirichlet character
    :param s: argument
    :return: -log(pi) / 2 + psi((s + a) / 2) / 2
    """
    half = (complex(s) + gamma_shift(chi)) / 2
    return complex(-math.log(math.pi) / 2 + scipy.special.digamma(half) / 2)


def _winding(values: np.ndarray) -> int:
    steps = np.angle(np.roll(values, -1) / values)
    return int(round(float(np.sum(steps)) / (2 * math.pi)))


def log_taylor(
    func: T.Callable[[complex], complex],
    s: complex,
    degree: int,
    radius: float = MAX_RADIUS,
    nodes: int = CIRCLE_NODES,
) -> T.Tuple[np.ndarray, float]:
    """Return Taylor coefficients of log(func) around s.

    The circle is shrunk until func has no zero inside it.

    :param func: analytic function without zeros near s
    :param s: center
    :param degree: highest coefficient wanted
    :param radius: initial circle radius
    :param nodes: number of nodes on the circle
    :return: (coefficients c_0..c_degree, radius used)
    """
    if degree >= nodes // 2:
        raise ValueError("too many coefficients for the circle resolution")
    angles = 2 * math.pi * np.arange(nodes) / nodes
    while radius >= MIN_RADIUS:
        points = s + radius * np.exp(1j * angles)
        values = np.array([func(point) for point in points])
        if np.all(values != 0) and _winding(values) == 0:
            logs = np.log(np.abs(values)) + 1j * np.unwrap(np.angle(values))
            coefficients = np.fft.fft(logs) / nodes
            scale = radius ** np.arange(degree + 1)
            return coefficients[: degree + 1] / scale, radius
        radius /= 2
    raise ContourError(f"zero too close to {s} for a log expansion")


def log_derivatives(
    chi: DirichletCharacter,
    s: complex,
    order: int,
    radius: float = MAX_RADIUS,
    nodes: int = CIRCLE_NODES,
) -> np.ndarray:
    """Return the derivatives (L'/L)^(k)(s) for k = 0..order.

    :param chi: Dirichlet character
    :param s: argument away from zeros and poles
    :param order: highest derivative
    :param radius: initial circle radius
    :param nodes: number of nodes on the circle
    :return: complex array of length order + 1
    """
    coefficients, _ = log_taylor(
        functools.partial(l_value, chi), s, order + 1, radius, nodes
    )
    k = np.arange(order + 1)
    factorials = scipy.special.factorial(k + 1)
    return coefficients[1:] * factorials
