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

"""Scaled high log-derivatives of Dirichlet L-functions near Re(s) = 1."""

import math
import typing as T

import numpy as np
import scipy.special
from dataclasses import dataclass, field

from autosieve.core.arith import CHEBYSHEV_PSI, prime_sieve
from autosieve.core.characters import DirichletCharacter
from autosieve.errors import PoleError
from autosieve.zero_lab.coefficients import lambda_array
from autosieve.zero_lab.lfunc import CIRCLE_NODES, MAX_RADIUS, log_derivatives

SERIES_CAP = 10 ** 6
OUTSIDE_BASE = 110.0
WINDOW_LOW_DIVISOR = 300.0
WINDOW_HIGH_FACTOR = 40.0
MAX_ETA = 0.5


def j_k(u: T.Union[float, np.ndarray], k: int) -> T.Union[float, np.ndarray]:
    """Return the weight e^-u u^k / k!.

    :param u: nonnegative point or array of points
    :param k: order
    :return: weight values
    """
    u = np.asarray(u, dtype=np.float64)
    if k == 0:
        ret = np.exp(-u)
    else:
        with np.errstate(divide="ignore"):
            ret = np.exp(k * np.log(u) - u - scipy.special.gammaln(k + 1))
    return float(ret) if ret.ndim == 0 else ret


def window_logs(K: int, eta: float) -> T.Tuple[float, float]:
    """Return log N0 and log N1 of the prime window.

    :param K: power sum range parameter
    :param eta: scale
    :return: (K / (300 eta), 40 K / eta)
    """
    return K / (WINDOW_LOW_DIVISOR * eta), WINDOW_HIGH_FACTOR * K / eta


def certified_tail(k: int, eta: float, cap: float) -> float:
    """Bound eta |sum over n > cap of Lambda_chi(n) j_k(eta log n) / n^(1+s)|.

    Partial summation against psi(x) <= 1.03883 x; valid once
    log(cap) > k / (1 + eta), where the summand is decreasing.

    :param k: order of the derivative
    :param eta: scale
    :param cap: truncation point
    :return: eta 1.03883 (j_k(u0) + Gamma(k + 1, u0) / (k! eta)) with
        u0 = eta log(cap)
    """
    u0 = eta * math.log(cap)
    return (
        eta
        * CHEBYSHEV_PSI
        * (
            T.cast(float, j_k(u0, k))
            + float(scipy.special.gammaincc(k + 1, u0)) / eta
        )
    )


@dataclass
class SeriesSplit:
    """Truncated Dirichlet series split by the kind of term."""

    window: complex
    outside: complex
    prime_powers: complex

    @property
    def total(self) -> complex:
        """Return the sum of the three parts.

        :return: truncated series
        """
        return self.window + self.outside + self.prime_powers


def series_split(
    chi: DirichletCharacter,
    k: int,
    eta: float,
    tau: float,
    cap: int,
    log_window: T.Tuple[float, float],
) -> SeriesSplit:
    """Evaluate eta sum Lambda_chi(n) j_k-weights / n^(1 + i tau) up to cap.

    Each term is eta Lambda_chi(n) (eta log n)^k / k! n^(-1 - eta - i tau),
    so that the total approximates
    (-1)^(k+1) (eta^(k+1) / k!) (L'/L)^(k)(1 + eta + i tau).

    :param chi: Dirichlet character
    :param k: order of the derivative
    :param eta: scale
    :param tau: height
    :param cap: largest n
    :param log_window: logarithms of the prime window ends
    :return: window, outside-window and prime power parts
    """
    mangoldt = lambda_array(chi, cap)
    support = np.flatnonzero(mangoldt)
    logs = np.log(support)
    weights = np.exp(k * np.log(eta * logs) - scipy.special.gammaln(k + 1))
    terms = (
        eta
        * mangoldt[support]
        * weights
        * np.exp(-(1 + eta + 1j * tau) * logs)
    )
    _primes, is_prime = prime_sieve(cap)
    prime = is_prime[support]
    inside = (logs >= log_window[0]) & (logs <= log_window[1])
    return SeriesSplit(
        window=complex(np.sum(terms[prime & inside])),
        outside=complex(np.sum(terms[prime & ~inside])),
        prime_powers=complex(np.sum(terms[~prime])),
    )


@dataclass
class ScaledLogDerivReport:
    """Scaled log-derivative and the decomposition of its series."""

    k: int
    eta: float
    tau: float
    K: int
    value: complex
    split: SeriesSplit
    cap: int
    tail_bound: float
    log_N0: float
    log_N1: float
    flags: T.Dict[str, bool] = field(default_factory=dict)

    @property
    def series_value(self) -> complex:
        """Return the truncated series with the sign of the value.

        :return: (-1)^(k+1) times the truncated sum
        """
        return (-1) ** (self.k + 1) * self.split.total

    @property
    def outside_envelope(self) -> float:
        """Return the envelope for the outside-window primes.

        :return: 110^-k
        """
        return OUTSIDE_BASE ** (-self.k)

    @property
    def outside_ratio(self) -> float:
        """Return the outside-window mass over its envelope.

        :return: |outside| 110^k
        """
        return abs(self.split.outside) / self.outside_envelope


def scaled_logderiv(
    chi: DirichletCharacter,
    k: int,
    eta: float,
    tau: float,
    K: T.Optional[int] = None,
    cap: int = SERIES_CAP,
    nodes: int = CIRCLE_NODES,
    radius: float = MAX_RADIUS,
) -> ScaledLogDerivReport:
    """Return (eta^(k+1) / k!) (L'/L)^(k)(1 + eta + i tau) with its series.

    The value comes from a Cauchy integral of log L. The Dirichlet series
    is summed up to cap, split into primes inside the window
    [N0, N1] = [exp(K / (300 eta)), exp(40 K / eta)], primes outside it
    and prime powers, and the rest is covered by the certified tail.

    :param chi: non-principal Dirichlet character
    :param k: order of the derivative
    :param eta: scale in (0, 1/2]
    :param tau: height
    :param K: window parameter, k when omitted
    :param cap: truncation point of the series
    :param nodes: number of nodes on the Cauchy circle
    :param radius: radius of the Cauchy circle
    :return: report
    """
    if chi.is_principal():
        raise PoleError(f"L(s, {chi}) has a pole at s = 1")
    if not 0 < eta <= MAX_ETA:
        raise ValueError(f"eta must lie in (0, {MAX_ETA}], got {eta}")
    if k < 0:
        raise ValueError(f"derivative order must be nonnegative, got {k}")
    K = k if K is None else K
    s = complex(1 + eta, tau)
    derivative = log_derivatives(chi, s, k, radius, nodes)[k]
    value = complex(
        eta ** (k + 1) / math.factorial(k) * derivative
    )
    log_window = window_logs(max(K, 1), eta)
    log_qt = math.log(chi.modulus * max(abs(tau), 2.0))
    return ScaledLogDerivReport(
        k=k,
        eta=eta,
        tau=tau,
        K=K,
        value=value,
        split=series_split(chi, k, eta, tau, cap, log_window),
        cap=cap,
        tail_bound=certified_tail(k, eta, cap),
        log_N0=log_window[0],
        log_N1=log_window[1],
        flags={
            "tail_certified": math.log(cap) > k / (1 + eta),
            "in_regime": 1 / log_qt < eta <= 1 / 200,
            "window_truncated": log_window[1] > math.log(cap),
        },
    )
