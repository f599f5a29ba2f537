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

"""Zero detection through high log-derivatives and prime sums."""

import math
import typing as T

import numpy as np
import scipy.integrate
from dataclasses import dataclass, field

from autosieve.core.arith import primes_up_to
from autosieve.core.characters import DirichletCharacter
from autosieve.core.sampling import make_rng
from autosieve.zero_lab.lfunc import log_derivatives
from autosieve.zero_lab.logderiv import SERIES_CAP, window_logs
from autosieve.zero_lab.turan import (
    NEARBY_RADIUS,
    nearby_terms,
    power_sum_zero_lower,
)
from autosieve.zero_lab.zeros import ZeroList

Mapper = T.Callable[..., T.Iterable[T.Any]]

K_SCALE = 1e5
DETECTION_BASE = 100.0
MVT_BASE = 101.0
RESIDUAL_CONSTANT = 10.0
MEAN_SQUARE_TAU_STEP = 0.5
MEAN_SQUARE_CAP = 10 ** 5


def default_detection_k(
    log_conductor: float, T: float, eta: float, n: int = 1
) -> int:
    """Return K = 10^5 n^4 eta log(QT), rounded up.

    :param log_conductor: log Q
    :param T: height
    :param eta: scale
    :param n: degree
    :return: power sum range parameter, at least 1
    """
    return max(
        1,
        math.ceil(
            K_SCALE * n ** 4 * eta * (log_conductor + math.log(max(T, 1.0)))
        ),
    )


def window_integral(
    chi: DirichletCharacter,
    tau: float,
    log_window: T.Tuple[float, float],
    cap: int,
    power: int = 1,
) -> float:
    """Return the integral of |S(u)|^power du/u over [N0, min(N1, cap)].

    S(u) = sum over N0 <= p <= u of chi(p) log p / p^(1 + i tau) is
    constant between consecutive primes, so the integral is a finite sum.

    :param chi: Dirichlet character
    :param tau: height
    :param log_window: logarithms of N0 and N1
    :param cap: largest prime considered
    :param power: exponent applied to |S(u)|
    :return: integral value
    """
    log_low = log_window[0]
    log_high = min(log_window[1], math.log(cap))
    if log_low >= log_high:
        return 0.0
    primes = np.array(primes_up_to(cap), dtype=np.int64)
    logs = np.log(primes)
    keep = (logs >= log_low) & (logs <= log_high)
    primes, logs = primes[keep], logs[keep]
    if not len(primes):
        return 0.0
    terms = chi.values(primes) * logs * np.exp(-(1 + 1j * tau) * logs)
    partial = np.abs(np.cumsum(terms)) ** power
    widths = np.diff(np.append(logs, log_high))
    return float(np.sum(partial * widths))


@dataclass
class DetectionReport:
    """Zero detection criterion evaluated at one height."""

    tau: float
    eta: float
    K: int
    near_zero: bool
    nearest_distance: float
    log_N0: float
    log_N1: float
    cap: int
    integral: float
    flags: T.Dict[str, bool] = field(default_factory=dict)
    mean_square_log10_rhs: T.Optional[float] = None

    @property
    def log10_rhs(self) -> float:
        """Return log10 of 4 100^(2K+1) eta^2 times the integral.

        :return: decimal logarithm, -inf for a vanishing integral
        """
        if self.integral <= 0:
            return -math.inf
        return (
            math.log10(4)
            + (2 * self.K + 1) * math.log10(DETECTION_BASE)
            + 2 * math.log10(self.eta)
            + math.log10(self.integral)
        )

    @property
    def vacuous(self) -> bool:
        """Return whether no zero lies within eta of 1 + i tau.

        :return: whether the implication holds vacuously
        """
        return not self.near_zero

    @property
    def implication_holds(self) -> bool:
        """Check that a nearby zero forces the right hand side to be >= 1.

        :return: whether the detection implication holds
        """
        return self.vacuous or self.log10_rhs >= 0


def mean_square_log10_rhs(
    chi: DirichletCharacter,
    eta: float,
    K: int,
    T: float,
    cap: int = MEAN_SQUARE_CAP,
    tau_step: float = MEAN_SQUARE_TAU_STEP,
    mapper: Mapper = map,
) -> float:
    """Return log10 of 101^(4K) K eta^2 times the mean square prime integral.

    The double integral of |S_tau(u)|^2 du/u dtau over |tau| <= T uses the
    trapezoidal rule in tau.

    :param chi: Dirichlet character
    :param eta: scale
    :param K: power sum range parameter
    :param T: height range
    :param cap: largest prime considered
    :param tau_step: spacing of the tau grid
    :param mapper: map-like callable spreading heights over workers
    :return: decimal logarithm, -inf for a vanishing integral
    """
    log_window = window_logs(K, eta)
    count = max(2, math.ceil(2 * T / tau_step))
    taus = np.linspace(-T, T, count + 1)
    values = list(
        mapper(
            lambda tau: window_integral(chi, tau, log_window, cap, power=2),
            taus,
        )
    )
    total = float(scipy.integrate.trapezoid(values, taus))
    if total <= 0:
        return -math.inf
    return (
        4 * K * math.log10(MVT_BASE)
        + math.log10(K)
        + 2 * math.log10(eta)
        + math.log10(total)
    )


def zero_detect_criterion(
    chi: DirichletCharacter,
    tau: float,
    eta: float,
    zeros: ZeroList,
    K: T.Optional[int] = None,
    cap: int = SERIES_CAP,
    mean_square_T: T.Optional[float] = None,
    mapper: Mapper = map,
) -> DetectionReport:
    """Evaluate the zero detection criterion at 1 + i tau.

    :param chi: Dirichlet character
    :param tau: height
    :param eta: scale, positive
    :param zeros: known zeros
    :param K: power sum range parameter, 10^5 eta log(q T) when omitted
    :param cap: largest prime in the window integral
    :param mean_square_T: when given, also evaluate the mean square right hand
        side over |tau| <= mean_square_T
    :param mapper: map-like callable for the mean square evaluation
    :return: report
    """
    if eta <= 0:
        raise ValueError(f"eta must be positive, got {eta}")
    log_q = math.log(max(chi.modulus, 1))
    if K is None:
        K = default_detection_k(log_q, max(abs(tau), zeros.T), eta)
    anchor = complex(1, tau)
    nearest = min((abs(rho - anchor) for rho in zeros), default=math.inf)
    log_window = window_logs(K, eta)
    log_qt = log_q + math.log(max(abs(tau), 2.0))
    return DetectionReport(
        tau=tau,
        eta=eta,
        K=K,
        near_zero=nearest <= eta,
        nearest_distance=nearest,
        log_N0=log_window[0],
        log_N1=log_window[1],
        cap=cap,
        integral=window_integral(chi, tau, log_window, cap),
        flags={
            "window_truncated": log_window[1] > math.log(cap),
            "in_regime": log_qt > 0 and 1 / log_qt < eta <= 1 / 200,
        },
        mean_square_log10_rhs=(
            mean_square_log10_rhs(chi, eta, K, mean_square_T, mapper=mapper)
            if mean_square_T is not None
            else None
        ),
    )


@dataclass
class PlantedCheck:
    """Power sum side of the detection argument on planted zeros."""

    zeros: T.Tuple[complex, ...]
    s: complex
    eta: float
    K: int
    k: int
    power_sum: float

    @property
    def scaled_derivative(self) -> float:
        """Return eta^(k+1) |sum (s - rho)^-(k+1)|.

        :return: scaled power sum
        """
        return self.eta ** (self.k + 1) * self.power_sum

    @property
    def lower_bound(self) -> float:
        """Return 1 / (2 100^(k+1)).

        :return: lower bound for the scaled derivative
        """
        return 0.5 * DETECTION_BASE ** (-(self.k + 1))

    @property
    def holds(self) -> bool:
        """Check the scaled derivative against its lower bound.

        :return: whether the bound holds
        """
        return self.scaled_derivative >= self.lower_bound


def planted_zero_check(
    eta: float,
    tau: float,
    cluster: int = 5,
    K: T.Optional[int] = None,
    seed: T.Optional[int] = None,
) -> PlantedCheck:
    """Plant a zero within eta of 1 + i tau among random neighbours.

    The remaining zeros are uniform in the disc of radius 200 eta around
    s = 1 + eta + i tau, kept left of Re(s) = 1.

    :param eta: scale, positive
    :param tau: height
    :param cluster: total number of planted zeros
    :param K: power sum range parameter, the cluster size when omitted
    :param seed: seed of the configuration
    :return: check result
    """
    rng = make_rng(seed)
    s = complex(1 + eta, tau)
    anchor = complex(1, tau)
    planted = [
        anchor
        + eta
        * math.sqrt(rng.uniform(0.01, 1))
        * complex(np.exp(1j * rng.uniform(math.pi / 2, 3 * math.pi / 2)))
    ]
    while len(planted) < cluster:
        radius = NEARBY_RADIUS * eta * math.sqrt(rng.uniform())
        point = s + radius * complex(np.exp(1j * rng.uniform(0, 2 * math.pi)))
        if point.real < 1:
            planted.append(point)
    zeros = ZeroList.synthetic(planted, sigma_min=-math.inf)
    count = len(nearby_terms(zeros.zeros, s, eta))
    K = max(count, K or 0)
    k, value = power_sum_zero_lower(zeros, s, eta, K)
    return PlantedCheck(
        zeros=zeros.zeros, s=s, eta=eta, K=K, k=k, power_sum=value
    )


@dataclass
class ResidualReport:
    """High log-derivative against the power sum over nearby zeros."""

    k: int
    eta: float
    tau: float
    derivative: complex
    power_sum: complex
    envelope: float
    uncertainty: float
    constant: float = RESIDUAL_CONSTANT

    @property
    def residual(self) -> float:
        """Return |(-1)^k / k! (L'/L)^(k)(s) - sum (s - rho)^-(k+1)|.

        :return: residual
        """
        return abs(self.derivative - self.power_sum)

    @property
    def ratio(self) -> float:
        """Return the residual over the envelope.

        :return: ratio
        """
        return self.residual / self.envelope

    @property
    def within_envelope(self) -> bool:
        """Check the residual against the calibrated envelope.

        :return: whether residual <= C envelope + numerical uncertainty
        """
        return self.residual <= self.constant * self.envelope + (
            self.uncertainty
        )


def derivative_residual(
    chi: DirichletCharacter,
    k: int,
    eta: float,
    tau: float,
    zeros: ZeroList,
    constant: float = RESIDUAL_CONSTANT,
) -> ResidualReport:
    """Compare (-1)^k / k! (L'/L)^(k)(s) with its nearby zero sum.

    The envelope is log(q T) / (200 eta)^k. The numerical uncertainty is
    the spread of the derivative between two Cauchy circles.

    :param chi: non-principal Dirichlet character
    :param k: order of the derivative
    :param eta: scale
    :param tau: height
    :param zeros: zeros covering the disc |s - rho| <= 200 eta
    :param constant: calibrated constant multiplying the envelope
    :return: report
    """
    s = complex(1 + eta, tau)
    nearest = min((abs(s - rho) for rho in zeros), default=1.0)
    radius = min(0.25, 0.6 * nearest)
    scale = (-1) ** k / math.factorial(k)
    derivative = scale * log_derivatives(chi, s, k, radius)[k]
    other = scale * log_derivatives(chi, s, k, 0.8 * radius)[k]
    terms = nearby_terms(zeros.zeros, s, eta)
    power_sum = complex(np.sum(np.asarray(terms) ** (k + 1)))
    log_qt = math.log(chi.modulus * max(abs(tau), zeros.T, 2.0))
    return ResidualReport(
        k=k,
        eta=eta,
        tau=tau,
        derivative=complex(derivative),
        power_sum=power_sum,
        envelope=log_qt / (NEARBY_RADIUS * eta) ** k,
        uncertainty=abs(derivative - other),
        constant=constant,
    )
