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

"""Smooth compactly supported test functions and their Laplace transforms."""

import math
import typing as T

import numpy as np
from dataclasses import dataclass, field

SUPPORT_LIMIT = 2.0
INVERSION_CHUNK = 512


def _psi(u: np.ndarray) -> np.ndarray:
    ret = np.zeros_like(u, dtype=np.float64)
    positive = u > 0
    ret[positive] = np.exp(-1.0 / u[positive])
    return ret


def smooth_step(u: np.ndarray) -> np.ndarray:
    """Return a C-infinity step: 0 for u <= 0, 1 for u >= 1.

    :param u: points
    :return: psi(u) / (psi(u) + psi(1 - u)) with psi(u) = exp(-1/u)
    """
    u = np.asarray(u, dtype=np.float64)
    left = _psi(u)
    return left / (left + _psi(1.0 - u))


def _bump(u: np.ndarray) -> np.ndarray:
    ret = np.zeros_like(u, dtype=np.float64)
    inside = np.abs(u) < 1
    ret[inside] = np.exp(-1.0 / (1.0 - u[inside] ** 2))
    return ret


@dataclass(frozen=True)
class TestFunction:
    """Smooth nonnegative weight supported in [-2, 2], at least 1 on [0, 1].

    Two profiles are available. "bump" is a rescaled exp(-1/(1 - u^2))
    centered at center with the given half width. "plateau" equals 1 on
    [center - half_width, center + half_width] and falls to 0 through
    smooth steps of width ramp.
    """

    __test__ = False

    kind: str = "bump"
    center: float = 0.5
    half_width: float = 1.5
    ramp: float = 0.0
    panels: int = 96
    order: int = 20
    nodes: np.ndarray = field(init=False, repr=False, compare=False)
    weights: np.ndarray = field(init=False, repr=False, compare=False)
    scale: float = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        """Validate the profile and build the quadrature grid."""
        if self.kind not in ("bump", "plateau"):
            raise ValueError(f'unknown test function profile "{self.kind}"')
        if self.half_width <= 0 or self.ramp < 0:
            raise ValueError("widths must be positive")
        if self.kind == "plateau" and self.ramp == 0:
            raise ValueError("plateau profile needs a positive ramp")
        low, high = self.support
        if low < -SUPPORT_LIMIT or high > SUPPORT_LIMIT:
            raise ValueError(f"support [{low}, {high}] not inside [-2, 2]")
        if self.kind == "plateau":
            breaks = [
                low,
                self.center - self.half_width,
                self.center + self.half_width,
                high,
            ]
            object.__setattr__(self, "scale", 1.0)
            if breaks[1] > 0 or breaks[2] < 1:
                raise ValueError("plateau must cover [0, 1]")
        else:
            breaks = [low, high]
            if low >= 0 or high <= 1:
                raise ValueError("bump support must contain [0, 1]")
            edge = _bump(
                (np.array([0.0, 1.0]) - self.center) / self.half_width
            )
            object.__setattr__(self, "scale", float(1.0 / edge.min()))

        base_nodes, base_weights = np.polynomial.legendre.leggauss(self.order)
        nodes = []
        weights = []
        for start, end in zip(breaks, breaks[1:]):
            edges = np.linspace(start, end, self.panels + 1)
            for left, right in zip(edges, edges[1:]):
                half = (right - left) / 2
                nodes.append(left + half * (base_nodes + 1))
                weights.append(half * base_weights)
        object.__setattr__(self, "nodes", np.concatenate(nodes))
        object.__setattr__(self, "weights", np.concatenate(weights))

    @classmethod
    def plateau(cls, ramp: float) -> "TestFunction":
        """Return the weight equal to 1 on [0, 1] with ramps of given width.

        :param ramp: width of the smooth steps on both sides
        :return: test function
        """
        return cls(kind="plateau", center=0.5, half_width=0.5, ramp=ramp)

    @property
    def support(self) -> T.Tuple[float, float]:
        """Return the closed interval outside which the weight vanishes.

        :return: (low, high)
        """
        width = self.half_width + (self.ramp if self.kind == "plateau" else 0)
        return (self.center - width, self.center + width)

    def __call__(self, t: T.Union[float, np.ndarray]) -> np.ndarray:
        """Evaluate the weight.

        :param t: point or array of points
        :return: values
        """
        t = np.asarray(t, dtype=np.float64)
        if self.kind == "bump":
            return self.scale * _bump((t - self.center) / self.half_width)
        low = self.center - self.half_width
        high = self.center + self.half_width
        return smooth_step((t - (low - self.ramp)) / self.ramp) * smooth_step(
            ((high + self.ramp) - t) / self.ramp
        )

    @property
    def values(self) -> np.ndarray:
        """Return the weight on the quadrature nodes.

        :return: values at self.nodes
        """
        return self(self.nodes)


def laplace_transform(
    phi: TestFunction, s: T.Union[complex, np.ndarray]
) -> T.Union[complex, np.ndarray]:
    """Return the Laplace transform of phi at s.

    :param phi: test function
    :param s: point or array of points
    :return: integral of phi(y) exp(s y) dy
    """
    points = np.atleast_1d(np.asarray(s, dtype=np.complex128))
    weighted = phi.weights * phi.values
    ret = np.exp(np.outer(points, phi.nodes)) @ weighted
    if np.ndim(s) == 0:
        return complex(ret[0])
    return ret


def laplace_inversion(
    phi: TestFunction,
    t: float,
    c: float = 1.0,
    height: float = 400.0,
    panels: int = 400,
    order: int = 20,
) -> float:
    """Recover phi(t) from its transform on the line Re(s) = c.

    :param phi: test function
    :param t: point to recover
    :param c: abscissa of the vertical line
    :param height: truncation height of the line
    :param panels: number of Gauss-Legendre panels along the line
    :param order: nodes per panel
    :return: (1 / 2 pi) integral of phi^(c + iv) exp(-(c + iv) t) dv
    """
    base_nodes, base_weights = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(-height, height, panels + 1)
    half = (edges[1] - edges[0]) / 2
    heights = (
        edges[:-1, None] + half * (base_nodes[None, :] + 1)
    ).ravel()
    weights = np.tile(half * base_weights, panels)
    total = 0j
    for start in range(0, len(heights), INVERSION_CHUNK):
        chunk = c + 1j * heights[start : start + INVERSION_CHUNK]
        transform = laplace_transform(phi, chunk)
        total += np.sum(
            weights[start : start + INVERSION_CHUNK]
            * transform
            * np.exp(-chunk * t)
        )
    return float(total.real / (2 * math.pi))
