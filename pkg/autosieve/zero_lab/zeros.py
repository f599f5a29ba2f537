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

"""Zeros of Dirichlet L-functions located by the argument principle.

A rectangle is split into horizontal strips that are scanned
independently. The argument of L along every edge is followed on a grid
refined until consecutive increments stay below pi/2; rectangles with a
nonzero winding number are bisected until each zero is pinned down.
"""

import functools
import math
import typing as T

import numpy as np
from dataclasses import dataclass, field

from autosieve.core.characters import DirichletCharacter
from autosieve.errors import ContourError, NonPrimitiveCharacter
from autosieve.zero_lab.lfunc import hardy_z, l_value

Mapper = T.Callable[..., T.Iterable[T.Any]]

RIGHT_EDGE = 1.5
LEFT_EDGE = 0.01
GRID_STEP = 0.1
STRIP_HEIGHT = 10.0
MAX_PERTURBATIONS = 5
PERTURBATION = 1e-6
REFINE_TOLERANCE = 1e-8
MIN_SEGMENT = 1e-12
NEWTON_START = 0.05
NEWTON_STEP = 1e-7
NEWTON_ITERATIONS = 30
WINDING_SLACK = 0.1
SPLIT_FRACTIONS = (0.5, 0.45, 0.55, 0.4, 0.6)
SIGN_CHANGE_STEP = 0.05
# l_value is accurate to 1e-10 only up to this height plus margin
MAX_SCAN_HEIGHT = 60.0


@dataclass(frozen=True)
class ZeroList:
    """Zeros rho = beta + i gamma inside the box sigma_min < beta < 1,
    |gamma| <= T.
    """

    zeros: T.Tuple[complex, ...]
    sigma_min: float
    T: float
    provenance: str = "scanned"
    q: int = 1
    index: int = 0

    def __post_init__(self) -> None:
        """Sort the zeros and check that they lie inside the box."""
        if self.provenance not in ("scanned", "synthetic"):
            raise ValueError(f'unknown provenance "{self.provenance}"')
        zeros = tuple(
            sorted(
                (complex(rho) for rho in self.zeros),
                key=lambda rho: (rho.imag, rho.real),
            )
        )
        for rho in zeros:
            if not (
                self.sigma_min < rho.real < 1 and abs(rho.imag) <= self.T
            ):
                raise ValueError(f"zero {rho} outside the box")
        object.__setattr__(self, "zeros", zeros)

    @classmethod
    def synthetic(
        cls,
        zeros: T.Iterable[complex],
        sigma_min: float = 0.0,
        T: T.Optional[float] = None,
    ) -> "ZeroList":
        """Wrap planted zeros.

        :param zeros: zeros
        :param sigma_min: left end of the box
        :param T: height of the box, the largest |gamma| when omitted
        :return: zero list tagged "synthetic"
        """
        zeros = tuple(complex(rho) for rho in zeros)
        height = (
            T
            if T is not None
            else max((abs(rho.imag) for rho in zeros), default=0.0)
        )
        return cls(
            zeros=zeros, sigma_min=sigma_min, T=height, provenance="synthetic"
        )

    def __len__(self) -> int:
        """Return the number of zeros.

        :return: number of zeros
        """
        return len(self.zeros)

    def __iter__(self) -> T.Iterator[complex]:
        """Iterate over the zeros by increasing height.

        :return: iterator
        """
        return iter(self.zeros)

    def count(self, sigma: float, T: T.Optional[float] = None) -> int:
        """Return N(sigma, T) = #{rho: beta > sigma, |gamma| <= T}.

        :param sigma: real part threshold
        :param T: height, the box height when omitted
        :return: count
        """
        height = self.T if T is None else T
        return sum(
            1
            for rho in self.zeros
            if rho.real > sigma and abs(rho.imag) <= height
        )

    def upper(self) -> T.List[complex]:
        """Return the zeros in the upper half plane.

        :return: zeros with gamma > 0
        """
        return [rho for rho in self.zeros if rho.imag > 0]

    def near(self, s: complex, radius: float) -> T.List[complex]:
        """Return the zeros within a distance of s.

        :param s: center
        :param radius: distance
        :return: zeros rho with |s - rho| <= radius
        """
        return [rho for rho in self.zeros if abs(s - rho) <= radius]

    def truncated(self, T: float) -> "ZeroList":
        """Return the zeros with |gamma| <= T as a smaller box.

        :param T: new height, at most the current one
        :return: zero list
        """
        if T > self.T:
            raise ValueError(f"cannot grow the box from {self.T} to {T}")
        return ZeroList(
            zeros=tuple(rho for rho in self.zeros if abs(rho.imag) <= T),
            sigma_min=self.sigma_min,
            T=T,
            provenance=self.provenance,
            q=self.q,
            index=self.index,
        )


class _ContourHit(Exception):
    pass


@dataclass(frozen=True)
class _Rect:
    left: float
    right: float
    bottom: float
    top: float

    @property
    def center(self) -> complex:
        """Return the midpoint.

        :return: center of the rectangle
        """
        return complex(
            (self.left + self.right) / 2, (self.bottom + self.top) / 2
        )

    @property
    def size(self) -> float:
        """Return the longer side.

        :return: max of width and height
        """
        return max(self.right - self.left, self.top - self.bottom)

    def contains(self, point: complex) -> bool:
        """Return whether a point lies strictly inside.

        :param point: point
        :return: whether the point is interior
        """
        return (
            self.left < point.real < self.right
            and self.bottom < point.imag < self.top
        )

    def split(self, fraction: float) -> T.Tuple["_Rect", "_Rect"]:
        """Cut across the longer side.

        :param fraction: relative position of the cut
        :return: both halves
        """
        if self.right - self.left >= self.top - self.bottom:
            middle = self.left + fraction * (self.right - self.left)
            return (
                _Rect(self.left, middle, self.bottom, self.top),
                _Rect(middle, self.right, self.bottom, self.top),
            )
        middle = self.bottom + fraction * (self.top - self.bottom)
        return (
            _Rect(self.left, self.right, self.bottom, middle),
            _Rect(self.left, self.right, middle, self.top),
        )


@dataclass
class _Contour:
    func: T.Callable[[complex], complex]
    step: float
    cache: T.Dict[complex, complex] = field(default_factory=dict)

    def value(self, point: complex) -> complex:
        """Evaluate the function, refusing zeros.

        :param point: point on a contour
        :return: nonzero function value
        """
        try:
            return self.cache[point]
        except KeyError:
            pass
        ret = self.func(point)
        if ret == 0 or not np.isfinite(ret):
            raise _ContourHit(point)
        self.cache[point] = ret
        return ret

    def edge_phase(self, start: complex, end: complex) -> float:
        """Follow the argument along a segment.

        :param start: first end
        :param end: second end
        :return: total change of the argument
        """
        count = max(4, math.ceil(abs(end - start) / self.step))
        points = [start + (end - start) * i / count for i in range(count + 1)]
        total = 0.0
        for a, b in zip(points, points[1:]):
            stack = [(a, b)]
            while stack:
                left, right = stack.pop()
                delta = float(np.angle(self.value(right) / self.value(left)))
                if abs(delta) < math.pi / 2:
                    total += delta
                    continue
                if abs(right - left) < MIN_SEGMENT:
                    raise _ContourHit(left)
                middle = (left + right) / 2
                stack.append((middle, right))
                stack.append((left, middle))
        return total

    def winding(self, rect: _Rect) -> int:
        """Count zeros inside a rectangle.

        :param rect: rectangle
        :return: winding number of the function around its boundary
        """
        corners = [
            complex(rect.left, rect.bottom),
            complex(rect.right, rect.bottom),
            complex(rect.right, rect.top),
            complex(rect.left, rect.top),
        ]
        total = sum(
            self.edge_phase(a, b)
            for a, b in zip(corners, corners[1:] + corners[:1])
        )
        turns = total / (2 * math.pi)
        ret = int(round(turns))
        if abs(turns - ret) > WINDING_SLACK or ret < 0:
            raise _ContourHit(rect.center)
        return ret

    def newton(self, rect: _Rect) -> T.Optional[complex]:
        """Run Newton iterations from the center without leaving rect.

        :param rect: rectangle holding one zero
        :return: approximate zero or None
        """
        point = rect.center
        for _ in range(NEWTON_ITERATIONS):
            value = self.func(point)
            if value == 0:
                return point
            derivative = (
                self.func(point + NEWTON_STEP) - self.func(point - NEWTON_STEP)
            ) / (2 * NEWTON_STEP)
            if derivative == 0:
                return None
            step = value / derivative
            point -= step
            if not rect.contains(point):
                return None
            if abs(step) < REFINE_TOLERANCE * 1e-4:
                return point
        return None

    def certify(self, point: complex, radius: float) -> bool:
        """Check that a small square around point holds one zero.

        :param point: candidate zero
        :param radius: half side of the square
        :return: whether the winding number is 1
        """
        box = _Rect(
            point.real - radius,
            point.real + radius,
            point.imag - radius,
            point.imag + radius,
        )
        try:
            return self.winding(box) == 1
        except _ContourHit:
            return False

    def isolate(
        self, rect: _Rect, count: int, tolerance: float
    ) -> T.List[complex]:
        """Bisect rect until every zero sits in a box of the tolerance.

        :param rect: rectangle
        :param count: number of zeros inside
        :param tolerance: final box size
        :return: zeros
        """
        if count == 0:
            return []
        if count == 1 and rect.size <= NEWTON_START:
            point = self.newton(rect)
            if point is not None and self.certify(point, tolerance):
                return [point]
            if rect.size <= tolerance:
                return [rect.center]
        elif rect.size <= tolerance:
            return [rect.center] * count

        for fraction in SPLIT_FRACTIONS:
            first, second = rect.split(fraction)
            try:
                first_count = self.winding(first)
            except _ContourHit:
                continue
            second_count = count - first_count
            if second_count < 0:
                raise ContourError(f"inconsistent winding inside {rect}")
            return self.isolate(first, first_count, tolerance) + self.isolate(
                second, second_count, tolerance
            )
        raise ContourError(f"every split of {rect} passes through a zero")


def _scan_function(chi: DirichletCharacter) -> T.Callable[[complex], complex]:
    if chi.is_principal():
        return lambda s: (s - 1) * l_value(chi, s)
    return functools.partial(l_value, chi)


def _scan_strip(
    task: T.Tuple[DirichletCharacter, _Rect, float, float]
) -> T.Tuple[T.Optional[T.List[complex]], T.Optional[complex]]:
    chi, rect, step, tolerance = task
    contour = _Contour(_scan_function(chi), step)
    try:
        count = contour.winding(rect)
        return contour.isolate(rect, count, tolerance), None
    except _ContourHit as ex:
        return None, ex.args[0]


def scan_zeros(
    chi: DirichletCharacter,
    T: float,
    sigma_min: float = 0.0,
    mapper: Mapper = map,
    grid_step: float = GRID_STEP,
    max_perturbations: int = MAX_PERTURBATIONS,
    perturbation: float = PERTURBATION,
    tolerance: float = REFINE_TOLERANCE,
) -> ZeroList:
    """Find the zeros of L(s, chi) with sigma_min < beta < 1, |gamma| <= T.

    The scanned rectangle spans max(sigma_min, 0.01) <= Re(s) <= 1.5.
    When an edge runs through a zero, every edge is moved outwards by
    another multiple of the perturbation and the scan is repeated.

    :param chi: primitive Dirichlet character
    :param T: box height, positive, at most MAX_SCAN_HEIGHT
    :param sigma_min: left end of the box
    :param mapper: map-like callable spreading strips over workers
    :param grid_step: initial spacing of points along the edges
    :param max_perturbations: contour moves allowed before giving up
    :param perturbation: size of one contour move
    :param tolerance: size of the box pinning each zero down
    :return: zero list tagged "scanned"
    """
    if not chi.is_primitive():
        raise NonPrimitiveCharacter(f"{chi} is not primitive")
    if T <= 0:
        raise ValueError(f"box height must be positive, got {T}")
    if T > MAX_SCAN_HEIGHT:
        raise ValueError(
            f"box height {T} is above the supported {MAX_SCAN_HEIGHT}"
        )
    sigma_min = max(sigma_min, 0.0)
    if sigma_min >= 1:
        return ZeroList((), sigma_min, T, q=chi.modulus, index=chi.index)

    strips = max(1, math.ceil(2 * T / STRIP_HEIGHT))
    if strips % 2 == 0:
        strips += 1
    hit = None
    for attempt in range(max_perturbations + 1):
        shift = attempt * perturbation
        left = max(sigma_min, LEFT_EDGE) - shift
        height = T + shift
        edges = np.linspace(-height, height, strips + 1)
        edges[1:-1] += shift
        tasks = [
            (chi, _Rect(left, RIGHT_EDGE, bottom, top), grid_step, tolerance)
            for bottom, top in zip(edges, edges[1:])
        ]
        results = list(mapper(_scan_strip, tasks))
        hits = [point for found, point in results if found is None]
        if hits:
            hit = hits[0]
            continue
        zeros = [
            rho
            for found, _ in results
            for rho in found or ()
            if sigma_min < rho.real < 1 and abs(rho.imag) <= T
        ]
        return ZeroList(
            zeros=tuple(zeros),
            sigma_min=sigma_min,
            T=T,
            q=chi.modulus,
            index=chi.index,
        )
    raise ContourError(
        f"contour for {chi} still hits a zero near {hit} after "
        f"{max_perturbations} perturbations"
    )


def critical_line_sign_changes(
    chi: DirichletCharacter, T: float, step: float = SIGN_CHANGE_STEP
) -> int:
    """Count sign changes of the real-rotated L-function on Re(s) = 1/2.

    :param chi: real primitive Dirichlet character
    :param T: height
    :param step: grid spacing in t
    :return: number of sign changes for |t| <= T
    """
    if not chi.is_real() or not chi.is_primitive():
        raise NonPrimitiveCharacter(f"{chi} must be real and primitive")
    count = max(2, math.ceil(2 * T / step))
    heights = np.linspace(-T, T, count + 1)
    values = np.array([hardy_z(chi, t) for t in heights])
    signs = np.sign(values[values != 0])
    return int(np.count_nonzero(signs[1:] != signs[:-1]))
