"""Exact angle and position arithmetic.

Angles live in the integer lattice a*pi/3 + b*alpha.  Positions are sparse
integer combinations sum_b (u_b + v_b*w) * e^(i*b*alpha) with w = e^(i*pi/3),
reduced to the {1, w} basis via w^2 = w - 1.  For generic alpha the powers
e^(i*b*alpha) are independent, so equality of coefficient maps is exact
geometric equality; for numeric alpha callers fall back to tolerance 1e-9.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .alpha import TOL, AlphaSpec
from .errors import NoNumericValue

PI3 = math.pi / 3.0
TWO_PI = 2.0 * math.pi

# w^a in the {1, w} basis, a = 0..5.
OMEGA_POW = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))


def _eis_mul(u1: int, v1: int, u2: int, v2: int) -> tuple[int, int]:
    # (u1 + v1 w)(u2 + v2 w) with w^2 = w - 1
    return (u1 * u2 - v1 * v2, u1 * v2 + v1 * u2 + v1 * v2)


@dataclass(frozen=True, order=True)
class SymbolicAngle:
    """An angle a*pi/3 + b*alpha with integer coefficients."""

    a: int
    b: int

    def __add__(self, other: "SymbolicAngle") -> "SymbolicAngle":
        return SymbolicAngle(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "SymbolicAngle") -> "SymbolicAngle":
        return SymbolicAngle(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "SymbolicAngle":
        return SymbolicAngle(-self.a, -self.b)

    def __mul__(self, n: int) -> "SymbolicAngle":
        return SymbolicAngle(self.a * n, self.b * n)

    __rmul__ = __mul__

    def value(self, alpha_rad: float) -> float:
        return self.a * PI3 + self.b * alpha_rad

    def radians(self, alpha: AlphaSpec) -> float:
        if not alpha.is_numeric:
            raise NoNumericValue("cannot evaluate angle at generic alpha")
        return self.value(alpha.radians())


ANGLE_A = SymbolicAngle(0, 1)  # alpha, the sharp shield corner
ANGLE_B = SymbolicAngle(4, -1)  # beta = 4pi/3 - alpha
ANGLE_T = SymbolicAngle(1, 0)  # pi/3, the triangle corner
FULL_TURN = SymbolicAngle(6, 0)
HALF_TURN = SymbolicAngle(3, 0)


def angle_radians(x: SymbolicAngle, alpha: AlphaSpec) -> float:
    """Numeric value of a symbolic angle; requires numeric alpha."""
    return x.radians(alpha)


@dataclass(frozen=True, order=True)
class Direction:
    """An edge direction a*pi/3 + b*alpha, with a normalized into [0, 6)."""

    a: int
    b: int

    @staticmethod
    def of(a: int, b: int) -> "Direction":
        return Direction(a % 6, b)

    def plus(self, ang: SymbolicAngle) -> "Direction":
        return Direction.of(self.a + ang.a, self.b + ang.b)

    def opposite(self) -> "Direction":
        return Direction.of(self.a + 3, self.b)

    def minus(self, other: "Direction") -> SymbolicAngle:
        return SymbolicAngle(self.a - other.a, self.b - other.b)

    def value(self, alpha_rad: float) -> float:
        return (self.a * PI3 + self.b * alpha_rad) % TWO_PI

    def key(self, alpha: AlphaSpec):
        """Equality key: exact for generic, 1e-9-rounded value otherwise."""
        if alpha.is_numeric:
            return round(self.value(alpha.radians()), 9)
        return (self.a, self.b)


@dataclass(frozen=True)
class ExactPoint:
    """Sparse exact point: coeffs is a sorted tuple of (b, u, v) triples."""

    coeffs: tuple[tuple[int, int, int], ...] = ()

    @staticmethod
    def origin() -> "ExactPoint":
        return ExactPoint()

    @staticmethod
    def from_dict(d: dict[int, tuple[int, int]]) -> "ExactPoint":
        items = tuple(
            sorted((b, u, v) for b, (u, v) in d.items() if (u, v) != (0, 0))
        )
        return ExactPoint(items)

    def to_dict(self) -> dict[int, tuple[int, int]]:
        return {b: (u, v) for b, u, v in self.coeffs}

    def _combine(self, other: "ExactPoint", sign: int) -> "ExactPoint":
        d = self.to_dict()
        for b, u, v in other.coeffs:
            cu, cv = d.get(b, (0, 0))
            d[b] = (cu + sign * u, cv + sign * v)
        return ExactPoint.from_dict(d)

    def __add__(self, other: "ExactPoint") -> "ExactPoint":
        return self._combine(other, 1)

    def __sub__(self, other: "ExactPoint") -> "ExactPoint":
        return self._combine(other, -1)

    def __neg__(self) -> "ExactPoint":
        return ExactPoint(tuple((b, -u, -v) for b, u, v in self.coeffs))

    def scaled(self, n: int) -> "ExactPoint":
        if n == 0:
            return ExactPoint()
        return ExactPoint(tuple((b, n * u, n * v) for b, u, v in self.coeffs))

    def step(self, d: Direction) -> "ExactPoint":
        """This point plus the unit vector w^a * e^(i*b*alpha)."""
        return self + unit_vector(d)

    def rotated(self, ang: SymbolicAngle) -> "ExactPoint":
        """Rotation about the origin by a*pi/3 + b*alpha."""
        wu, wv = OMEGA_POW[ang.a % 6]
        d: dict[int, tuple[int, int]] = {}
        for b, u, v in self.coeffs:
            d[b + ang.b] = _eis_mul(u, v, wu, wv)
        return ExactPoint.from_dict(d)

    def conj(self) -> "ExactPoint":
        """Reflection across the real axis."""
        d = {}
        for b, u, v in self.coeffs:
            d[-b] = (u + v, -v)
        return ExactPoint.from_dict(d)

    def eval(self, alpha_rad: float) -> complex:
        w = cmath.exp(1j * PI3)
        z = 0j
        for b, u, v in self.coeffs:
            z += (u + v * w) * cmath.exp(1j * b * alpha_rad)
        return z

    def xy(self, alpha_rad: float) -> tuple[float, float]:
        z = self.eval(alpha_rad)
        return (z.real, z.imag)

    def is_origin(self) -> bool:
        return not self.coeffs


def unit_vector(d: Direction) -> ExactPoint:
    u, v = OMEGA_POW[d.a % 6]
    return ExactPoint.from_dict({d.b: (u, v)})


def unit_step(p: ExactPoint, d: Direction) -> ExactPoint:
    """Exact addition of the unit vector in direction d."""
    return p.step(d)


def angle_sum(angles: Iterable[SymbolicAngle]) -> SymbolicAngle:
    a = b = 0
    for x in angles:
        a += x.a
        b += x.b
    return SymbolicAngle(a, b)


def full_turn_check(angles: Iterable[SymbolicAngle], alpha: AlphaSpec) -> bool:
    """True iff the angles sum to exactly 2*pi under the given alpha."""
    total = angle_sum(angles)
    if alpha.kind == "generic":
        return total == FULL_TURN
    if alpha.kind == "rational":
        s, t = alpha.frac.numerator, alpha.frac.denominator
        return total.a * t + 3 * s * total.b == 6 * t
    return abs(total.value(alpha.radians()) - TWO_PI) < TOL


def angle_units(x: SymbolicAngle, frac: Fraction) -> int:
    """Angle as an integer multiple of pi/(3t) for rational alpha s*pi/t."""
    return x.a * frac.denominator + 3 * frac.numerator * x.b
