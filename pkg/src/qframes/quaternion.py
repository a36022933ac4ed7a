"""Scalar algebra of the quaternion division ring.

Components are kept in (w, x, y, z) order everywhere, for the element
q = w + x*i + y*j + z*k with i*i = j*j = k*k = -1, i*j = -j*i = k,
j*k = -k*j = i, k*i = -i*k = j.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DivisionByZero

_REAL_TYPES = (int, float)


@dataclass(frozen=True)
class Quaternion:
    """One quaternion, four IEEE-754 doubles in (w, x, y, z) order."""

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "w", float(self.w))
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        object.__setattr__(self, "z", float(self.z))

    @property
    def components(self) -> tuple[float, float, float, float]:
        return (self.w, self.x, self.y, self.z)

    @property
    def real(self) -> float:
        return self.w

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm_sq(self) -> float:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def __abs__(self) -> float:
        return math.hypot(self.w, self.x, self.y, self.z)

    def inv(self) -> "Quaternion":
        """Multiplicative inverse conj(q) / |q|^2."""
        n2 = self.norm_sq()
        if n2 == 0.0:
            raise DivisionByZero("the zero quaternion has no inverse")
        return Quaternion(self.w / n2, -self.x / n2, -self.y / n2, -self.z / n2)

    def __add__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other) -> "Quaternion":
        if isinstance(other, Quaternion):
            return Quaternion(
                self.w * other.w - self.x * other.x - self.y * other.y - self.z * other.z,
                self.w * other.x + self.x * other.w + self.y * other.z - self.z * other.y,
                self.w * other.y - self.x * other.z + self.y * other.w + self.z * other.x,
                self.w * other.z + self.x * other.y - self.y * other.x + self.z * other.w,
            )
        if isinstance(other, _REAL_TYPES):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other) -> "Quaternion":
        # reals are central, so left and right scaling agree
        if isinstance(other, _REAL_TYPES):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        return NotImplemented

    def __truediv__(self, other) -> "Quaternion":
        if isinstance(other, _REAL_TYPES):
            return Quaternion(self.w / other, self.x / other, self.y / other, self.z / other)
        return NotImplemented

    def isclose(self, other: "Quaternion", atol: float = 1e-12) -> bool:
        return (
            abs(self.w - other.w) <= atol
            and abs(self.x - other.x) <= atol
            and abs(self.y - other.y) <= atol
            and abs(self.z - other.z) <= atol
        )

    def __repr__(self) -> str:
        return f"Quaternion({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r})"


def mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product p*q (non-commutative)."""
    return p * q


def conj(q: Quaternion) -> Quaternion:
    return q.conj()


def inv(q: Quaternion) -> Quaternion:
    return q.inv()


def as_quaternion(value) -> Quaternion:
    """Coerce a real number, a 4-sequence, or a Quaternion."""
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, _REAL_TYPES):
        return Quaternion(float(value))
    seq = list(value)
    if len(seq) != 4:
        raise ValueError("expected 4 components (w, x, y, z)")
    return Quaternion(*(float(c) for c in seq))


ZERO = Quaternion(0.0, 0.0, 0.0, 0.0)
ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)
