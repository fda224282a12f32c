"""Exact arithmetic and the geometry of the plane x + y + z = 0.

All semantic quantities (edge coordinates, boundary values, cone data) are
exact rationals; floats appear only in screen projection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

Rat = Fraction


def rat(value: int | str | Fraction) -> Rat:
    """Parse a rational from an int, a Fraction, or a "p/q" / "p" string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(str(value).strip())


def rat_str(q: Rat) -> str:
    """Serialize a rational as "p/q", or "p" when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Direction(Enum):
    """The six cardinal directions of the plane, with coordinate vectors."""

    NW = (0, 1, -1)
    N = (-1, 1, 0)
    NE = (-1, 0, 1)
    SE = (0, -1, 1)
    S = (1, -1, 0)
    SW = (1, 0, -1)

    @property
    def vector(self) -> tuple[int, int, int]:
        return self.value

    @property
    def opposite(self) -> "Direction":
        return _OPPOSITE[self]


_OPPOSITE = {
    Direction.NW: Direction.SE,
    Direction.SE: Direction.NW,
    Direction.N: Direction.S,
    Direction.S: Direction.N,
    Direction.NE: Direction.SW,
    Direction.SW: Direction.NE,
}


class EdgeClass(Enum):
    """Coordinate class of an edge: which coordinate is constant along it.

    X: NW/SE axis (first coordinate constant),
    Y: NE/SW axis (second coordinate constant),
    Z: N/S axis (third coordinate constant).
    """

    X = 0
    Y = 1
    Z = 2

    @property
    def slot(self) -> int:
        return self.value


def constant_slot(d: Direction) -> EdgeClass:
    """The coordinate class that is constant along direction ``d``."""
    vx, vy, vz = d.vector
    if vx == 0:
        return EdgeClass.X
    if vy == 0:
        return EdgeClass.Y
    return EdgeClass.Z


# Directions whose edges belong to a given class, as (positive, negative)
# orientation representatives used by honeycomb geometry.
CLASS_DIRECTIONS = {
    EdgeClass.X: (Direction.NW, Direction.SE),
    EdgeClass.Y: (Direction.NE, Direction.SW),
    EdgeClass.Z: (Direction.N, Direction.S),
}


@dataclass(frozen=True)
class PointB:
    """A point of the plane B = {(x, y, z) : x + y + z = 0}, exact."""

    x: Rat
    y: Rat
    z: Rat

    def __post_init__(self) -> None:
        if self.x + self.y + self.z != 0:
            raise ValueError(f"point {self} not on x+y+z=0")

    def coord(self, cls: EdgeClass) -> Rat:
        return (self.x, self.y, self.z)[cls.slot]

    def translate(self, d: Direction, t: Rat) -> "PointB":
        vx, vy, vz = d.vector
        return PointB(self.x + t * vx, self.y + t * vy, self.z + t * vz)

    def add(self, other: "PointB") -> "PointB":
        return PointB(self.x + other.x, self.y + other.y, self.z + other.z)

    def sub(self, other: "PointB") -> "PointB":
        return PointB(self.x - other.x, self.y - other.y, self.z - other.z)

    def as_tuple(self) -> tuple[Rat, Rat, Rat]:
        return (self.x, self.y, self.z)


def point(x: int | str | Fraction, y: int | str | Fraction,
          z: int | str | Fraction) -> PointB:
    return PointB(rat(x), rat(y), rat(z))


ORIGIN = PointB(Fraction(0), Fraction(0), Fraction(0))

_SQRT3_2 = math.sqrt(3.0) / 2.0


def project_to_screen(p: PointB) -> tuple[float, float]:
    """Project onto screen coordinates; the unique linear map with
    N -> (0, 1) and NE -> (sqrt(3)/2, 1/2).  Screen y grows northward.

    Decomposing p = y*N + z*NE (valid on B) gives the closed form below.
    """
    y = float(p.y)
    z = float(p.z)
    return (z * _SQRT3_2, y + z / 2.0)
