import math
import random
from fractions import Fraction

import pytest

from honeycombs.plane import (Direction, EdgeClass, PointB, constant_slot,
                              point, project_to_screen, rat, rat_str)


def test_rat_parsing_and_formatting():
    assert rat("3/4") == Fraction(3, 4)
    assert rat("-7/2") == Fraction(-7, 2)
    assert rat(5) == Fraction(5)
    assert rat_str(Fraction(3, 4)) == "3/4"
    assert rat_str(Fraction(-8, 2)) == "-4"
    assert rat_str(Fraction(0)) == "0"


def test_rat_arithmetic_exact_roundtrip():
    rng = random.Random(0)
    for _ in range(300):
        a = Fraction(rng.randint(-999, 999), rng.randint(1, 99))
        b = Fraction(rng.randint(-999, 999), rng.randint(1, 99))
        assert (a + b) - b == a
        if b != 0:
            assert (a * b) / b == a


def test_direction_vectors_sum_to_zero_and_negate():
    for d in Direction:
        assert sum(d.vector) == 0
        assert tuple(-c for c in d.vector) == d.opposite.vector


def test_constant_slot_examples():
    assert constant_slot(Direction.NW) is EdgeClass.X
    assert constant_slot(Direction.S) is EdgeClass.Z
    assert constant_slot(Direction.NE) is EdgeClass.Y
    assert constant_slot(Direction.SE) is EdgeClass.X
    assert constant_slot(Direction.N) is EdgeClass.Z
    assert constant_slot(Direction.SW) is EdgeClass.Y


def test_class_slot_is_zero_in_direction_vector():
    for d in Direction:
        assert d.vector[constant_slot(d).slot] == 0


def test_point_invariant():
    with pytest.raises(ValueError):
        point(1, 1, 1)
    p = point(1, 2, -3)
    assert p.coord(EdgeClass.X) == 1
    assert p.coord(EdgeClass.Y) == 2
    assert p.coord(EdgeClass.Z) == -3


def test_point_slot_recovery():
    rng = random.Random(1)
    for _ in range(100):
        x = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
        y = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
        p = PointB(x, y, -x - y)
        assert (p.coord(EdgeClass.X), p.coord(EdgeClass.Y),
                p.coord(EdgeClass.Z)) == p.as_tuple()


def test_projection_pins():
    assert project_to_screen(point(0, 0, 0)) == (0.0, 0.0)
    assert project_to_screen(point(-1, 1, 0)) == (0.0, 1.0)  # N
    sx, sy = project_to_screen(point(-1, 0, 1))              # NE
    assert abs(sx - math.sqrt(3) / 2) < 1e-15 and abs(sy - 0.5) < 1e-15
    # NW = N - NE under the linear map
    sx, sy = project_to_screen(point(0, 1, -1))
    assert abs(sx + math.sqrt(3) / 2) < 1e-15 and abs(sy - 0.5) < 1e-15


def test_projection_unit_vectors_at_sixty_degrees():
    angles = []
    for d in Direction:
        sx, sy = project_to_screen(point(*d.vector))
        assert abs(math.hypot(sx, sy) - 1.0) < 1e-12
        angles.append(math.atan2(sy, sx))
    angles.sort()
    for a, b in zip(angles, angles[1:]):
        assert abs((b - a) - math.pi / 3) < 1e-12
