import random

import pytest

from semitoric.cone import cone_from_rays, contains, full_space, zero_cone
from semitoric.fan import complement_cells, complement_closure_dual
from semitoric.oracle import (
    BoxSpec,
    in_conic_hull,
    in_lattice,
    oracle_dual_points,
    oracle_ends_2d,
    oracle_lattice_cone,
)
from semitoric.randomgen import random_fan

from conftest import zero_fan


def test_box_spec():
    with pytest.raises(ValueError):
        BoxSpec(0, 2)
    assert len(list(BoxSpec(1, 3).points())) == 27


def test_dual_points_plane():
    assert oracle_dual_points([full_space(2)], BoxSpec(3, 2)) == {(0, 0)}


def test_dual_points_y1(y1_fan):
    pts = oracle_dual_points(complement_cells(y1_fan), BoxSpec(3, 2))
    assert pts == {(0, 0), (0, -1), (0, -2), (0, -3)}


def test_dual_points_random_against_exact():
    rng = random.Random(2)
    done = 0
    while done < 6:
        fan = random_fan(rng, 3)
        cells = complement_cells(fan)
        if not cells:
            continue
        box = BoxSpec(4, 3)
        C = complement_closure_dual(fan)
        assert oracle_dual_points(cells, box) == {l for l in box.points() if contains(C, l)}
        done += 1


def test_lattice_cone():
    L = [(0, 1)]
    assert oracle_lattice_cone(L, cone_from_rays(2, [(0, -1)]), BoxSpec(2, 2)) == (0, -1)
    assert oracle_lattice_cone(L, cone_from_rays(2, [(-1, 0)]), BoxSpec(8, 2)) is None
    assert oracle_lattice_cone([(1, 0), (0, 1)], zero_cone(2), BoxSpec(5, 2)) is None


def test_ends_2d_fixtures(y1_fan, two_end_fan):
    assert oracle_ends_2d(zero_fan(2)) == 1
    assert oracle_ends_2d(two_end_fan) == 2
    assert oracle_ends_2d(y1_fan) == 1
    with pytest.raises(ValueError):
        oracle_ends_2d(zero_fan(3))


def test_ends_2d_complete(p2_fan):
    with pytest.raises(ValueError):
        oracle_ends_2d(p2_fan)


def test_helpers():
    assert in_lattice([(2, 0), (0, 3)], (4, 3))
    assert not in_lattice([(2, 0), (0, 3)], (1, 3))
    assert in_conic_hull([(1, 0), (0, 1)], (2, 3))
    assert not in_conic_hull([(1, 0), (0, 1)], (-1, 3))
