import random
from math import comb

import pytest

from arrangio.analysis import h_part
from arrangio.errors import ParameterOutOfRange, TooFewPoints
from arrangio.fields import QQ, Cyclotomic
from arrangio.generators import (
    GeneratorRecipe,
    boroczky,
    boroczky_points,
    dual_arrangement,
    example_nine,
    fano,
    hesse_dual,
    hesse_points,
    near_pencil,
    random_supersolvable,
)
from arrangio.projective import Line, Point, dot


@pytest.mark.parametrize("m", range(3, 9))
def test_boroczky_shape(m):
    A = boroczky(m)
    assert A.n == 2 * m
    assert A.is_real()
    assert A.simple_count == m
    assert A.max_multiplicity == m
    assert A.sing_count == comb(m + 1, 2) + 1
    assert A.supersolvable_witness() == Point((0, 0, 1), A.spec)
    assert h_part(A).sing_count == comb(m, 2)


@pytest.mark.parametrize("m", range(3, 8))
def test_boroczky_matches_dual_point_set(m):
    assert dual_arrangement(boroczky_points(m)).lines == boroczky(m).lines


def test_boroczky_rejects_small_m():
    with pytest.raises(ParameterOutOfRange):
        boroczky(2)
    with pytest.raises(ParameterOutOfRange):
        boroczky_points(1)


def test_example_nine():
    A = example_nine()
    assert (A.n, A.max_multiplicity, A.sing_count) == (9, 4, 13)


def test_hesse_points_are_inflections_of_fermat_cubic():
    pts = hesse_points()
    assert len(set(pts)) == 9
    for p in pts:
        x, y, z = p.coords
        assert (x ** 3 + y ** 3 + z ** 3).is_zero()


def test_hesse_dual():
    A = hesse_dual()
    assert A.spec == Cyclotomic(3)
    assert A.t_k == {3: 12}
    assert not A.is_supersolvable()
    assert not A.is_real()


def test_fano():
    A = fano()
    assert A.n == 7 and A.t_k == {3: 7}


@pytest.mark.parametrize("n", [4, 5, 6, 9])
def test_near_pencil(n):
    A = near_pencil(n)
    assert A.n == n
    assert A.t_k == {2: n - 1, n - 1: 1}
    with pytest.raises(ParameterOutOfRange):
        near_pencil(3)


def test_dual_arrangement():
    pts = [Point(c, QQ) for c in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 0, 0)]]
    A = dual_arrangement(pts)
    assert A.lines == (Line((1, 0, 0), QQ), Line((0, 1, 0), QQ), Line((0, 0, 1), QQ))
    with pytest.raises(TooFewPoints):
        dual_arrangement(pts[:1])


def test_random_supersolvable_has_modular_apex():
    rng = random.Random(5)
    apex = Point((0, 0, 1), QQ)
    for _ in range(100):
        A = random_supersolvable(rng)
        if A.rank == 3:
            assert A.is_modular(apex)
        assert any(dot(apex.coords, l.coords).is_zero() for l in A.lines)


def test_recipe():
    assert GeneratorRecipe("near-pencil", {"n": 5}).build().n == 5
    with pytest.raises(ParameterOutOfRange):
        GeneratorRecipe("nope").build()
