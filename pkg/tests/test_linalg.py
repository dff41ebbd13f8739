from fractions import Fraction

from thurston.linalg import (
    ConeDescription, Ray, enumerate_extreme_rays, in_convex_hull,
    invert_matrix, is_extreme_ray, nullspace, rank_int,
    remove_redundant_points, solve_linear, solve_lp,
)


def test_rank_and_nullspace():
    a = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert rank_int(a) == 2
    ns = nullspace(a, 3)
    assert len(ns) == 1
    v = ns[0]
    for row in a:
        assert sum(c * x for c, x in zip(row, v)) == 0


def test_solve_linear_and_inverse():
    a = [[2, 1], [1, 3]]
    x = solve_linear(a, [5, 10])
    assert x == (Fraction(1), Fraction(3))
    inv = invert_matrix(a)
    assert inv[0][0] == Fraction(3, 5)
    assert solve_linear([[1, 1], [2, 2]], [1, 3]) is None


def test_orthant_rays():
    cone = ConeDescription(rows=(), dim=3)
    rays = enumerate_extreme_rays(cone)
    assert sorted(r.coords for r in rays) == [
        (0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_line_in_orthant():
    cone = ConeDescription(rows=((1, -1),), dim=2)
    rays = enumerate_extreme_rays(cone)
    assert [r.coords for r in rays] == [(1, 1)]


def test_zero_only_cone():
    cone = ConeDescription(rows=((1, 1),), dim=2)
    assert enumerate_extreme_rays(cone) == []


def test_rays_satisfy_equations_and_minimality():
    rows = ((1, -1, 0, 0), (0, 1, -1, -1))
    cone = ConeDescription(rows=rows, dim=4)
    rays = enumerate_extreme_rays(cone)
    assert rays
    supports = set()
    for r in rays:
        for row in rows:
            assert sum(c * x for c, x in zip(row, r.coords)) == 0
        assert all(x >= 0 for x in r.coords)
        assert is_extreme_ray(cone, r.coords)
        assert r.support not in supports
        supports.add(r.support)


def test_ray_canonical_form():
    r = Ray.from_vector((0, 4, 6))
    assert r.coords == (0, 2, 3)
    assert r.support == frozenset({1, 2})


def test_lp_basic_optimum():
    res = solve_lp([1, 0], ([[1, 1]], [1]), [(0, None), (0, None)])
    assert res.optimal
    assert res.value == 1
    assert res.x == (1, 0)
    assert res.dual is not None


def test_lp_infeasible():
    res = solve_lp([1], ([[1]], [-1]), [(0, None)])
    assert res.status == "infeasible"


def test_lp_unbounded():
    res = solve_lp([1], ([], []), [(None, None)])
    assert res.status == "unbounded"


def test_lp_box_bounds():
    res = solve_lp([1, 1], ([[1, -1]], [0]),
                   [(0, Fraction(3, 2)), (0, 2)])
    assert res.optimal
    assert res.value == 3
    assert res.x == (Fraction(3, 2), Fraction(3, 2))


def test_lp_free_variables():
    res = solve_lp([-1], ([[2]], [3]), [(None, None)])
    assert res.optimal
    assert res.value == Fraction(-3, 2)
    assert res.x == (Fraction(3, 2),)


def test_lp_minimize():
    res = solve_lp([1, 2], ([[1, 1]], [4]), [(0, None), (0, None)],
                   maximize=False)
    assert res.optimal
    assert res.value == 4
    assert res.x == (4, 0)


def test_hull_midpoint_removed():
    pts = [(Fraction(0),), (Fraction(1),), (Fraction(1, 2),)]
    assert remove_redundant_points(pts) == [(0,), (1,)]


def test_hull_square_center_removed():
    pts = [(1, 0), (0, 1), (-1, 0), (0, -1), (0, 0)]
    out = remove_redundant_points(pts)
    assert (Fraction(0), Fraction(0)) not in out
    assert len(out) == 4


def test_hull_duplicates_keep_first():
    pts = [(0, 0), (1, 1), (0, 0), (2, 2)]
    out = remove_redundant_points(pts)
    assert out == [(0, 0), (2, 2)]


def test_in_convex_hull_dim0():
    assert in_convex_hull((), [()])
    assert not in_convex_hull((), [])
