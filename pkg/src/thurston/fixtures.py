"""Fixture corpus: small closed orientable triangulations used by the test
suite and handy for experiments.

Every gluing table below was found by exhaustive search over all 2-tet
(resp. 1-tet) face pairings, or randomized search at 3 tetrahedra, keeping
only tables that pass full validation (closed, orientable, all vertex
links 2-spheres, no reversed self-identified edge).  The quoted properties
(vertex counts, Betti numbers, 0-efficiency diagnostics) are recomputed by
the tests rather than trusted.
"""

import json

from .triangulation import triangulation_from_json

# The doubled tetrahedron: two tetrahedra glued along all four faces by
# the identity.  A 2-tet, 4-vertex triangulation of the 3-sphere; not
# 0-efficient (it carries non-vertex-linking normal 2-spheres made of two
# quads).
D2 = {"tets": [
    [[1, "0123"], [1, "0123"], [1, "0123"], [1, "0123"]],
    [[0, "0123"], [0, "0123"], [0, "0123"], [0, "0123"]],
]}

# One tetrahedron, one vertex, b1 = 0 (a small lens-type space).
ONE_TET = {"tets": [
    [[0, "1230"], [0, "3012"], [0, "1230"], [0, "3012"]],
]}

# Two tetrahedra, one vertex, b1 = 1: the 2-tet triangulation of a
# sphere-bundle-type manifold.  Reducible: the 0-efficiency diagnostic
# finds a non-vertex-linking normal sphere, and the strict norm ball is
# degenerate (the generator has norm zero).
TWO_TET_B1 = {"tets": [
    [[0, "1230"], [0, "3012"], [1, "2301"], [1, "2301"]],
    [[0, "2301"], [0, "2301"], [1, "1230"], [1, "3012"]],
]}

# Two tetrahedra, one vertex, b1 = 0; no non-vertex-linking sphere among
# its vertex surfaces.
TWO_TET_EFFICIENT = {"tets": [
    [[0, "1230"], [0, "3012"], [1, "1203"], [1, "3021"]],
    [[0, "2013"], [0, "1320"], [1, "1230"], [1, "3012"]],
]}

# Three tetrahedra, one vertex, b1 = 0.
THREE_TET = {"tets": [
    [[2, "0312"], [0, "1302"], [2, "3021"], [0, "2031"]],
    [[1, "2031"], [2, "1302"], [1, "1302"], [2, "2031"]],
    [[0, "0231"], [1, "1302"], [0, "1320"], [1, "2031"]],
]}

TABLES = {
    "d2": D2,
    "one_tet": ONE_TET,
    "two_tet_b1": TWO_TET_B1,
    "two_tet_efficient": TWO_TET_EFFICIENT,
    "three_tet": THREE_TET,
}


def names():
    return sorted(TABLES)


def fixture_json(name):
    return json.dumps(TABLES[name])


def load(name):
    """Parsed, validated triangulation with skeleton for a corpus entry."""
    return triangulation_from_json(fixture_json(name))
