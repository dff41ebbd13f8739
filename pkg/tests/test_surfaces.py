import random
from fractions import Fraction

import pytest

from thurston.chi import chi_star
from thurston.coords import (NormalVector, build_matching_system, disc_index,
                             forget_orientation, vertex_linking_vector)
from thurston.fixtures import load, names
from thurston.surfaces import (add_compatible, assign_transverse_orientation,
                               is_algebraically_aspherical,
                               reconstruct_surface)


@pytest.fixture(scope="module")
def d2():
    return load("d2")


def _two_quad(kind):
    x = [0] * 14
    x[disc_index(0, kind, oriented=False)] = 1
    x[disc_index(1, kind, oriented=False)] = 1
    return NormalVector(tuple(x), False)


def test_vertex_link_reconstruction(d2):
    x = forget_orientation(vertex_linking_vector(d2, 0, 1, True))
    s = reconstruct_surface(d2, x)
    assert len(s.components) == 1
    c = s.components[0]
    assert (c.chi, c.orientable, c.vertex_linking, c.vertex_class,
            c.genus) == (2, True, True, 0, 0)


def test_two_quad_sphere(d2):
    s = reconstruct_surface(d2, _two_quad(4))
    assert len(s.components) == 1
    c = s.components[0]
    assert c.chi == 2 and c.orientable and not c.vertex_linking


def test_parallel_copies(d2):
    x = forget_orientation(vertex_linking_vector(d2, 0, 1, True)).scale(2)
    s = reconstruct_surface(d2, x)
    assert len(s.components) == 2
    assert all(c.chi == 2 and c.vertex_linking for c in s.components)


def test_reconstruction_preconditions(d2):
    with pytest.raises(ValueError, match="nonnegative"):
        reconstruct_surface(d2, NormalVector((-1,) + (0,) * 13, False))
    with pytest.raises(ValueError, match="integral"):
        reconstruct_surface(
            d2, NormalVector((Fraction(1, 2),) + (0,) * 13, False))
    bad = [0] * 14
    bad[disc_index(0, 4, oriented=False)] = 1
    bad[disc_index(0, 5, oriented=False)] = 1
    with pytest.raises(ValueError, match="admissible"):
        reconstruct_surface(d2, NormalVector(tuple(bad), False))
    nonker = [0] * 14
    nonker[disc_index(0, 0, oriented=False)] = 1
    with pytest.raises(ValueError, match="matching"):
        reconstruct_surface(d2, NormalVector(tuple(nonker), False))


def test_determinism(d2):
    x = _two_quad(5)
    a = reconstruct_surface(d2, x)
    b = reconstruct_surface(load("d2"), x)
    assert a.report() == b.report()
    assert a.discs == b.discs
    assert a.gluings == b.gluings


def test_chi_oracle_on_corpus():
    """Euler functional equals V - E + F of the reconstruction for random
    admissible integral kernel vectors built from compatible vertex
    surfaces."""
    from thurston.linalg import ConeDescription, enumerate_extreme_rays
    from thurston.coords import is_admissible, num_coords
    rng = random.Random(41)
    checked = 0
    for name in names():
        tri = load(name)
        m = build_matching_system(tri, oriented=False)
        cone = ConeDescription(tuple(m.rows), m.num_cols)
        rays = [r for r in enumerate_extreme_rays(cone)
                if is_admissible(NormalVector(r.coords, False))]
        for _ in range(12):
            total = NormalVector((0,) * m.num_cols, False)
            for r in sorted(rays, key=lambda r: r.coords):
                cand = total + NormalVector(r.coords, False).scale(
                    rng.randint(0, 2))
                if is_admissible(cand):
                    total = cand
            if all(c == 0 for c in total.coords):
                continue
            surface = reconstruct_surface(tri, total, m)
            assert chi_star(tri, total) == surface.total_chi
            checked += 1
    assert checked >= 40


def test_assign_orientations(d2):
    link_out = vertex_linking_vector(d2, 0, 1, True)
    link_in = vertex_linking_vector(d2, 0, -1, True)
    x = forget_orientation(link_out)
    s = reconstruct_surface(d2, x)
    assert assign_transverse_orientation(d2, s, link_out) is not None
    assert assign_transverse_orientation(d2, s, link_in) is not None
    mixed = NormalVector(tuple(
        1 if i in (disc_index(0, 0, 1, True), disc_index(1, 0, -1, True))
        else 0 for i in range(28)), True)
    assert assign_transverse_orientation(d2, s, mixed) is None

    both = add_compatible(link_out, link_in)
    s2 = reconstruct_surface(d2, forget_orientation(both))
    assert assign_transverse_orientation(d2, s2, both) == [1, -1]


def test_assign_requires_matching_projection(d2):
    s = reconstruct_surface(
        d2, forget_orientation(vertex_linking_vector(d2, 0, 1, True)))
    wrong = vertex_linking_vector(d2, 1, 1, True)
    with pytest.raises(ValueError, match="project"):
        assign_transverse_orientation(d2, s, wrong)


def test_aspherical_basics(d2):
    zero = NormalVector((0,) * 28, True)
    assert is_algebraically_aspherical(d2, zero)
    link = vertex_linking_vector(d2, 0, 1, True)
    assert not is_algebraically_aspherical(d2, link)
    assert not is_algebraically_aspherical(d2, link.scale(Fraction(2, 5)))


def test_add_compatible_rules(d2):
    link = vertex_linking_vector(d2, 0, 1, True)
    zero = NormalVector((0,) * 28, True)
    assert (link + zero).coords == link.coords
    with pytest.raises(ValueError, match="tetrahedron 0"):
        add_compatible(_two_quad(4), _two_quad(5))


def test_disjoint_links_sum(d2):
    a = forget_orientation(vertex_linking_vector(d2, 0, 1, True))
    b = forget_orientation(vertex_linking_vector(d2, 1, 1, True))
    s = reconstruct_surface(d2, add_compatible(a, b))
    assert len(s.components) == 2
    assert all(c.chi == 2 for c in s.components)
