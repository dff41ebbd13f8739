"""The linear Euler characteristic functional on disc coordinates.

A disc contributes 1 - (#sides)/2 + sum over its corners of 1/degree,
where the degree of an edge class counts the tetrahedron corners it
contains.  Summed over an unbranched normal immersion this telescopes to
V - E + F of the induced cell structure, so the functional evaluates to
the Euler characteristic of the surface.  The value of a single disc's
term does not depend on its transverse orientation.
"""

from fractions import Fraction

from .coords import disc_edges, disc_of_index, num_coords
from .triangulation import EDGE_INDEX


def chi_star_coefficients(tri, oriented=True):
    """Per-column values of the functional, as exact rationals."""
    t = tri.num_tets
    coeffs = []
    for i in range(num_coords(t, oriented)):
        if oriented:
            tet, kind, _ = disc_of_index(i, True)
        else:
            tet, kind = disc_of_index(i, False)
        edges = disc_edges(kind)
        val = 1 - Fraction(len(edges), 2)
        for pair in edges:
            cls = tri.edge_class[(tet, EDGE_INDEX[pair])]
            val += Fraction(1, tri.degrees[cls])
        coeffs.append(val)
    return tuple(coeffs)


def chi_star(tri, x):
    """Exact rational value of the functional on a NormalVector."""
    coeffs = chi_star_coefficients(tri, x.oriented)
    return sum((c * v for c, v in zip(coeffs, x.coords)), Fraction(0))
