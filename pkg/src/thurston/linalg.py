"""Exact rational polyhedral computation.

Extreme-ray enumeration for cones {x >= 0 : Ax = 0} by the double
description method, exact two-phase simplex with verified dual
certificates, and convex-hull redundancy removal by per-point linear
programming.  No floating point anywhere: matrices are integers or
Fractions and every identity asserted here is exact.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd


# ---------------------------------------------------------------------------
# exact matrix utilities


def rank_int(rows):
    """Rank of an integer (or rational) matrix by exact Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    row = 0
    for col in range(cols):
        piv = None
        for r in range(row, len(m)):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [inv * x for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        row += 1
        rank += 1
        if row == len(m):
            break
    return rank


def rref(rows):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    row = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        piv = None
        for r in range(row, len(m)):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [inv * x for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    return m, pivots


def nullspace(rows, ncols):
    """Basis of the rational nullspace of the matrix, one vector per free
    column of the reduced echelon form."""
    if not rows:
        return [tuple(Fraction(1 if j == i else 0) for j in range(ncols))
                for i in range(ncols)]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(tuple(v))
    return basis


def solve_linear(rows, rhs):
    """One exact solution of (rows) x = rhs, or None if inconsistent."""
    n = len(rows[0]) if rows else 0
    aug = [list(map(Fraction, row)) + [Fraction(b)]
           for row, b in zip(rows, rhs)]
    m, pivots = rref(aug)
    for r in range(len(m)):
        if all(x == 0 for x in m[r][:n]) and m[r][n] != 0:
            return None
    x = [Fraction(0)] * n
    for r, pc in enumerate(pivots):
        if pc == n:
            return None
        x[pc] = m[r][n]
    return tuple(x)


def invert_matrix(rows):
    """Exact inverse of a square rational matrix."""
    n = len(rows)
    aug = [[Fraction(x) for x in row] +
           [Fraction(1 if j == i else 0) for j in range(n)]
           for i, row in enumerate(rows)]
    m, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in m]


# ---------------------------------------------------------------------------
# rays and the double description method


def _normalize_int_vector(v):
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


@dataclass(frozen=True, order=True)
class Ray:
    """An extreme ray with coprime nonnegative integer coordinates."""

    coords: tuple
    support: frozenset = field(compare=False)

    @classmethod
    def from_vector(cls, v):
        ints = _normalize_int_vector([int(x) for x in v])
        return cls(ints, frozenset(i for i, x in enumerate(ints) if x != 0))


@dataclass(frozen=True)
class ConeDescription:
    """The cone {x >= 0 : Ax = 0} with integer equation rows."""

    rows: tuple
    dim: int


def enumerate_extreme_rays(cone):
    """All extreme rays of {x >= 0 : Ax = 0}, one canonical representative
    each, sorted by coordinates.

    Double description: start from the nonnegative orthant (rays e_i) and
    intersect with each hyperplane a.x = 0 in turn, keeping incident rays
    and combining adjacent rays from opposite open sides.  Hyperplanes are
    inserted in lexicographic order of their rows; adjacency of two rays in
    the current cone is decided by the exact rank test
    rank(A'[:, S]) == |S| - 2 with S the union of supports and A' the rows
    already processed.  Two sound rejections run first: |S| - 2 cannot
    exceed the processed row count, and in a pointed cone a third ray whose
    support lies inside S witnesses a face of dimension at least 3.
    """
    dim = cone.dim
    rows = sorted(set(tuple(int(x) for x in r) for r in cone.rows
                      if any(x != 0 for x in r)))
    rays = [tuple(1 if j == i else 0 for j in range(dim))
            for i in range(dim)]
    masks = [1 << i for i in range(dim)]
    processed = []
    for a in rows:
        vals = [sum(c * x for c, x in zip(a, r)) for r in rays]
        zero = [(r, m) for r, m, v in zip(rays, masks, vals) if v == 0]
        pos = [(r, m, v) for r, m, v in zip(rays, masks, vals) if v > 0]
        neg = [(r, m, v) for r, m, v in zip(rays, masks, vals) if v < 0]
        new = list(zero)
        seen_supports = {m for _, m in zero}
        all_masks = [m for _, m in zero] + [m for _, m, _ in pos] + \
            [m for _, m, _ in neg]
        nproc = len(processed)
        for rp, mp, vp in pos:
            for rn, mn, vn in neg:
                union = mp | mn
                if union.bit_count() - 2 > nproc:
                    continue
                if any(m != mp and m != mn and m & union == m
                       for m in all_masks):
                    continue
                if not _adjacent(processed, union, dim):
                    continue
                comb = _normalize_int_vector(
                    [vp * b - vn * c for c, b in zip(rp, rn)])
                supp = 0
                for i, x in enumerate(comb):
                    if x:
                        supp |= 1 << i
                if supp not in seen_supports:
                    seen_supports.add(supp)
                    new.append((comb, supp))
        rays = [r for r, _ in new]
        masks = [m for _, m in new]
        processed.append(a)
    return sorted(Ray.from_vector(r) for r in rays)


def _adjacent(processed_rows, union_mask, dim):
    """Rank test: the face of the current cone spanned by coordinates in
    the support union is 2-dimensional."""
    cols = [j for j in range(dim) if union_mask >> j & 1]
    sub = [[row[j] for j in cols] for row in processed_rows]
    return len(cols) - rank_int_bareiss(sub) == 2


def rank_int_bareiss(rows):
    """Rank of an integer matrix by fraction-free elimination."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, nrows):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pval = m[row][col]
        for r in range(row + 1, nrows):
            f = m[r][col]
            mr = m[r]
            mrow = m[row]
            for cc in range(col, ncols):
                mr[cc] = (pval * mr[cc] - f * mrow[cc]) // prev
        prev = pval
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


def is_extreme_ray(cone, coords):
    """Exact extremality check: the nullspace of A restricted to the
    support is one-dimensional."""
    supp = [i for i, x in enumerate(coords) if x != 0]
    if not supp:
        return False
    sub = [[row[j] for j in supp] for row in cone.rows]
    return len(supp) - rank_int(sub) == 1


# ---------------------------------------------------------------------------
# exact linear programming (two-phase simplex, Bland's rule)


@dataclass
class LpResult:
    """Outcome of solve_lp.  status is "optimal", "infeasible" or
    "unbounded"; for optimal results x is a vertex witness and the dual
    certificate has been verified exactly against the standardized data."""

    status: str
    value: Fraction = None
    x: tuple = None
    dual: tuple = None

    @property
    def optimal(self):
        return self.status == "optimal"


class _Tableau:
    """Dense simplex tableau over Fractions for max c.x, Ax = b, x >= 0."""

    def __init__(self, a, b, c):
        self.m = len(a)
        self.n = len(a[0]) if a else len(c)
        self.rows = [[Fraction(x) for x in row] + [Fraction(bi)]
                     for row, bi in zip(a, b)]
        self.c = [Fraction(x) for x in c]
        self.basis = [None] * self.m

    def pivot(self, r, col):
        row = self.rows[r]
        inv = 1 / row[col]
        self.rows[r] = [inv * x for x in row]
        for i in range(self.m):
            if i != r and self.rows[i][col] != 0:
                f = self.rows[i][col]
                self.rows[i] = [a - f * b
                                for a, b in zip(self.rows[i], self.rows[r])]
        self.basis[r] = col

    def solve(self):
        """Bland's rule primal simplex from the current basis; the basis
        must already be feasible.  Returns "optimal" or "unbounded"."""
        zrow = self._objective_row()
        while True:
            enter = None
            for j in range(self.n):
                if j not in self.basis and zrow[j] > 0:
                    enter = j
                    break
            if enter is None:
                return "optimal"
            leave = None
            best = None
            for i in range(self.m):
                aij = self.rows[i][enter]
                if aij > 0:
                    ratio = self.rows[i][-1] / aij
                    if best is None or ratio < best or \
                            (ratio == best and self.basis[i] < self.basis[leave]):
                        best = ratio
                        leave = i
            if leave is None:
                return "unbounded"
            self.pivot(leave, enter)
            zrow = self._objective_row()

    def _objective_row(self):
        z = list(self.c)
        for i, bj in enumerate(self.basis):
            cb = self.c[bj]
            if cb != 0:
                for j in range(self.n):
                    z[j] -= cb * self.rows[i][j]
        return z

    def solution(self):
        x = [Fraction(0)] * self.n
        for i, bj in enumerate(self.basis):
            x[bj] = self.rows[i][-1]
        return x

    def objective(self):
        return sum(self.c[j] * xj for j, xj in enumerate(self.solution()))


def _simplex_standard(a, b, c):
    """max c.x s.t. Ax = b, x >= 0 with verified dual certificate.

    Returns (status, value, x, y) where y satisfies A^T y >= c and
    y.b == value when status is optimal.
    """
    m = len(a)
    n = len(a[0]) if a else 0
    a = [list(row) for row in a]
    b = list(b)
    for i in range(m):
        if b[i] < 0:
            a[i] = [-x for x in a[i]]
            b[i] = -b[i]
    # Phase 1: artificial variables, minimize their sum.
    art = list(range(n, n + m))
    a1 = [row + [Fraction(1 if k == i else 0) for k in range(m)]
          for i, row in enumerate(a)]
    c1 = [Fraction(0)] * n + [Fraction(-1)] * m
    t = _Tableau(a1, b, c1)
    for i in range(m):
        t.basis[i] = art[i]
    status = t.solve()
    assert status == "optimal"
    if t.objective() != 0:
        return "infeasible", None, None, None
    # Drive remaining artificials out of the basis; drop redundant rows.
    keep = []
    for i in range(t.m):
        if t.basis[i] >= n:
            piv = None
            for j in range(n):
                if t.rows[i][j] != 0:
                    piv = j
                    break
            if piv is None:
                continue          # redundant equation
            t.pivot(i, piv)
        keep.append(i)
    a2 = [[t.rows[i][j] for j in range(n)] for i in keep]
    b2 = [t.rows[i][-1] for i in keep]
    # Phase 2 on the reduced (row-equivalent, full-rank) system.
    t2 = _Tableau(a2, b2, c)
    t2.basis = [t.basis[i] for i in keep]
    status = t2.solve()
    if status == "unbounded":
        return "unbounded", None, None, None
    x = t2.solution()
    value = sum(ci * xi for ci, xi in zip(c, x))
    # Dual certificate for the reduced system: y^T B = c_B over the final
    # basis, verified exactly for dual feasibility and strong duality.
    basis_cols = t2.basis
    sys = [[a2[i][j] for i in range(len(a2))] for j in basis_cols]
    y = solve_linear(sys, [c[j] for j in basis_cols])
    assert y is not None
    for j in range(n):
        red = c[j] - sum(yi * row[j] for yi, row in zip(y, a2))
        assert red <= 0, "dual certificate violated"
    assert sum(yi * bi for yi, bi in zip(y, b2)) == value, \
        "dual objective mismatch"
    return "optimal", value, tuple(x), tuple(y)


def solve_lp(objective, equalities, bounds, maximize=True):
    """Exact LP: optimize objective.x subject to A x = rhs and per
    coordinate bounds.

    equalities is (matrix, rhs); bounds is a list of (lower, upper) pairs
    where None means unbounded on that side.  Returns an LpResult whose
    value and witness are exact rationals; infeasible and unbounded are
    statuses, not exceptions.
    """
    a, rhs = equalities
    nvar = len(objective)
    objective = [Fraction(x) for x in objective]
    if not maximize:
        res = solve_lp([-x for x in objective], equalities, bounds, True)
        if res.optimal:
            res.value = -res.value
        return res

    # Standardize: shift finite lower bounds to zero, reflect variables
    # with only an upper bound, split free variables, and add slack rows
    # for two-sided bounds.
    col_of = []          # per original var: ("shift", col, lo) etc.
    ncols = 0
    extra_rows = []      # (cols with coeffs, rhs) for upper bounds
    for j, (lo, hi) in enumerate(bounds):
        if lo is not None:
            if hi is not None and hi < lo:
                return LpResult("infeasible")
            col_of.append(("shift", ncols, Fraction(lo)))
            if hi is not None:
                extra_rows.append(({ncols: Fraction(1)},
                                   Fraction(hi) - Fraction(lo)))
            ncols += 1
        elif hi is not None:
            col_of.append(("reflect", ncols, Fraction(hi)))
            ncols += 1
        else:
            col_of.append(("free", ncols, None))
            ncols += 2

    def expand_row(row, rhs_val):
        out = [Fraction(0)] * ncols
        r = Fraction(rhs_val)
        for j, coeff in enumerate(row):
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            mode, col, ref = col_of[j]
            if mode == "shift":
                out[col] += coeff
                r -= coeff * ref
            elif mode == "reflect":
                out[col] -= coeff
                r -= coeff * ref
            else:
                out[col] += coeff
                out[col + 1] -= coeff
        return out, r

    amat = []
    bvec = []
    for row, rv in zip(a, rhs):
        er, erhs = expand_row(row, rv)
        amat.append(er)
        bvec.append(erhs)
    nslack = len(extra_rows)
    for row in amat:
        row.extend([Fraction(0)] * nslack)
    for k, (coeffs, rv) in enumerate(extra_rows):
        row = [Fraction(0)] * (ncols + nslack)
        for col, cf in coeffs.items():
            row[col] = cf
        row[ncols + k] = Fraction(1)
        amat.append(row)
        bvec.append(rv)

    # expand_row returns the substituted row together with minus the
    # constant term the substitution produces.
    cvec, crhs = expand_row(objective, 0)
    const = -crhs
    cvec = cvec + [Fraction(0)] * nslack

    status, value, xstd, y = _simplex_standard(amat, bvec, cvec)
    if status != "optimal":
        return LpResult(status)
    x = []
    for mode, col, ref in col_of:
        if mode == "shift":
            x.append(xstd[col] + ref)
        elif mode == "reflect":
            x.append(ref - xstd[col])
        else:
            x.append(xstd[col] - xstd[col + 1])
    return LpResult("optimal", value + const, tuple(x), y)


# ---------------------------------------------------------------------------
# convex hull redundancy removal


def in_convex_hull(point, points):
    """Exact membership of `point` in the convex hull of `points`."""
    if not points:
        return False
    d = len(point)
    a = [[Fraction(q[i]) for q in points] for i in range(d)]
    a.append([Fraction(1)] * len(points))
    rhs = [Fraction(x) for x in point] + [Fraction(1)]
    res = solve_lp([Fraction(0)] * len(points), (a, rhs),
                   [(Fraction(0), None)] * len(points))
    return res.optimal


def remove_redundant_points(points):
    """Vertices of the convex hull of a point list.

    Exact duplicates keep their first occurrence; the scan tests each
    remaining point against all the others currently retained and removes
    it when it is a convex combination of them.
    """
    retained = []
    seen = set()
    for p in points:
        tp = tuple(Fraction(x) for x in p)
        if tp not in seen:
            seen.add(tp)
            retained.append(tp)
    result = list(retained)
    i = 0
    while i < len(result):
        others = result[:i] + result[i + 1:]
        if in_convex_hull(result[i], others):
            result.pop(i)
        else:
            i += 1
    return result
