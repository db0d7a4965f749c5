"""Points and lines of P^n(F_q) in canonical form."""

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .gf import FieldElement


@dataclass(frozen=True)
class ProjPoint:
    """A point of P^n(F_q); the leftmost nonzero coordinate is 1."""

    coords: tuple

    @property
    def field(self):
        return self.coords[0].field

    @property
    def n(self):
        return len(self.coords) - 1

    @property
    def codes(self):
        return tuple(c.code for c in self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __str__(self):
        return "[" + ":".join(str(c) for c in self.coords) + "]"


@dataclass(frozen=True)
class ProjLine:
    """An F_q-line, stored as the reduced row-echelon basis of its 2-dim span.

    For n = 2 ``dual`` is the canonical triple [a:b:c] of the line
    ax + by + cz = 0.
    """

    span: tuple
    dual: tuple = field(default=None, compare=False)

    @property
    def field(self):
        return self.span[0][0].field

    @property
    def n(self):
        return len(self.span[0]) - 1

    def __str__(self):
        if self.dual is not None:
            return "<" + ":".join(str(c) for c in self.dual) + ">"
        return "<" + "; ".join(" ".join(str(c) for c in row) for row in self.span) + ">"


def _canonical_codes(F, codes):
    for c in codes:
        if c:
            if c == 1:
                return tuple(codes)
            inv = F.inv_code(c)
            return tuple(F.mul_code(x, inv) for x in codes)
    raise ValueError("the zero vector is not a projective point")


def canonical_point(coords):
    coords = tuple(coords)
    if not coords:
        raise ValueError("empty coordinate vector")
    F = coords[0].field
    codes = _canonical_codes(F, [c.code for c in coords])
    return ProjPoint(tuple(FieldElement(F, c) for c in codes))


def _point_codes(n, F):
    """Canonical code tuples, ordered by position of the leading 1, then by
    the trailing coordinates in element order."""
    out = []
    for lead in range(n + 1):
        for tail in itertools.product(range(F.q), repeat=n - lead):
            out.append((0,) * lead + (1,) + tail)
    return out


@lru_cache(maxsize=None)
def enumerate_points(n, F):
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    return tuple(ProjPoint(tuple(FieldElement(F, c) for c in codes))
                 for codes in _point_codes(n, F))


def _rref_codes(F, rows):
    """Reduced row echelon form of a code matrix; returns the nonzero rows."""
    rows = [list(r) for r in rows]
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv_code(rows[r][col])
        rows[r] = [F.mul_code(x, inv) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                c = rows[i][col]
                rows[i] = [F.sub_code(x, F.mul_code(c, y)) for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return [tuple(row) for row in rows[:r]]


def _dual_codes(F, r1, r2):
    # cross product of the two spanning rows
    a = F.sub_code(F.mul_code(r1[1], r2[2]), F.mul_code(r1[2], r2[1]))
    b = F.sub_code(F.mul_code(r1[2], r2[0]), F.mul_code(r1[0], r2[2]))
    c = F.sub_code(F.mul_code(r1[0], r2[1]), F.mul_code(r1[1], r2[0]))
    return _canonical_codes(F, [a, b, c])


def _make_line(F, r1, r2):
    span = (tuple(FieldElement(F, c) for c in r1), tuple(FieldElement(F, c) for c in r2))
    dual = None
    if len(r1) == 3:
        dual = tuple(FieldElement(F, c) for c in _dual_codes(F, r1, r2))
    return ProjLine(span, dual)


def line_from_span(rows):
    """Canonical line spanned by two independent vectors."""
    rows = [tuple(r) for r in rows]
    F = rows[0][0].field
    red = _rref_codes(F, [[c.code for c in r] for r in rows])
    if len(red) != 2:
        raise ValueError("spanning vectors are dependent; no unique line")
    return _make_line(F, *red)


def line_from_dual(coeffs):
    """The line a_0 x_0 + ... + a_n x_n = 0 in P^2 given its dual triple."""
    coeffs = tuple(coeffs)
    if len(coeffs) != 3:
        raise ValueError("dual coordinates are only used in the plane")
    F = coeffs[0].field
    a = [c.code for c in coeffs]
    if not any(a):
        raise ValueError("zero dual vector")
    # kernel basis of the 1x3 system
    piv = next(i for i in range(3) if a[i])
    basis = []
    for j in range(3):
        if j == piv:
            continue
        v = [0, 0, 0]
        v[j] = 1
        v[piv] = F.neg_code(F.mul_code(a[j], F.inv_code(a[piv])))
        basis.append(v)
    red = _rref_codes(F, basis)
    return _make_line(F, *red)


def _line_codes(n, F):
    q = F.q
    for i, j in itertools.combinations(range(n + 1), 2):
        free1 = [c for c in range(i + 1, n + 1) if c != j]
        free2 = list(range(j + 1, n + 1))
        for v1 in itertools.product(range(q), repeat=len(free1)):
            r1 = [0] * (n + 1)
            r1[i] = 1
            for c, x in zip(free1, v1):
                r1[c] = x
            for v2 in itertools.product(range(q), repeat=len(free2)):
                r2 = [0] * (n + 1)
                r2[j] = 1
                for c, x in zip(free2, v2):
                    r2[c] = x
                yield tuple(r1), tuple(r2)


@lru_cache(maxsize=None)
def enumerate_lines(n, F):
    if n < 2:
        raise ValueError(f"lines need dimension >= 2, got {n}")
    return tuple(_make_line(F, r1, r2) for r1, r2 in _line_codes(n, F))


def gaussian_binomial(m, r, q):
    num = den = 1
    for i in range(r):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def _line_point_codes(F, r1, r2):
    q = F.q
    out = []
    for u, v in [(1, v) for v in range(q)] + [(0, 1)]:
        vec = [F.add_code(F.mul_code(u, a), F.mul_code(v, b)) for a, b in zip(r1, r2)]
        out.append(_canonical_codes(F, vec))
    return out


def points_on_line(L):
    """The q+1 points u*row1 + v*row2 for [u:v] = [1:0], [1:1], ..., [0:1]."""
    F = L.field
    r1 = [c.code for c in L.span[0]]
    r2 = [c.code for c in L.span[1]]
    return [ProjPoint(tuple(FieldElement(F, c) for c in codes))
            for codes in _line_point_codes(F, r1, r2)]


def line_through(P, Q):
    if P == Q:
        raise ValueError(f"line_through needs distinct points, got {P} twice")
    return line_from_span([P.coords, Q.coords])


def coordinate_line(n, F):
    """L = {x_0 = ... = x_{n-2} = 0}, spanned by e_{n-1} and e_n."""
    r1 = [0] * (n + 1)
    r2 = [0] * (n + 1)
    r1[n - 1] = 1
    r2[n] = 1
    return _make_line(F, tuple(r1), tuple(r2))


def lemma_line(n, F):
    """L_1 = {x_2 = ... = x_{n-1} = x_0, x_n = x_1}."""
    r1 = [1, 0] + [1] * (n - 2) + [0]
    r2 = [0, 1] + [0] * (n - 2) + [1]
    return _make_line(F, tuple(r1), tuple(r2))


def axis_line(i, F):
    """The plane line x_i = 0 (i = 0, 1, 2 for x, y, z)."""
    a = [F.zero] * 3
    a[i] = F.one
    return line_from_dual(a)


class Incidence:
    """Point/line incidence of P^n(F_q) as index arrays.

    ``line_points[j]`` holds the indices (into ``points``) of the q+1 points
    of ``lines[j]``.
    """

    def __init__(self, n, F):
        self.n = n
        self.field = F
        self.points = enumerate_points(n, F)
        self.lines = enumerate_lines(n, F)
        self.index = {P.codes: i for i, P in enumerate(self.points)}
        self.line_index = {L.span: j for j, L in enumerate(self.lines)}
        rows = []
        for L in self.lines:
            r1 = [c.code for c in L.span[0]]
            r2 = [c.code for c in L.span[1]]
            rows.append([self.index[c] for c in _line_point_codes(F, r1, r2)])
        self.line_points = np.array(rows, dtype=np.int64)

    def mask(self, points):
        m = np.zeros(len(self.points), dtype=bool)
        for P in points:
            m[self.index[P.codes]] = True
        return m

    def hits(self, mask):
        """Boolean per line: does the line meet the masked point set?"""
        return mask[self.line_points].any(axis=1)

    def contained(self, mask):
        return mask[self.line_points].all(axis=1)


@lru_cache(maxsize=None)
def incidence(n, F):
    return Incidence(n, F)
