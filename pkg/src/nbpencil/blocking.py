"""Rational points of hypersurfaces and blocking-set decisions."""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .projgeom import ProjLine, canonical_point, enumerate_points, incidence

NONBLOCKING = "nonblocking"
TRIVIAL = "trivial_blocking"
NONTRIVIAL = "nontrivial_blocking"
STATUSES = (NONBLOCKING, TRIVIAL, NONTRIVIAL)


class BoundViolation(RuntimeError):
    """A nontrivial blocking set smaller than q + sqrt(q) + 1 in the plane."""


@dataclass(frozen=True)
class PointSet:
    field: object
    n: int
    members: frozenset

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, P):
        return P in self.members

    @classmethod
    def of(cls, field, n, points):
        pts = frozenset(canonical_point(P) for P in points)
        for P in pts:
            if P.n != n or P.field != field:
                raise ValueError(f"{P} is not a point of P^{n}({field!r})")
        return cls(field, n, pts)

    def mask(self):
        return incidence(self.n, self.field).mask(self.members)


@dataclass(frozen=True)
class BlockingVerdict:
    status: str
    witness: Optional[ProjLine] = None

    @property
    def blocking(self):
        return self.status != NONBLOCKING


def rational_points(f):
    """All F_q-points of {f = 0}, by evaluating at every point of P^n(F_q)."""
    if not f:
        raise ValueError("the zero form vanishes everywhere")
    n = f.nvars - 1
    pts = frozenset(P for P in enumerate_points(n, f.field) if not f.evaluate(P))
    return PointSet(f.field, n, pts)


def _hits(S):
    inc = incidence(S.n, S.field)
    return inc, inc.hits(S.mask())


def is_blocking(S):
    """(True, None) if every line meets S, else (False, first skew line)."""
    inc, hits = _hits(S)
    if hits.all():
        return True, None
    return False, inc.lines[int(np.argmin(hits))]


def skew_lines_of(S):
    inc, hits = _hits(S)
    return [inc.lines[j] for j in np.flatnonzero(~hits)]


def skew_lines(f):
    """Lines meeting {f = 0} in no F_q-point."""
    return skew_lines_of(rational_points(f))


def is_skew(S, L):
    """Does the line L avoid every point of S?"""
    inc = incidence(S.n, S.field)
    j = inc.line_index.get(L.span)
    if j is None:
        raise ValueError(f"{L} is not a canonical line of P^{S.n}")
    return not S.mask()[inc.line_points[j]].any()


def contains_line(S, L):
    inc = incidence(S.n, S.field)
    j = inc.line_index[L.span]
    return bool(S.mask()[inc.line_points[j]].all())


def _contains_hyperplane(S):
    """Hyperplane a.x = 0 whose points all lie in S, as its dual point."""
    F, n = S.field, S.n
    pts = enumerate_points(n, F)
    for a in pts:
        if all(P in S for P in pts if not sum((x * y for x, y in zip(a, P)), F.zero)):
            return a
    return None


def nontrivial_bound(q):
    """q + sqrt(q) + 1: the minimum size of a nontrivial blocking set in P^2(F_q)."""
    return q + math.sqrt(q) + 1


def classify(S):
    """Blocking status of S.

    A blocking set is trivial when it contains a full F_q-line (in the plane)
    or a full hyperplane (n >= 3).  For the plane, a nontrivial blocking set
    smaller than q + sqrt(q) + 1 raises :class:`BoundViolation`.
    """
    blocking, witness = is_blocking(S)
    if not blocking:
        return BlockingVerdict(NONBLOCKING, witness)
    inc = incidence(S.n, S.field)
    if S.n == 2:
        full = inc.contained(S.mask())
        if full.any():
            return BlockingVerdict(TRIVIAL, inc.lines[int(np.argmax(full))])
        if len(S) < nontrivial_bound(S.field.q):
            raise BoundViolation(
                f"nontrivial blocking set of size {len(S)} < q + sqrt(q) + 1 for q = {S.field.q}")
        return BlockingVerdict(NONTRIVIAL)
    if _contains_hyperplane(S) is not None:
        full = inc.contained(S.mask())
        return BlockingVerdict(TRIVIAL, inc.lines[int(np.argmax(full))])
    return BlockingVerdict(NONTRIVIAL)
