"""Explicit pencils whose F_q-members are nonblocking.

Each builder returns a :class:`ConstructionOutput` holding the pencil, the
skew line the construction's argument designates for each member (when it
designates one), and the parameters chosen along the way.
"""

import math
from dataclasses import dataclass, field

from . import upoly
from .forms import (HomogeneousForm, Pencil, dehomogenize, extension_field, fd_image_and_beta,
                    find_irreducible_binary, pencil_parameters, substitute, variables)
from .gf import embed_subfield, is_power_residue
from .projgeom import axis_line, coordinate_line, lemma_line

ALL_NONBLOCKING = "all_nonblocking"
ONE_TRIVIAL_BLOCKING = "one_trivial_blocking"


class PreconditionError(ValueError):
    """Parameters outside the range where a construction is defined."""


@dataclass
class ConstructionOutput:
    name: str
    pencil: Pencil
    n: int
    d: int
    designated_witnesses: dict = field(default_factory=dict)
    metadata: dict = field(default_factory=dict)
    expected_profile: str = ALL_NONBLOCKING

    @property
    def field(self):
        return self.pencil.field

    def members(self):
        from .forms import pencil_member
        return [((s, t), pencil_member(self.pencil, s, t)) for s, t in pencil_parameters(self.field)]


def _binary_coeffs(b):
    """[a_0, ..., a_d] with b = sum a_j x^(d-j) y^j."""
    return [b.terms.get((b.degree - j, j), b.field.zero) for j in range(b.degree + 1)]


def lemma_hypersurface(n, d, F):
    """x_0^d + x_1 h(x_2, x_n): contains L and misses L_1 entirely."""
    if n < 3:
        raise PreconditionError(f"the line-containing nonblocking hypersurface needs n >= 3, got n = {n}")
    if d < 2:
        raise PreconditionError(f"degree must be >= 2, got {d}")
    b = find_irreducible_binary(d, F)
    a = _binary_coeffs(b)
    xs = variables(F, n + 1)
    h = HomogeneousForm(F, n + 1, d - 1)
    for j in range(1, d + 1):
        h = h + (xs[2] ** (d - j) * xs[n] ** (j - 1)).scale(a[j])
    return xs[0] ** d + xs[1] * h


def highdim_pencil(n, d, F):
    """<X, Y> with X from :func:`lemma_hypersurface` and Y = b(x_{n-1}, x_n),
    b the irreducible binary form used to build X."""
    X = lemma_hypersurface(n, d, F)
    b = find_irreducible_binary(d, F)
    xs = variables(F, n + 1)
    Y = substitute(b, [xs[n - 1], xs[n]])
    pencil = Pencil(X, Y, f"highdim(n={n}, d={d}, q={F.q})")
    L, L1 = coordinate_line(n, F), lemma_line(n, F)
    witnesses = {(s, t): (L if t else L1) for s, t in pencil_parameters(F)}
    meta = {"irreducible": b.to_str(("x", "y")), "L": str(L), "L1": str(L1)}
    return ConstructionOutput("highdim", pencil, n, d, witnesses, meta)


def frobenius_orbit_on_line(n, d, F):
    """The d conjugate points [0:...:0:alpha:1] over GF(q^d), alpha running over
    the roots of the irreducible used by :func:`highdim_pencil`.

    Returns (GF(q^d), list of coordinate tuples, embedding F -> GF(q^d)).
    """
    big = extension_field(F, d)
    embed = embed_subfield(F, big)
    h = [embed.table[c] for c in dehomogenize(find_irreducible_binary(d, F))]
    roots = [a for a in big.elements() if not upoly.evaluate(big, h, a.code)]
    pts = []
    for alpha in roots:
        pts.append(tuple([big.zero] * (n - 1) + [alpha, big.one]))
    return big, pts, embed


def plane_pencil(d, F, sign=1):
    """<F_d, G_d> with F_d = y^d - z^d + sign*z^(d-1)x and G_d = z^d + g y^(d-1)x,
    g = 1/beta for the first beta outside the image of x^(2d-1) - x^(d-1)."""
    if d < 2:
        raise PreconditionError(f"degree must be >= 2, got {d}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    _, beta, g = fd_image_and_beta(d, F)
    x, y, z = variables(F, 3)
    Fd = y ** d - z ** d + (z ** (d - 1) * x).scale(sign)
    Gd = z ** d + (y ** (d - 1) * x).scale(g)
    q = F.q
    effective = d if d <= q else ((d - 2) % (q - 1)) + 2
    meta = {"beta": str(beta), "g": str(g), "sign": sign, "effective_degree": effective}
    pencil = Pencil(Fd, Gd, f"plane(d={d}, q={q})")
    return ConstructionOutput("plane", pencil, 2, d, {}, meta)


def _fermat_hypotheses(d, F, need_three=False):
    q = F.q
    dp = math.gcd(q - 1, d)
    if F.p == 2:
        raise PreconditionError(f"characteristic 2 violated: char(F_q) != 2 required (q = {q})")
    if need_three and dp < 3:
        raise PreconditionError(f"gcd(q-1,d) >= 3 violated: gcd({q - 1},{d}) = {dp}")
    if ((q - 1) // dp) % 2 == 0:
        raise PreconditionError(f"(q-1)/gcd(q-1,d) odd violated: {q - 1}/{dp} = {(q - 1) // dp}")
    return dp


def fermat_curve_check(a, b, c, d, F):
    """A coordinate line skew to a x^d + b y^d + c z^d = 0, from power residues.

    x = 0 is skew iff -b/c is not a d'-th power, y = 0 iff -c/a is not, and
    z = 0 iff -a/b is not (d' = gcd(d, q-1)).  Their product is -1, which is
    not a d'-th power, so at least one test succeeds.
    """
    dp = _fermat_hypotheses(d, F)
    a, b, c = F(a), F(b), F(c)
    if not (a and b and c):
        raise PreconditionError("coefficients a, b, c must all be nonzero")
    for axis, ratio in ((0, -b / c), (1, -c / a), (2, -a / b)):
        if not is_power_residue(ratio, dp):
            return axis_line(axis, F)
    raise RuntimeError(f"no coordinate line is skew to {a}x^{d} + {b}y^{d} + {c}z^{d}")


def fermat_pencil(d, F):
    """<x^d + y^d, y^d + r z^d> with r, -r both non-d'-th powers; every member
    is skew to one of x = 0, y = 0, z = 0."""
    dp = _fermat_hypotheses(d, F, need_three=True)
    r = next((r for r in F.elements()
              if r and not is_power_residue(r, dp) and not is_power_residue(-r, dp)), None)
    if r is None:
        raise RuntimeError(f"no admissible r in {F!r} for d = {d}")
    x, y, z = variables(F, 3)
    pencil = Pencil(x ** d + y ** d, y ** d + (z ** d).scale(r), f"fermat(d={d}, q={F.q})")
    witnesses = {}
    for s, t in pencil_parameters(F):
        if not s:
            witnesses[(s, t)] = axis_line(0, F)
        elif not t:
            witnesses[(s, t)] = axis_line(2, F)
        elif t == F.one:
            witnesses[(s, t)] = axis_line(1, F)
        else:
            # s F - t G = x^d + (1 - t) y^d - t r z^d
            witnesses[(s, t)] = fermat_curve_check(F.one, F.one - t, -t * r, d, F)
    meta = {"r": str(r), "d_prime": dp}
    return ConstructionOutput("fermat", pencil, 2, d, witnesses, meta)


def near_miss_pencil(d, F):
    """<x^d, z^d h(y/z)>: only the member x^d = 0 is blocking."""
    if d < 2:
        raise PreconditionError(f"degree must be >= 2, got {d}")
    b = find_irreducible_binary(d, F)
    x, y, z = variables(F, 3)
    H = substitute(b, [y, z])
    pencil = Pencil(x ** d, H, f"nearmiss(d={d}, q={F.q})")
    L = axis_line(0, F)
    witnesses = {(s, t): L for s, t in pencil_parameters(F) if t}
    meta = {"irreducible": b.to_str(("y", "z"))}
    return ConstructionOutput("nearmiss", pencil, 2, d, witnesses, meta, ONE_TRIVIAL_BLOCKING)


CONSTRUCTIONS = ("plane", "highdim", "fermat", "nearmiss")


def build(name, F, d, n=None):
    """Dispatch by construction name; ``n`` is only read by ``highdim``."""
    if name == "plane":
        return plane_pencil(d, F)
    if name == "highdim":
        if n is None:
            raise PreconditionError("highdim needs a dimension n >= 3")
        if d < 2:
            raise PreconditionError(f"degree must be >= 2, got {d}")
        return highdim_pencil(n, d, F)
    if name == "fermat":
        return fermat_pencil(d, F)
    if name == "nearmiss":
        return near_miss_pencil(d, F)
    raise PreconditionError(f"unknown construction {name!r}; choose from {', '.join(CONSTRUCTIONS)}")
