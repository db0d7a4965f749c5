"""Sparse multivariate forms over GF(q) and the binary-form utilities used
to analyse pencils: restriction to lines, rational roots, gcds, the
``x^(2d-1) - x^(d-1)`` image search, exponent reduction and interpolation
ranks."""

from dataclasses import dataclass

from . import upoly
from .gf import FieldElement, make_field
from .projgeom import canonical_point, coordinate_line, enumerate_points


class Polynomial:
    """A polynomial in ``nvars`` variables stored as {exponent tuple: coeff}.

    Zero coefficients are never stored.  Treated as immutable.
    """

    def __init__(self, field, nvars, terms=()):
        self.field = field
        self.nvars = nvars
        clean = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has wrong length for {nvars} variables")
            c = field(c)
            if c:
                prev = clean.get(exps)
                s = c if prev is None else prev + c
                if s:
                    clean[exps] = s
                else:
                    del clean[exps]
        self.terms = clean

    def _like(self, terms):
        return Polynomial(self.field, self.nvars, terms)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.field == other.field and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def _check(self, other):
        if self.field != other.field or self.nvars != other.nvars:
            raise ValueError("forms over different fields or variable counts")

    def __add__(self, other):
        self._check(other)
        return self._like(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field(c)
        return self._like({e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        self._check(other)
        out = []
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out.append((tuple(a + b for a, b in zip(e1, e2)), c1 * c2))
        return self._like(out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e):
        result = self._like({(0,) * self.nvars: 1})
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, point):
        coords = point.coords if hasattr(point, "coords") else tuple(point)
        if len(coords) != self.nvars:
            raise ValueError(f"point has {len(coords)} coordinates, form has {self.nvars} variables")
        F = self.field
        xs = []
        for c in coords:
            if c.field != F:
                raise ValueError(f"point over {c.field!r}, form over {F!r}")
            xs.append(c.code)
        return FieldElement(F, _eval_codes(F, self.terms, xs))

    __call__ = evaluate

    def to_str(self, names=None):
        names = names or default_names(self.nvars)
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e)
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif c == self.field.one:
                parts.append(mono)
            elif "+" in cs:
                parts.append(f"({cs})*{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"<{type(self).__name__} over {self.field!r}: {self}>"


class HomogeneousForm(Polynomial):
    """Degree-``degree`` form; the zero form keeps its degree tag."""

    def __init__(self, field, nvars, degree, terms=()):
        super().__init__(field, nvars, terms)
        self.degree = degree
        for exps in self.terms:
            if sum(exps) != degree:
                raise ValueError(f"monomial {exps} is not of degree {degree}")

    def _like(self, terms):
        poly = Polynomial(self.field, self.nvars, terms)
        degs = {sum(e) for e in poly.terms}
        if len(degs) > 1:
            return poly
        deg = degs.pop() if degs else self.degree
        return HomogeneousForm(self.field, self.nvars, deg, poly.terms)

    def __add__(self, other):
        if isinstance(other, HomogeneousForm) and other.degree != self.degree and other and self:
            raise ValueError(f"adding forms of degree {self.degree} and {other.degree}")
        return super().__add__(other)

    def __mul__(self, other):
        out = super().__mul__(other)
        if isinstance(other, HomogeneousForm):
            return HomogeneousForm(self.field, self.nvars, self.degree + other.degree, out.terms)
        return out

    def __pow__(self, e):
        out = super().__pow__(e)
        return HomogeneousForm(self.field, self.nvars, self.degree * e, out.terms)

    def __eq__(self, other):
        if isinstance(other, HomogeneousForm) and not self.terms and not other.terms:
            return self.degree == other.degree and self.field == other.field
        return super().__eq__(other)

    __hash__ = Polynomial.__hash__

    def to_dict(self):
        return {
            "field": self.field.spec,
            "nvars": self.nvars,
            "degree": self.degree,
            "terms": [[list(e), str(self.terms[e])] for e in sorted(self.terms, reverse=True)],
        }

    @classmethod
    def from_dict(cls, data, field=None):
        from .gf import parse_field_spec
        F = field or parse_field_spec(data["field"])
        terms = [(tuple(e), F.parse(c)) for e, c in data["terms"]]
        return cls(F, int(data["nvars"]), int(data["degree"]), terms)


def default_names(nvars):
    if nvars == 3:
        return ("x", "y", "z")
    if nvars == 2:
        return ("u", "v")
    return tuple(f"x{i}" for i in range(nvars))


def _eval_codes(F, terms, xs):
    acc = 0
    for exps, c in terms.items():
        v = c.code
        for x, e in zip(xs, exps):
            if e:
                v = F.mul_code(v, F.pow_code(x, e))
                if not v:
                    break
        acc = F.add_code(acc, v)
    return acc


def variables(F, nvars):
    out = []
    for i in range(nvars):
        e = [0] * nvars
        e[i] = 1
        out.append(HomogeneousForm(F, nvars, 1, {tuple(e): F.one}))
    return tuple(out)


def zero_form(F, nvars, degree):
    return HomogeneousForm(F, nvars, degree)


def monomials(nvars, d):
    """Exponent vectors of degree d, in descending lexicographic order."""
    if nvars == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in monomials(nvars - 1, d - first):
            out.append((first,) + rest)
    return out


def evaluate(f, P):
    return f.evaluate(P)


# -- pencils ----------------------------------------------------------------

@dataclass(frozen=True)
class Pencil:
    F: HomogeneousForm
    G: HomogeneousForm
    label: str = ""

    def __post_init__(self):
        if self.F.field != self.G.field or self.F.nvars != self.G.nvars:
            raise ValueError("pencil generators live in different rings")
        if self.F.degree != self.G.degree:
            raise ValueError(f"pencil generators have degrees {self.F.degree} and {self.G.degree}")
        keys = sorted(set(self.F.terms) | set(self.G.terms))
        rows = [[self.F.terms.get(k, self.F.field.zero) for k in keys],
                [self.G.terms.get(k, self.F.field.zero) for k in keys]]
        if rank(self.F.field, rows) < 2:
            raise ValueError("pencil generators are proportional")

    @property
    def field(self):
        return self.F.field

    @property
    def nvars(self):
        return self.F.nvars

    @property
    def degree(self):
        return self.F.degree


def pencil_parameters(F):
    """Representatives [1:t] for t in F_q (element order), then [0:1]."""
    return [(F.one, t) for t in F.elements()] + [(F.zero, F.one)]


def pencil_member(L, s, t):
    """The member s*F - t*G."""
    if not s and not t:
        raise ValueError("[0:0] is not a pencil parameter")
    return L.F.scale(s) - L.G.scale(t)


# -- restriction and binary forms ---------------------------------------------

def substitute(f, images):
    """Replace variable i of ``f`` by the form ``images[i]`` (all of one degree
    in a common ring)."""
    if len(images) != f.nvars:
        raise ValueError("need one image per variable")
    F = f.field
    m = images[0].nvars
    e = images[0].degree
    out = zero_form(F, m, f.degree * e)
    cache = {}
    for exps, c in f.terms.items():
        term = HomogeneousForm(F, m, 0, {(0,) * m: c})
        for i, k in enumerate(exps):
            if k:
                key = (i, k)
                if key not in cache:
                    cache[key] = images[i] ** k
                term = term * cache[key]
        out = out + term
    return HomogeneousForm(F, m, f.degree * e, out.terms)


def restrict_to_line(f, L):
    """Binary form f(u*row1 + v*row2) of the same degree."""
    if L.field != f.field or L.n + 1 != f.nvars:
        raise ValueError("line and form live in different spaces")
    u, v = variables(f.field, 2)
    images = [u.scale(a) + v.scale(b) for a, b in zip(*L.span)]
    return substitute(f, images)


def _check_binary(b):
    if b.nvars != 2:
        raise ValueError(f"expected a binary form, got {b.nvars} variables")
    if not b:
        raise ValueError("zero binary form: the line lies on the hypersurface")


def binary_rational_roots(b):
    _check_binary(b)
    return {P for P in enumerate_points(1, b.field) if not b.evaluate(P)}


def dehomogenize(b):
    """Codes of b(u, 1), lowest degree first."""
    coeffs = [0] * (b.degree + 1)
    for (i, _), c in b.terms.items():
        coeffs[i] = c.code
    return upoly.trim(coeffs)


def homogenize(F, poly, degree):
    """The binary form v^degree * p(u/v) from a code list ``poly``."""
    return HomogeneousForm(F, 2, degree, {(i, degree - i): FieldElement(F, c)
                                          for i, c in enumerate(poly) if c})


def binary_gcd(b1, b2):
    """Monic gcd of two binary forms.

    Computed in the chart v = 1, plus the power of v (roots at [1:0]) that
    divides both.  A degree-0 result means no common root over any extension.
    """
    _check_binary(b1)
    _check_binary(b2)
    if b1.field != b2.field:
        raise ValueError("binary forms over different fields")
    F = b1.field
    p1, p2 = dehomogenize(b1), dehomogenize(b2)
    v_power = min(b1.degree - upoly.degree(p1), b2.degree - upoly.degree(p2))
    g = upoly.gcd(F, p1, p2)
    return homogenize(F, g, upoly.degree(g) + v_power)


def find_irreducible_binary(d, F):
    """Homogenization y^d h(x/y) of the first monic irreducible h of degree d."""
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    h = upoly.first_monic_irreducible(F, d)
    return homogenize(F, h, d)


def fd_image_and_beta(d, F):
    """Image of x -> x^(2d-1) - x^(d-1) on F_q, the first element beta outside
    it, and g = 1/beta."""
    if d < 2:
        raise ValueError(f"degree must be >= 2, got {d}")
    image = {x ** (2 * d - 1) - x ** (d - 1) for x in F.elements()}
    beta = next(x for x in F.elements() if x not in image)
    return image, beta, beta.inverse()


def degree_reduce(f):
    """Lower every exponent e >= 1 to ((e - 1) mod (q - 1)) + 1.

    The result agrees with ``f`` on all F_q-points but is generally not
    homogeneous, hence a plain :class:`Polynomial`.
    """
    q1 = f.field.q - 1
    terms = [(tuple(((e - 1) % q1) + 1 if e else 0 for e in exps), c)
             for exps, c in f.terms.items()]
    return Polynomial(f.field, f.nvars, terms)


# -- linear algebra -------------------------------------------------------------

def rank(F, rows):
    """Rank of a matrix of field elements (or codes) over ``F``."""
    m = [[c.code if isinstance(c, FieldElement) else c for c in row] for row in rows]
    if not m:
        return 0
    r = 0
    ncols = len(m[0])
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv_code(m[r][col])
        m[r] = [F.mul_code(x, inv) for x in m[r]]
        for i in range(r + 1, len(m)):
            c = m[i][col]
            if c:
                m[i] = [F.sub_code(x, F.mul_code(c, y)) for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def interpolation_codimension(points, d, base=None):
    """Number of independent conditions "f vanishes at P" imposed on degree-d
    forms by ``points`` (coordinate tuples over one common field)."""
    points = [tuple(P.coords if hasattr(P, "coords") else P) for P in points]
    if not points:
        return 0
    F = points[0][0].field
    if base is not None and base.p != F.p:
        raise ValueError(f"points over {F!r} do not extend {base!r}")
    canon = [canonical_point(P) for P in points]
    if len(set(canon)) != len(canon):
        raise ValueError("duplicate points")
    nvars = len(points[0])
    monos = monomials(nvars, d)
    rows = []
    for P in canon:
        xs = [c.code for c in P.coords]
        rows.append([_eval_codes(F, {e: F.one}, xs) for e in monos])
    return rank(F, rows)


def vanishing_subspace_codim_on_line(d, n, F):
    """Codimension of {f in V_d : f vanishes on L}, L = {x_0 = ... = x_{n-2} = 0}.

    Counted as the d+1 monomials in x_{n-1}, x_n, and checked against the rank
    of the restriction map V_d -> binary forms.
    """
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    count = sum(1 for e in monomials(n + 1, d) if not any(e[: n - 1]))
    L = coordinate_line(n, F)
    binary = monomials(2, d)
    rows = []
    for e in monomials(n + 1, d):
        r = restrict_to_line(HomogeneousForm(F, n + 1, d, {e: F.one}), L)
        rows.append([r.terms.get(b, F.zero) for b in binary])
    rk = rank(F, rows)
    if rk != count:
        raise RuntimeError(f"monomial count {count} disagrees with restriction rank {rk}")
    return count


def extension_field(F, e):
    """GF(q^e) for F = GF(q)."""
    return make_field(F.p, F.k * e)


def embed_form(f, embed, big):
    terms = {e: embed(c) for e, c in f.terms.items()}
    return HomogeneousForm(big, f.nvars, f.degree, terms)


def linear_factor_free(f, var, other, F=None):
    """True iff no factor ``x_var - a*x_other`` with a in F_q divides f,
    tested by substituting x_var = a*x_other for every a and checking the
    result is nonzero."""
    F = F or f.field
    xs = variables(F, f.nvars)
    for a in F.elements():
        images = list(xs)
        images[var] = xs[other].scale(a)
        if not substitute(f, images):
            return False
    return True


def agree_on_points(f, g, n):
    """Pointwise equality of two polynomials on P^n(F_q) (canonical representatives)."""
    return all(f.evaluate(P) == g.evaluate(P) for P in enumerate_points(n, f.field))
