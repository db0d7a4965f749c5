import itertools

import pytest
from hypothesis import given, settings, strategies as st

from nbpencil.constructions import frobenius_orbit_on_line, lemma_hypersurface, plane_pencil
from nbpencil.forms import (HomogeneousForm, Pencil, Polynomial, agree_on_points, binary_gcd,
                            binary_rational_roots, degree_reduce, embed_form, fd_image_and_beta,
                            find_irreducible_binary, interpolation_codimension, linear_factor_free,
                            monomials, pencil_member, pencil_parameters, restrict_to_line, variables,
                            vanishing_subspace_codim_on_line)
from nbpencil.gf import embed_subfield, make_field
from nbpencil.projgeom import (axis_line, canonical_point, coordinate_line, enumerate_lines,
                               enumerate_points, lemma_line)

FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1)]


def test_evaluate_examples():
    F = make_field(2)
    x, y, z = variables(F, 3)
    f = x ** 2 + x * y + y ** 2
    assert f.evaluate(canonical_point([F(0), F(0), F(1)])) == F.zero
    assert f.evaluate(canonical_point([F(1), F(1), F(0)])) == F.one


@pytest.mark.parametrize("pk", FIELDS)
def test_evaluate_homogeneity(pk):
    F = make_field(*pk)
    x, y, z = variables(F, 3)
    f = x ** 3 + (y * z * z).scale(F.q - 1) + x * y * z
    for P in enumerate_points(2, F):
        for lam in F.elements():
            if lam:
                assert f.evaluate([lam * c for c in P]) == lam ** 3 * f.evaluate(P)


def test_form_invariants():
    F = make_field(3)
    with pytest.raises(ValueError):
        HomogeneousForm(F, 3, 2, {(1, 0, 0): F.one})
    zero = HomogeneousForm(F, 3, 4)
    assert not zero and zero.degree == 4
    x, y, z = variables(F, 3)
    assert not (x - x)
    assert (x * y).terms == {(1, 1, 0): F.one}


def test_pencil_member_examples():
    F = make_field(2)
    L = plane_pencil(2, F).pencil
    x, y, z = variables(F, 3)
    assert pencil_member(L, F.one, F.zero) == L.F
    assert pencil_member(L, F.zero, F.one) == -L.G
    # (y^2 + z^2 + zx) - (z^2 + yx) over GF(2)
    assert pencil_member(L, F.one, F.one) == y ** 2 + (y + z) * x
    with pytest.raises(ValueError):
        pencil_member(L, F.zero, F.zero)


def test_pencil_rejects_proportional():
    F = make_field(5)
    x, y, z = variables(F, 3)
    with pytest.raises(ValueError):
        Pencil(x * y, (x * y).scale(3))
    with pytest.raises(ValueError):
        Pencil(x * y, x)


@pytest.mark.parametrize("pk", FIELDS)
def test_pencil_member_linear(pk):
    F = make_field(*pk)
    L = plane_pencil(3, F).pencil
    for s, t in pencil_parameters(F):
        m = pencil_member(L, s, t)
        for P in enumerate_points(2, F):
            assert m.evaluate(P) == s * L.F.evaluate(P) - t * L.G.evaluate(P)
    # proportional parameters give proportional members
    for lam in F.elements():
        if lam:
            assert pencil_member(L, lam, lam * F.one) == pencil_member(L, F.one, F.one).scale(lam)


def test_restrict_examples():
    F = make_field(3)
    x, y, z = variables(F, 3)
    u, v = variables(F, 2)
    assert restrict_to_line(x ** 2 + y ** 2 + z ** 2, axis_line(2, F)) == u ** 2 + v ** 2
    F2 = make_field(2)
    X = lemma_hypersurface(3, 2, F2)
    assert not restrict_to_line(X, coordinate_line(3, F2))
    u, v = variables(F2, 2)
    assert restrict_to_line(X, lemma_line(3, F2)) == u ** 2 + u * v + v ** 2


@pytest.mark.parametrize("pk,n", [((2, 1), 2), ((3, 1), 2), ((2, 2), 2), ((2, 1), 3), ((3, 1), 3)])
def test_restriction_consistent_with_evaluation(pk, n):
    F = make_field(*pk)
    xs = variables(F, n + 1)
    f = xs[0] ** 3 + xs[1] * xs[n] ** 2 + (xs[n - 1] ** 2 * xs[0]).scale(2)
    for L in enumerate_lines(n, F):
        b = restrict_to_line(f, L)
        for u, v in itertools.product(F.elements(), repeat=2):
            vec = [u * a + v * c for a, c in zip(*L.span)]
            assert b.evaluate([u, v]) == f.evaluate(vec)


def test_binary_roots_examples():
    F2, F3 = make_field(2), make_field(3)
    u, v = variables(F2, 2)
    assert binary_rational_roots(u ** 2 + u * v + v ** 2) == set()
    u, v = variables(F3, 2)
    assert {P.codes for P in binary_rational_roots(u ** 2 - v ** 2)} == {(1, 1), (1, 2)}
    for F in (F2, F3, make_field(2, 2)):
        u, v = variables(F, 2)
        assert {P.codes for P in binary_rational_roots(u * v)} == {(0, 1), (1, 0)}
    with pytest.raises(ValueError):
        binary_rational_roots(HomogeneousForm(F3, 2, 2))


def test_find_irreducible_examples():
    u, v = variables(make_field(2), 2)
    assert find_irreducible_binary(2, make_field(2)) == u ** 2 + u * v + v ** 2
    assert find_irreducible_binary(3, make_field(2)) == u ** 3 + u * v ** 2 + v ** 3
    u, v = variables(make_field(3), 2)
    assert find_irreducible_binary(2, make_field(3)) == u ** 2 + v ** 2


@pytest.mark.parametrize("pk", FIELDS + [(3, 2)])
@pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
def test_irreducible_has_no_roots_in_small_extensions(pk, d):
    F = make_field(*pk)
    b = find_irreducible_binary(d, F)
    assert b.degree == d
    if d >= 2:
        assert binary_rational_roots(b) == set()
    for e in range(1, d):
        if F.q ** e > 2 ** 12:
            break
        big = make_field(F.p, F.k * e)
        bb = embed_form(b, embed_subfield(F, big), big)
        assert binary_rational_roots(bb) == set(), f"root over GF({F.q}^{e})"


def test_gcd_examples():
    F = make_field(5)
    u, v = variables(F, 2)
    assert binary_gcd(u ** 2 - v ** 2, u - v) == u - v
    assert binary_gcd(u, v).degree == 0
    # q=5, d=2, g=3, t=1: v = 3u turns u^2 - 2v^2 into 3u^2
    assert binary_gcd(u ** 2 - (v ** 2).scale(2), v - u.scale(3)).degree == 0


def test_gcd_roots_at_infinity():
    F = make_field(3)
    u, v = variables(F, 2)
    assert binary_gcd(v ** 2 * u, v * (u + v)) == v
    assert binary_gcd(u ** 3, u * v ** 2) == u
    assert binary_gcd(v ** 3, v ** 2) == v ** 2


def _divides(F, a, b):
    """Does binary form a divide b?  Checked by trying the quotient over all
    coefficient vectors of the right degree (tiny cases only)."""
    k = b.degree - a.degree
    if k < 0:
        return False
    monos = monomials(2, k)
    for coeffs in itertools.product(F.elements(), repeat=len(monos)):
        quo = HomogeneousForm(F, 2, k, dict(zip(monos, coeffs)))
        if quo * a == b:
            return True
    return False


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_gcd_divides_and_catches_common_roots(data):
    F = make_field(3)
    u, v = variables(F, 2)

    def draw_form():
        deg = data.draw(st.integers(1, 3))
        coeffs = data.draw(st.lists(st.integers(0, 2), min_size=deg + 1, max_size=deg + 1))
        f = HomogeneousForm(F, 2, deg, {m: F(c) for m, c in zip(monomials(2, deg), coeffs)})
        return f

    b1, b2 = draw_form(), draw_form()
    if not b1 or not b2:
        return
    g = binary_gcd(b1, b2)
    assert _divides(F, g, b1) and _divides(F, g, b2)
    common = binary_rational_roots(b1) & binary_rational_roots(b2)
    if g.degree:
        assert common <= binary_rational_roots(g)
    else:
        assert not common


def test_fd_examples():
    for pk in [(3, 1), (2, 1)]:
        F = make_field(*pk)
        image, beta, g = fd_image_and_beta(2, F)
        assert image == {F.zero} and beta == F.one and g == F.one
    F5 = make_field(5)
    image, beta, g = fd_image_and_beta(2, F5)
    oracle = {(x ** 3 - x) % 5 for x in range(5)}
    assert {a.code for a in image} == oracle == {0, 1, 4}
    assert beta == F5(2) and g == F5(3)


@pytest.mark.parametrize("q_pk", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)])
@pytest.mark.parametrize("d", range(2, 8))
def test_beta_outside_image(q_pk, d):
    F = make_field(*q_pk)
    image, beta, g = fd_image_and_beta(d, F)
    assert beta and beta not in image and g * beta == F.one
    assert all(a in image for a in F.elements() if a.code < beta.code)


def test_degree_reduce_examples():
    for pk in [(3, 1), (2, 2), (5, 1), (7, 1)]:
        F = make_field(*pk)
        x, y, z = variables(F, 3)
        assert degree_reduce(x ** (F.q + 1)) == x ** 2
    F4 = make_field(2, 2)
    x, y, z = variables(F4, 3)
    assert degree_reduce(x ** 3) == x ** 3
    F2 = make_field(2)
    x, y, z = variables(F2, 3)
    f = y ** 4 - z ** 4 + z ** 3 * x
    red = degree_reduce(f)
    assert red == Polynomial(F2, 3, {(0, 1, 0): 1, (0, 0, 1): 1, (1, 0, 1): 1})
    assert agree_on_points(red, y ** 2 + z ** 2 + z * x, 2)
    assert agree_on_points(red, f, 2)


@pytest.mark.parametrize("pk", FIELDS)
def test_degree_reduce_pointwise(pk):
    F = make_field(*pk)
    x, y, z = variables(F, 3)
    for d in range(F.q, F.q + 6):
        f = plane_pencil(d, F).pencil.F + (x ** (d - 2) * y * z).scale(2)
        assert agree_on_points(degree_reduce(f), f, 2)


def test_interpolation_codimension_small():
    F = make_field(5)
    P = [F(1), F(2), F(3)]
    for d in range(1, 5):
        assert interpolation_codimension([P], d) == 1
    assert interpolation_codimension([P, [F(0), F(1), F(1)]], 1) == 2
    with pytest.raises(ValueError):
        interpolation_codimension([P, [F(2), F(4), F(1)]], 2)


@pytest.mark.parametrize("q_pk", [(2, 1), (3, 1)])
@pytest.mark.parametrize("d", [2, 3, 4])
@pytest.mark.parametrize("n", [2, 3])
def test_orbit_codimension(q_pk, d, n):
    F = make_field(*q_pk)
    big, orbit, embed = frobenius_orbit_on_line(n, d, F)
    assert len(orbit) == d
    # the set is Frobenius-stable and none of its points is rational
    assert {tuple(c ** F.q for c in P) for P in orbit} == set(orbit)
    assert all(P[n - 1] ** F.q != P[n - 1] for P in orbit)
    assert interpolation_codimension(orbit, d, F) == d


@pytest.mark.parametrize("d,n,expected", [(2, 3, 3), (5, 2, 6), (1, 2, 2)])
def test_vanishing_codim_examples(d, n, expected):
    assert vanishing_subspace_codim_on_line(d, n, make_field(3)) == expected


@pytest.mark.parametrize("pk", FIELDS + [(3, 2), (7, 1)])
@pytest.mark.parametrize("d", range(2, 8))
def test_step4_pair_coprime(pk, d):
    F = make_field(*pk)
    _, _, g = fd_image_and_beta(d, F)
    u, v = variables(F, 2)
    for t in F.elements():
        if not t:
            continue
        first = u ** d - (v ** d).scale(F.one + t)
        second = v ** (d - 1) - (u ** (d - 1)).scale(t * g)
        assert binary_gcd(first, second).degree == 0


@pytest.mark.parametrize("pk", FIELDS + [(3, 2), (7, 1)])
@pytest.mark.parametrize("d", range(2, 8))
def test_no_rational_linear_factor(pk, d):
    F = make_field(*pk)
    L = plane_pencil(d, F).pencil
    for s, t in pencil_parameters(F):
        if s and t:
            assert linear_factor_free(pencil_member(L, s, t), 2, 1)
