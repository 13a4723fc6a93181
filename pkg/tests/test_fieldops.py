from fractions import Fraction

import pytest

from flatfields.errors import DegreeLimitExceeded
from flatfields.fieldops import (
    Subfield, conjugate_embeddings, factor_over_K, field_generated_by,
    field_intersect, field_intersect_embedded, field_join, is_member,
    subfields, trivial_subfield,
)
from flatfields.numfield import QQ, minimal_polynomial, nf_create
from flatfields.poly import Poly


def P(*ints):
    return Poly.from_ints(ints)


@pytest.fixture
def K2():
    return nf_create(P(-2, 0, 1), (1, 2))


@pytest.fixture
def K3():
    return nf_create(P(-3, 0, 1), (1, 2))


@pytest.fixture
def K5():
    return nf_create(P(-5, 0, 1), (2, 3))


def rebuild_K(unit, factors, K):
    acc = Poly([K.one()])
    for g, m in factors:
        acc = acc * g ** m
    return acc.scale(unit)


def test_factor_splits_in_field(K2):
    f = P(-2, 0, 1)
    unit, facs = factor_over_K(f, K2)
    assert len(facs) == 2
    assert all(g.degree == 1 for g, _ in facs)
    roots = sorted([-g.coeffs[0] for g, _ in facs], key=lambda r: r.coords)
    r = K2.gen()
    assert set(tuple(x.coords) for x in roots) == \
        {tuple(r.coords), tuple((-r).coords)}
    from flatfields.fieldops import _lift_poly
    assert rebuild_K(unit, facs, K2) == _lift_poly(f, K2)


def test_factor_stays_irreducible(K2):
    _, facs = factor_over_K(P(-3, 0, 1), K2)
    assert len(facs) == 1 and facs[0][0].degree == 2


def test_factor_golden_ratio_over_sqrt5(K5):
    # x^2 - 3x + 1 has roots (3 +/- sqrt5)/2
    _, facs = factor_over_K(P(1, -3, 1), K5)
    assert len(facs) == 2
    for g, _ in facs:
        root = -g.coeffs[0]
        # substitute back
        val = root * root - root * 3 + 1
        assert val.is_zero()


def test_factor_over_Q_field():
    _, facs = factor_over_K(P(-1, 0, 1), QQ)
    assert len(facs) == 2


def test_join_of_sqrt2_sqrt3(K2, K3):
    M, t1, t2 = field_join(K2, K3)
    assert M.degree == 4
    assert minimal_polynomial(t1) == P(-2, 0, 1)
    assert minimal_polynomial(t2) == P(-3, 0, 1)
    assert (t1 * t1) == 2
    assert (t2 * t2) == 3
    # sqrt2 + sqrt3 has the known degree-4 minimal polynomial
    assert minimal_polynomial(t1 + t2) == P(1, 0, -10, 0, 1)


def test_join_trivial_cases(K2):
    M, t1, t2 = field_join(QQ, K2)
    assert M is K2
    M2, s1, s2 = field_join(K2, K2)
    assert M2 is K2 and s1 == s2


def test_intersect_distinct_quadratics(K2, K3):
    assert field_intersect(K2, K3).degree == 1


def test_intersect_same_field_different_generator(K2):
    # Q(sqrt2) and Q(sqrt2 + 1) coincide
    other = nf_create(P(-1, -2, 1), (2, 3))  # x^2-2x-1, root 1+sqrt2
    got = field_intersect(K2, other)
    assert got.degree == 2
    f, a1, a2 = field_intersect_embedded(K2, other)
    assert minimal_polynomial(a1).degree == 2


def test_intersect_self(K2):
    assert field_intersect(K2, K2) is K2


def test_field_generated_by(K2):
    r = K2.gen()
    assert field_generated_by([], K2).degree == 1
    assert field_generated_by([r], K2).degree == 2
    sub = field_generated_by([2 + 3 * r, K2.from_rational(5)], K2)
    assert sub.degree == 2


def test_is_member(K2):
    r = K2.gen()
    triv = trivial_subfield(K2)
    assert is_member(K2.from_rational(7), triv)
    assert not is_member(r, triv)
    full = field_generated_by([r], K2)
    assert is_member(r + 1, full)


def test_subfields_degree_one_and_prime(K2):
    subs_q = subfields(QQ)
    assert len(subs_q) == 1
    subs = subfields(K2)
    assert sorted(s.degree for s in subs) == [1, 2]


def test_subfields_biquadratic():
    # Q(sqrt2 + sqrt3): subfields Q, Q(sqrt2), Q(sqrt3), Q(sqrt6), full
    K = nf_create(P(1, 0, -10, 0, 1), (3, Fraction(16, 5)))
    subs = subfields(K)
    assert sorted(s.degree for s in subs) == [1, 2, 2, 2, 4]
    # inside K with theta = sqrt2 + sqrt3:
    #   sqrt2 = (theta^3 - 9 theta)/2, sqrt3 = (11 theta - theta^3)/2,
    #   sqrt6 = (theta^2 - 5)/2
    th = K.gen()
    half = Fraction(1, 2)
    sqrt2 = (th ** 3 - 9 * th) * half
    sqrt3 = (11 * th - th ** 3) * half
    sqrt6 = (th * th - 5) * half
    assert sqrt2 * sqrt2 == 2 and sqrt3 * sqrt3 == 3 and sqrt6 * sqrt6 == 6
    quads = [s for s in subs if s.degree == 2]
    for gen in (sqrt2, sqrt3, sqrt6):
        homes = [s for s in quads if s.contains(gen)]
        assert len(homes) == 1


def test_subfields_cube_root_2():
    K = nf_create(P(-2, 0, 0, 1), (1, 2))
    subs = subfields(K)
    assert sorted(s.degree for s in subs) == [1, 3]


def test_subfields_closed_under_intersection(K2):
    K = nf_create(P(1, 0, -10, 0, 1), (3, Fraction(16, 5)))
    subs = subfields(K)
    gens = [s.gen_in_ambient for s in subs]
    # Q and K present
    assert any(s.degree == 1 for s in subs)
    assert any(s.degree == K.degree for s in subs)
    # pairwise intersections of the power spans are again in the list
    from flatfields.linalg import Subspace
    spans = [Subspace(K.degree, [list(map(Fraction, r)) for r in s.power_rows])
             for s in subs]
    for i in range(len(spans)):
        for j in range(len(spans)):
            w = spans[i].intersect(spans[j])
            assert any(w == sp for sp in spans)


def test_subfields_degree_cap():
    K = nf_create(P(1, 0, -10, 0, 1), (3, Fraction(16, 5)))
    from flatfields.config import DEFAULT
    with pytest.raises(DegreeLimitExceeded):
        subfields(K, DEFAULT.with_overrides(subfield_degree_limit=2))


def test_conjugate_embeddings_quadratic(K5):
    F, roots, ident = conjugate_embeddings(K5)
    assert len(roots) == 2
    assert all(z.is_real() for z in roots)
    assert F.degree == 2
    # identity root squares to 5 and matches the selected embedding
    z = roots[ident]
    assert (z.re * z.re) == 5
    assert z.re.sign() == 1


def test_conjugate_embeddings_cubic_complex_pair():
    K = nf_create(P(-2, 0, 0, 1), (1, 2))  # cube root of 2
    F, roots, ident = conjugate_embeddings(K)
    assert len(roots) == 3
    reals = [z for z in roots if z.is_real()]
    assert len(reals) == 1
    # complex pair: r * (-1 +/- i sqrt3)/2; verify each is a root exactly
    for z in roots:
        val = z * z * z - 2
        assert val.is_zero()


def test_is_member_after_compose():
    K = nf_create(P(1, 0, -10, 0, 1), (3, Fraction(16, 5)))
    subs = subfields(K)
    quad = next(s for s in subs if s.degree == 2)
    inner = subfields(quad.field)
    trivial_inner = next(s for s in inner if s.degree == 1)
    composed = quad.compose(trivial_inner)
    assert composed.degree == 1
