from fractions import Fraction

import pytest

from flatfields.errors import InvalidInput, ReduciblePolynomial
from flatfields.generic import ExtendedPeriod
from flatfields.linalg import Subspace
from flatfields.monodromy import Representation
from flatfields.numfield import QQ, ComplexAlg, nf_create
from flatfields.poly import Poly
from flatfields.serialize import (
    ambient_from_json, ambient_to_json, dumps_canonical, elem_from_json,
    elem_to_json, field_from_json, field_to_json, periods_from_json,
    periods_to_json, rat_parse, rat_str, representation_from_json,
    representation_to_json, subspace_from_json, subspace_to_json,
    surface_from_json, surface_to_json, square_tiled_to_json,
)
from flatfields.surface import SquareTiled, square_tiled_to_polygon
from tests.test_surface import octagon_surface


def test_rational_strings():
    assert rat_str(Fraction(3, 4)) == "3/4"
    assert rat_str(Fraction(-5)) == "-5"
    assert rat_parse("3/4") == Fraction(3, 4)
    assert rat_parse("-5") == Fraction(-5)


def test_field_roundtrip():
    K = nf_create(Poly.from_ints([-2, 0, 1]), (1, 2))
    obj = field_to_json(K)
    K2 = field_from_json(obj)
    assert K2.minpoly == K.minpoly
    assert K2.interval0 == K.interval0
    assert dumps_canonical(field_to_json(K2)) == dumps_canonical(obj)


def test_field_load_validates():
    with pytest.raises(ReduciblePolynomial):
        field_from_json({"minpoly": ["-1", "0", "1"], "embedding": ["0", "2"]})


def test_element_roundtrip():
    K = nf_create(Poly.from_ints([-2, 0, 1]), (1, 2))
    e = K.element([Fraction(1, 3), Fraction(-7, 2)])
    assert elem_from_json(elem_to_json(e), K) == e


def test_surface_roundtrip_bitexact():
    S = octagon_surface()
    obj = surface_to_json(S)
    S2 = surface_from_json(obj)
    obj2 = surface_to_json(S2)
    assert dumps_canonical(obj) == dumps_canonical(obj2)


def test_square_tiled_roundtrip():
    T = SquareTiled(3, (2, 1, 3), (3, 2, 1))
    obj = square_tiled_to_json(T)
    T2 = surface_from_json(obj)
    assert isinstance(T2, SquareTiled)
    assert T2 == T


def test_subspace_roundtrip():
    K = nf_create(Poly.from_ints([-2, 0, 1]), (1, 2))
    r = K.gen()
    V = Subspace(3, [[K.one(), r, K.zero()], [K.zero(), K.zero(), K.one()]])
    obj = subspace_to_json(V, K, is_complex=False)
    V2, K2, cplx = subspace_from_json(obj)
    assert not cplx
    assert V2.rows == V.rows


def test_complex_subspace_roundtrip():
    K = nf_create(Poly.from_ints([-2, 0, 1]), (1, 2))
    z = ComplexAlg(K.one(), K.gen())
    V = Subspace(2, [[z, ComplexAlg(K.zero())]])
    obj = subspace_to_json(V, K, is_complex=True)
    V2, _, cplx = subspace_from_json(obj)
    assert cplx
    assert V2.rows == V.rows


def test_representation_roundtrip():
    R = Representation(2, [[[2, 1], [1, 1]]])
    obj = representation_to_json(R, pa=[[2, 1], [1, 1]])
    R2, pa = representation_from_json(obj)
    assert R2.generators == R.generators
    assert pa == [[2, 1], [1, 1]]


def test_periods_roundtrip():
    zs = [ExtendedPeriod(alg=ComplexAlg(QQ.from_rational(1)),
                         trans={"t1": (Fraction(1), Fraction(0))}),
          ExtendedPeriod(alg=ComplexAlg(QQ.zero(), QQ.one()))]
    obj = periods_to_json(zs, QQ)
    zs2, K = periods_from_json(obj)
    assert zs2[0].trans == zs[0].trans
    assert zs2[1].alg == zs[1].alg


def test_periods_undeclared_symbol_rejected():
    obj = {"field": field_to_json(QQ), "symbols": [],
           "entries": [{"alg": [["0"], ["0"]], "trans": {"t": ["1", "0"]}}]}
    with pytest.raises(InvalidInput):
        periods_from_json(obj)


def test_ambient_roundtrip():
    from flatfields.generic import AmbientModel
    M = AmbientModel(n=4, k_M=QQ, relations=Subspace.zero(4), genus=2)
    obj = ambient_to_json(M)
    M2 = ambient_from_json(obj)
    assert M2.n == 4 and M2.genus == 2
    assert M2.relations.is_zero_space()
