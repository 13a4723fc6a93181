from fractions import Fraction

import pytest

from flatfields.errors import BadGluing, Intransitive, NonPolygon
from flatfields.numfield import QQ, ComplexAlg, nf_create
from flatfields.poly import Poly
from flatfields.surface import (
    PolygonSurface, SquareTiled, absolute_periods, chain_period, homology,
    periods, singularity_angles, square_tiled_to_polygon, validate,
)


def origami(h, v):
    return square_tiled_to_polygon(SquareTiled(len(h), tuple(h), tuple(v)))


def octagon_surface():
    K = nf_create(Poly.from_ints([-2, 0, 1]), (1, 2))
    r = K.gen()
    half = Fraction(1, 2)
    c = r * half
    zero = K.zero()
    one = K.one()

    def pt(x, y):
        return ComplexAlg(x, y)

    verts = [
        pt(zero, zero),
        pt(one, zero),
        pt(one + c, c),
        pt(one + c, one + c),
        pt(one, one + c + c),
        pt(zero, one + c + c),
        pt(-c, one + c),
        pt(-c, c),
    ]
    gluings = [((0, e), (0, e + 4)) for e in range(4)]
    return PolygonSurface(K, [verts], gluings)


def test_torus():
    S = origami([1], [1])
    st = validate(S)
    assert st.genus == 1
    assert st.zero_orders == ()
    assert st.marked_points == 1
    assert st.label() == "H(0)"
    assert singularity_angles(S) == [1]


def test_lshape_h2():
    S = origami([2, 1, 3], [3, 2, 1])
    st = validate(S)
    assert st.genus == 2
    assert st.zero_orders == (2,)
    assert st.label() == "H(2)"
    assert singularity_angles(S) == [3]


def test_octagon_h2():
    S = octagon_surface()
    st = validate(S)
    assert st.genus == 2
    assert st.zero_orders == (2,)
    assert singularity_angles(S) == [3]


def test_intransitive_rejected():
    with pytest.raises(Intransitive):
        square_tiled_to_polygon(SquareTiled(2, (1, 2), (1, 2)))


def test_bad_gluing_rejected():
    K = QQ
    zero, one = K.zero(), K.one()
    two = K.from_rational(2)
    sq = [ComplexAlg(zero, zero), ComplexAlg(one, zero),
          ComplexAlg(one, one), ComplexAlg(zero, one)]
    rect = [ComplexAlg(zero, zero), ComplexAlg(two, zero),
            ComplexAlg(two, one), ComplexAlg(zero, one)]
    S = PolygonSurface(K, [sq, rect],
                       [((0, 0), (1, 2)), ((0, 1), (0, 3)),
                        ((0, 2), (1, 0)), ((1, 1), (1, 3))])
    with pytest.raises(BadGluing):
        validate(S)


def test_nonsimple_polygon_rejected():
    K = QQ
    f = K.from_rational
    bowtie = [ComplexAlg(f(0), f(0)), ComplexAlg(f(2), f(2)),
              ComplexAlg(f(2), f(0)), ComplexAlg(f(0), f(2))]
    S = PolygonSurface(K, [bowtie],
                       [((0, 0), (0, 2)), ((0, 1), (0, 3))])
    with pytest.raises(NonPolygon):
        validate(S)


def test_homology_ranks_torus():
    S = origami([1], [1])
    H = homology(S)
    assert len(H.rel_basis) == 2
    assert len(H.abs_basis) == 2
    assert H.ker_p_basis.is_zero_space()
    assert H.s == 1


def test_homology_ranks_lshape():
    S = origami([2, 1, 3], [3, 2, 1])
    H = homology(S)
    assert len(H.rel_basis) == 4
    assert len(H.abs_basis) == 4
    assert H.s == 1
    assert H.ker_p_basis.is_zero_space()


def test_homology_ranks_two_marked_classes():
    # 4-square origami, h a 4-cycle, v = (1 2): one 6 pi cone point plus one
    # marked regular point, so s = 2 and the relative rank grows by one
    S = origami([2, 3, 4, 1], [2, 1, 3, 4])
    st = validate(S)
    assert st.genus == 2
    assert st.zero_orders == (2,)
    assert st.marked_points == 1
    H = homology(S)
    assert len(H.rel_basis) == 5
    assert H.s == 2
    assert H.ker_p_basis.dim == 1


def test_homology_ranks_h11_origami():
    # h a 4-cycle, v = (1 3): two cone points of angle 4 pi, honest H(1,1)
    S = origami([2, 3, 4, 1], [3, 2, 1, 4])
    st = validate(S)
    assert st.genus == 2
    assert st.zero_orders == (1, 1)
    assert st.marked_points == 0
    assert singularity_angles(S) == [2, 2]
    H = homology(S)
    assert len(H.rel_basis) == 5
    assert H.s == 2
    assert H.ker_p_basis.dim == 1


def test_homology_ranks_octagon():
    H = homology(octagon_surface())
    assert len(H.rel_basis) == 4
    assert len(H.abs_basis) == 4
    assert H.ker_p_basis.is_zero_space()


def test_torus_periods_unimodular():
    S = origami([1], [1])
    H = homology(S)
    pv = periods(S, H)
    assert len(pv.entries) == 2
    aps = absolute_periods(pv)
    m = [[ap.re.rational_value(), ap.im.rational_value()] for ap in aps]
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    assert abs(det) == 1


def test_face_boundary_has_zero_period():
    S = origami([2, 1, 3], [3, 2, 1])
    H = homology(S)
    # boundary of each polygon as an edge chain
    E = len(H.edge_reps)
    side_to_edge = {}
    for idx, rep in enumerate(H.edge_reps):
        side_to_edge[rep] = (idx, 1)
    gm = S.glue_map()
    for p, poly in enumerate(S.polygons):
        chain = [0] * E
        for e in range(len(poly)):
            side = (p, e)
            if side in side_to_edge:
                idx, sgn = side_to_edge[side]
            else:
                idx, sgn = side_to_edge[gm[side]][0], -1
            chain[idx] += sgn
        assert chain_period(S, H, chain).is_zero()


def test_proj_reproduces_absolute_periods():
    for S in (origami([2, 1, 3], [3, 2, 1]),
              origami([2, 3, 4, 1], [2, 1, 3, 4]),
              octagon_surface()):
        H = homology(S)
        pv = periods(S, H)
        via_proj = absolute_periods(pv)
        direct = [chain_period(S, H, z) for z in H.abs_basis]
        assert all((a - b).is_zero() for a, b in zip(via_proj, direct))


def test_octagon_periods_in_sqrt2():
    S = octagon_surface()
    H = homology(S)
    pv = periods(S, H)
    K = S.field
    assert K.degree == 2
    for z in pv.entries:
        assert z.re.field.minpoly == K.minpoly


def test_origami_periods_integral():
    S = origami([2, 3, 4, 1], [2, 1, 3, 4])
    H = homology(S)
    pv = periods(S, H)
    for z in pv.entries:
        assert z.re.rational_value().denominator == 1
        assert z.im.rational_value().denominator == 1
