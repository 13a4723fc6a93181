"""Translation surfaces from glued polygons or square-tiled data.

A surface is a list of positively oriented simple polygons with vertices in
K[i] for one declared real number field K, together with a pairing of edges
glued by translation (paired edge vectors are exact negatives). From this we
compute singularity data, the stratum, integral homology bases relative to
the singularities, the projection to absolute cohomology, and the exact
period vector.

Cone angles are obtained combinatorially: walking the corners around a
vertex class and counting how often the rotating direction crosses the
positive x-axis. No transcendental angle arithmetic appears anywhere.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import (
    BadGluing, Disconnected, Intransitive, InvalidInput, NonPolygon,
)
from .linalg import (
    MatF, Subspace, int_mat_inverse, int_mat_mul, kernel, smith_normal_form,
    solve,
)
from .numfield import QQ, ComplexAlg, NumberField


class PolygonSurface:
    """Polygons with ComplexAlg vertices plus translation gluings."""

    def __init__(self, field, polygons, gluings):
        self.field = field
        self.polygons = [list(p) for p in polygons]
        self.gluings = [((int(a[0]), int(a[1])), (int(b[0]), int(b[1])))
                        for a, b in gluings]

    def sides(self):
        return [(p, e) for p, poly in enumerate(self.polygons)
                for e in range(len(poly))]

    def edge_vector(self, side):
        p, e = side
        poly = self.polygons[p]
        a = poly[e]
        b = poly[(e + 1) % len(poly)]
        return b - a

    def glue_map(self):
        gm = {}
        for a, b in self.gluings:
            if a in gm or b in gm or a == b:
                raise BadGluing("edge side glued more than once or to itself")
            gm[a] = b
            gm[b] = a
        return gm


@dataclass(frozen=True)
class SquareTiled:
    """Origami data: n unit squares, horizontal and vertical permutations
    in one-line notation (1-based images)."""
    n: int
    h: tuple
    v: tuple

    def __post_init__(self):
        for perm in (self.h, self.v):
            if sorted(perm) != list(range(1, self.n + 1)):
                raise InvalidInput("not a permutation in one-line notation")

    def is_transitive(self):
        seen = {1}
        stack = [1]
        while stack:
            i = stack.pop()
            for img in (self.h[i - 1], self.v[i - 1],
                        self.h.index(i) + 1, self.v.index(i) + 1):
                if img not in seen:
                    seen.add(img)
                    stack.append(img)
        return len(seen) == self.n


@dataclass(frozen=True)
class Stratum:
    genus: int
    zero_orders: tuple  # positive orders only; marked points not included
    marked_points: int = 0

    def label(self):
        orders = sorted(self.zero_orders, reverse=True) + [0] * self.marked_points
        inner = ",".join(str(m) for m in orders)
        return f"H({inner})"


@dataclass
class HomologyData:
    rel_basis: list          # integer edge chains spanning H_1(X, Sigma; Z)
    abs_basis: list          # integer edge chains spanning H_1(X; Z)
    proj: list               # 2g x n integer matrix of p in the dual bases
    ker_p_basis: Subspace    # kernel of p inside relative cohomology coords
    s: int                   # number of marked vertex classes
    genus: int
    edge_reps: list          # representative side per edge
    surface: PolygonSurface


@dataclass
class PeriodVector:
    entries: list            # ComplexAlg per relative basis chain
    basis_ref: HomologyData


def _sign_of(x):
    return x.sign() if hasattr(x, "sign") else (0 if x == 0 else (1 if x > 0 else -1))


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def _vec(z):
    return (z.re, z.im)


def _on_positive_x(d):
    return _sign_of(d[1]) == 0 and _sign_of(d[0]) > 0


def _half_index(d):
    """0 for directions with angle in [0, pi), 1 for [pi, 2pi)."""
    sy = _sign_of(d[1])
    if sy > 0:
        return 0
    if sy < 0:
        return 1
    return 0 if _sign_of(d[0]) > 0 else 1


def _angle_less(a, b):
    """Strict order of directions by angle from the positive x-axis."""
    ha, hb = _half_index(a), _half_index(b)
    if ha != hb:
        return ha < hb
    return _sign_of(_cross(a, b)) > 0


def _sector_crosses_positive_x(u, w):
    """1 when the CCW sweep over the half-open sector [u, w) passes the
    positive x-axis direction."""
    if _on_positive_x(u):
        return 1
    if _on_positive_x(w):
        return 0
    return 1 if _angle_less(w, u) else 0


def _segments_share_point(a1, a2, b1, b2):
    """Exact test whether closed segments intersect."""
    d1 = (a2[0] - a1[0], a2[1] - a1[1])
    d2 = (b2[0] - b1[0], b2[1] - b1[1])

    def orient(p, q, r):
        return _sign_of(_cross((q[0] - p[0], q[1] - p[1]),
                               (r[0] - p[0], r[1] - p[1])))

    o1, o2 = orient(a1, a2, b1), orient(a1, a2, b2)
    o3, o4 = orient(b1, b2, a1), orient(b1, b2, a2)
    if o1 != o2 and o3 != o4:
        return True

    def on_segment(p, q, r):
        # r collinear with pq; is it within the box?
        return (min(p[0], q[0]) <= r[0] and r[0] <= max(p[0], q[0])
                and min(p[1], q[1]) <= r[1] and r[1] <= max(p[1], q[1]))

    for (p, q, r, o) in ((a1, a2, b1, o1), (a1, a2, b2, o2),
                         (b1, b2, a1, o3), (b1, b2, a2, o4)):
        if o == 0 and on_segment(p, q, r):
            return True
    return False


def _check_polygon(poly):
    m = len(poly)
    if m < 3:
        raise NonPolygon("polygon needs at least 3 vertices")
    pts = [_vec(z) for z in poly]
    # no zero-length edges, no immediate reversals
    for i in range(m):
        d = (pts[(i + 1) % m][0] - pts[i][0], pts[(i + 1) % m][1] - pts[i][1])
        if _sign_of(d[0]) == 0 and _sign_of(d[1]) == 0:
            raise NonPolygon("zero-length edge")
    for i in range(m):
        d_in = (pts[i][0] - pts[i - 1][0], pts[i][1] - pts[i - 1][1])
        d_out = (pts[(i + 1) % m][0] - pts[i][0], pts[(i + 1) % m][1] - pts[i][1])
        if _sign_of(_cross(d_in, d_out)) == 0 and _sign_of(_dot(d_in, d_out)) < 0:
            raise NonPolygon("edge doubles back on itself")
    # positive orientation: shoelace sum > 0
    area2 = None
    for i in range(m):
        term = pts[i][0] * pts[(i + 1) % m][1] - pts[(i + 1) % m][0] * pts[i][1]
        area2 = term if area2 is None else area2 + term
    if _sign_of(area2) <= 0:
        raise NonPolygon("polygon is not positively oriented")
    # simplicity: non-adjacent edges must not meet
    for i in range(m):
        for j in range(i + 1, m):
            if j == i + 1 or (i == 0 and j == m - 1):
                continue
            if _segments_share_point(pts[i], pts[(i + 1) % m],
                                     pts[j], pts[(j + 1) % m]):
                raise NonPolygon("polygon edges cross")


def _vertex_classes(S, gm):
    """Orbits of the walk-around-a-vertex permutation on corners."""
    corners = [(p, i) for p, poly in enumerate(S.polygons)
               for i in range(len(poly))]

    def next_corner(c):
        p, i = c
        m = len(S.polygons[p])
        in_edge = (p, (i - 1) % m)
        q, j = gm[in_edge]
        return (q, j)

    seen = {}
    classes = []
    for c in corners:
        if c in seen:
            continue
        orbit = []
        cur = c
        while cur not in seen:
            seen[cur] = len(classes)
            orbit.append(cur)
            cur = next_corner(cur)
        classes.append(orbit)
    return classes, seen


def _cone_turns(S, orbit):
    """Total angle around a vertex class, in multiples of 2 pi."""
    crossings = 0
    for (p, i) in orbit:
        poly = S.polygons[p]
        m = len(poly)
        vi = _vec(poly[i])
        vnext = _vec(poly[(i + 1) % m])
        vprev = _vec(poly[(i - 1) % m])
        u = (vnext[0] - vi[0], vnext[1] - vi[1])
        w = (vprev[0] - vi[0], vprev[1] - vi[1])
        crossings += _sector_crosses_positive_x(u, w)
    return crossings


def validate(S):
    """Full structural validation; returns the stratum."""
    if not S.polygons:
        raise NonPolygon("no polygons")
    for poly in S.polygons:
        _check_polygon(poly)
    gm = S.glue_map()
    for side in S.sides():
        if side not in gm:
            raise BadGluing(f"edge {side} is not glued")
    for a, b in S.gluings:
        if not (S.edge_vector(a) + S.edge_vector(b)).is_zero():
            raise BadGluing(f"glued edges {a}, {b} are not exact negatives")
    # connectivity of the polygon adjacency graph
    if S.polygons:
        seen = {0}
        stack = [0]
        while stack:
            p = stack.pop()
            for (a, b) in S.gluings:
                for (x, y) in ((a, b), (b, a)):
                    if x[0] == p and y[0] not in seen:
                        seen.add(y[0])
                        stack.append(y[0])
        if len(seen) != len(S.polygons):
            raise Disconnected("glued polygons are not connected")
    classes, _ = _vertex_classes(S, gm)
    turns = [_cone_turns(S, orbit) for orbit in classes]
    if any(t < 1 for t in turns):
        raise NonPolygon("degenerate cone angle")
    V = len(classes)
    E = len(S.gluings)
    F = len(S.polygons)
    chi = V - E + F
    if chi % 2 != 0:
        raise InvalidInput("odd Euler characteristic")
    genus = (2 - chi) // 2
    orders = [t - 1 for t in turns]
    assert sum(orders) == 2 * genus - 2, "angle count disagrees with genus"
    zero_orders = tuple(sorted((m for m in orders if m > 0), reverse=True))
    marked = sum(1 for m in orders if m == 0)
    return Stratum(genus=genus, zero_orders=zero_orders, marked_points=marked)


def singularity_angles(S):
    """Cone angle multiples (of 2 pi) per vertex class, sorted descending."""
    gm = S.glue_map()
    classes, _ = _vertex_classes(S, gm)
    return sorted((_cone_turns(S, orbit) for orbit in classes), reverse=True)


def square_tiled_to_polygon(T):
    """Unit-square realization of an origami; right/top gluings by h/v."""
    if not T.is_transitive():
        raise Intransitive("permutation pair does not act transitively")
    K = QQ
    zero, one = K.zero(), K.one()
    square = [ComplexAlg(zero, zero), ComplexAlg(one, zero),
              ComplexAlg(one, one), ComplexAlg(zero, one)]
    polygons = [list(square) for _ in range(T.n)]
    gluings = []
    for i in range(1, T.n + 1):
        gluings.append(((i - 1, 1), (T.h[i - 1] - 1, 3)))
        gluings.append(((i - 1, 2), (T.v[i - 1] - 1, 0)))
    return PolygonSurface(K, polygons, gluings)


def homology(S):
    """Integral homology bases and the relative-to-absolute projection."""
    stratum = validate(S)
    gm = S.glue_map()
    classes, corner_class = _vertex_classes(S, gm)
    # edges: one per gluing pair, oriented along the lexicographically
    # smaller side
    edge_reps = []
    side_to_edge = {}
    for a, b in sorted(S.gluings):
        rep = min(a, b)
        other = max(a, b)
        side_to_edge[rep] = (len(edge_reps), 1)
        side_to_edge[other] = (len(edge_reps), -1)
        edge_reps.append(rep)
    E = len(edge_reps)
    F = len(S.polygons)
    V = len(classes)
    # boundary of faces in edge coordinates
    d2 = [[0] * F for _ in range(E)]
    for p, poly in enumerate(S.polygons):
        for e in range(len(poly)):
            idx, sgn = side_to_edge[(p, e)]
            d2[idx][p] += sgn
    # boundary of edges in vertex-class coordinates
    d1 = [[0] * E for _ in range(V)]
    for idx, (p, e) in enumerate(edge_reps):
        m = len(S.polygons[p])
        tail = corner_class[(p, e)]
        head = corner_class[(p, (e + 1) % m)]
        d1[head][idx] += 1
        d1[tail][idx] -= 1

    # relative chains: Z^E modulo face boundaries, via Smith form
    S2, U2, V2 = smith_normal_form(d2)
    r2 = sum(1 for i in range(min(E, F)) if S2[i][i] != 0)
    assert all(S2[i][i] == 1 for i in range(r2)), "relative homology torsion"
    U2inv = int_mat_inverse(U2)
    rel_basis = [[U2inv[i][j] for i in range(E)] for j in range(r2, E)]
    n = len(rel_basis)
    assert n == 2 * stratum.genus + V - 1

    # absolute cycles: kernel of d1, then modulo face boundaries
    S1, U1, V1 = smith_normal_form(d1)
    r1 = sum(1 for i in range(min(V, E)) if S1[i][i] != 0)
    kerb = [[V1[i][j] for i in range(E)] for j in range(r1, E)]  # rows: cycles
    kmat = MatF([[Fraction(kerb[j][i]) for j in range(len(kerb))]
                 for i in range(E)])
    cols_in_ker = []
    for f in range(F):
        target = [Fraction(d2[i][f]) for i in range(E)]
        sol = solve(kmat, target)
        assert sol is not None, "face boundary is not a cycle"
        assert all(x.denominator == 1 for x in sol)
        cols_in_ker.append([int(x) for x in sol])
    C = [[cols_in_ker[f][j] for f in range(F)] for j in range(len(kerb))]
    S3, U3, V3 = smith_normal_form(C)
    r3 = sum(1 for i in range(min(len(kerb), F)) if S3[i][i] != 0)
    assert all(S3[i][i] == 1 for i in range(r3)), "absolute homology torsion"
    U3inv = int_mat_inverse(U3)
    abs_basis = []
    for j in range(r3, len(kerb)):
        chain = [0] * E
        for t in range(len(kerb)):
            c = U3inv[t][j]
            if c:
                for i in range(E):
                    chain[i] += c * kerb[t][i]
        abs_basis.append(chain)
    assert len(abs_basis) == 2 * stratum.genus

    # projection matrix: absolute cycle = sum B[i][j] rel_basis[j] + boundary
    big = MatF([[Fraction(rel_basis[j][i]) for j in range(n)] +
                [Fraction(d2[i][f]) for f in range(F)] for i in range(E)])
    proj = []
    for z in abs_basis:
        sol = solve(big, [Fraction(c) for c in z])
        assert sol is not None
        row = sol[:n]
        assert all(x.denominator == 1 for x in row)
        proj.append([int(x) for x in row])

    ker_p = kernel(MatF([[Fraction(c) for c in row] for row in proj]))
    assert ker_p.dim == V - 1

    return HomologyData(rel_basis=rel_basis, abs_basis=abs_basis, proj=proj,
                        ker_p_basis=ker_p, s=V, genus=stratum.genus,
                        edge_reps=edge_reps, surface=S)


def periods(S, H):
    """Exact period vector over the relative homology basis."""
    if H.surface is not S:
        raise InvalidInput("homology data was computed from another surface")
    vecs = [S.edge_vector(side) for side in H.edge_reps]
    entries = []
    zero = ComplexAlg(S.field.zero())
    for chain in H.rel_basis:
        acc = zero
        for c, v in zip(chain, vecs):
            if c:
                acc = acc + v * Fraction(c)
        entries.append(acc)
    return PeriodVector(entries=entries, basis_ref=H)


def chain_period(S, H, chain):
    """Period of an arbitrary integer edge chain."""
    vecs = [S.edge_vector(side) for side in H.edge_reps]
    acc = ComplexAlg(S.field.zero())
    for c, v in zip(chain, vecs):
        if c:
            acc = acc + v * Fraction(c)
    return acc


def absolute_periods(pv):
    """Periods of the absolute basis, via the projection matrix."""
    H = pv.basis_ref
    out = []
    zero = ComplexAlg(H.surface.field.zero())
    for row in H.proj:
        acc = zero
        for c, z in zip(row, pv.entries):
            if c:
                acc = acc + z * Fraction(c)
        out.append(acc)
    return out
