"""Field-level operations: factorization over number fields, compositum,
intersection, generated subfields, the complete subfield lattice, and real
towers carrying all conjugates of a field generator.

Factorization over K uses the norm reduction: shift the argument by integer
multiples of the generator until the norm (computed by evaluation and
interpolation of resultants) is squarefree, factor the norm over Q, and read
the K-factors off as gcds.
"""

from fractions import Fraction

from .config import DEFAULT
from .errors import DegreeLimitExceeded, FieldMismatch
from .intervals import iv_add, iv_scale
from .linalg import MatF, Subspace, kernel
from .numfield import (
    QQ, ComplexAlg, NFElement, NumberField, _solve_rational, minimal_polynomial,
)
from .poly import (
    Poly, count_roots_between, poly_gcd, resultant, lagrange_interpolate,
    squarefree_part, yun_squarefree,
)
from .qfactor import factor_over_Q


def _lift_poly(f, K):
    """Coerce a polynomial with Fraction or NFElement coefficients into K[x]."""
    out = []
    for c in f.coeffs:
        if isinstance(c, Fraction):
            out.append(K.from_rational(c))
        elif isinstance(c, int):
            out.append(K.from_rational(Fraction(c)))
        else:
            if not (c.field is K or (c.field.minpoly == K.minpoly
                                     and c.field.interval0 == K.interval0)):
                raise FieldMismatch("coefficient from a different field")
            out.append(c)
    return Poly(out)


def _eval_points(count):
    """Deterministic rational sample points 0, 1, -1, 2, -2, ..."""
    pts = [Fraction(0)]
    k = 1
    while len(pts) < count:
        pts.append(Fraction(k))
        if len(pts) < count:
            pts.append(Fraction(-k))
        k += 1
    return pts[:count]


def _norm_poly(f, K, config=DEFAULT):
    """Norm of f in K[x] down to Q[x], by interpolation of element norms."""
    deg_norm = K.degree * f.degree
    pts = []
    for x0 in _eval_points(deg_norm + 1):
        val = f(K.from_rational(x0))
        pts.append((x0, resultant(K.minpoly, Poly(val.coords))))
    return lagrange_interpolate(pts)


def factor_over_K(f, K, config=DEFAULT):
    """Complete factorization in K[x].

    Returns (unit, factors): unit an NFElement of K, factors a list of
    (monic irreducible Poly over K, multiplicity).
    """
    if K.degree == 1:
        unitq, facs = factor_over_Q(
            Poly([c.rational_value() if isinstance(c, NFElement) else Fraction(c)
                  for c in f.coeffs]), config)
        return K.from_rational(unitq), [(_lift_poly(g, K), m) for g, m in facs]
    f = _lift_poly(f, K)
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    unit = f.lc
    if f.degree == 0:
        return unit, []
    out = []
    _, parts = yun_squarefree(f)
    for g, mult in parts:
        for fac in _factor_squarefree_K(g, K, config):
            out.append((fac, mult))
    out.sort(key=lambda t: (t[0].degree, _poly_key(t[0])))
    return unit, out


def _poly_key(g):
    return tuple(tuple(c.coords) for c in g.coeffs)


def _factor_squarefree_K(g, K, config):
    """Irreducible factors of a monic squarefree g in K[x]."""
    if g.degree <= 1:
        return [g]
    theta = K.gen()
    one = K.one()
    norm_cap = max(config.factor_degree_limit, K.degree * g.degree)
    cfg = config.with_overrides(factor_degree_limit=norm_cap)
    s = 0
    while True:
        shifted = g.compose(Poly([theta * (-s), one]))
        norm = _norm_poly(shifted, K, config)
        if poly_gcd(norm, norm.derivative()).degree == 0:
            break
        s += 1
        if s > 4 * K.degree * g.degree:
            raise RuntimeError("no squarefree norm shift found")
    _, nfacs = factor_over_Q(norm, cfg)
    factors = []
    for nf, _ in nfacs:
        h = poly_gcd(shifted, _lift_poly(nf, K))
        if h.degree > 0:
            factors.append(h.compose(Poly([theta * s, one])).monic())
    check = Poly([one])
    for h in factors:
        check = check * h
    assert check == g.monic(), "norm factorization self-check failed"
    return factors


class Subfield:
    """A subfield of an ambient NumberField, carried with its embedding.

    field is the abstract presentation Q(gamma); gen_in_ambient is the image
    of field.gen(); power_rows are the Q-coordinates of gamma^j in the
    ambient, backing exact membership tests.
    """

    def __init__(self, ambient, field, gen_in_ambient):
        self.ambient = ambient
        self.field = field
        self.gen_in_ambient = gen_in_ambient
        rows = []
        cur = ambient.one()
        for _ in range(field.degree):
            rows.append(list(cur.coords))
            cur = cur * gen_in_ambient
        self.power_rows = rows

    @property
    def degree(self):
        return self.field.degree

    def coords_of(self, a):
        """Coordinates of an ambient element in the gamma power basis,
        or None when the element is outside the subfield."""
        sol = _solve_rational(self.power_rows, list(a.coords))
        return None if sol is None else tuple(sol)

    def contains(self, a):
        return self.coords_of(a) is not None

    def from_ambient(self, a):
        c = self.coords_of(a)
        if c is None:
            raise FieldMismatch("element is not in the subfield")
        return self.field.element(c)

    def to_ambient(self, e):
        acc = self.ambient.zero()
        cur = self.ambient.one()
        for c in e.coords:
            if c:
                acc = acc + cur * c
            cur = cur * self.gen_in_ambient
        return acc

    def compose(self, inner):
        """View a subfield of self.field as a subfield of self.ambient."""
        return Subfield(self.ambient, inner.field,
                        self.to_ambient(inner.gen_in_ambient))

    def __repr__(self):
        return f"Subfield(deg {self.degree} of deg {self.ambient.degree})"


def is_member(a, subfield):
    """Exact membership of an ambient element in a subfield."""
    if isinstance(a, Fraction) or isinstance(a, int):
        return True
    return subfield.contains(a)


def trivial_subfield(ambient):
    return Subfield(ambient, QQ, ambient.zero())


def full_subfield(ambient):
    field = NumberField(ambient.minpoly, ambient.interval0,
                        _trusted=True) if ambient.degree > 1 else QQ
    gen = ambient.gen() if ambient.degree > 1 else ambient.zero()
    return Subfield(ambient, field, gen)


def _square_free_split(n):
    """(d, s) with n = d * s^2 and d squarefree, for a nonzero integer."""
    sign = -1 if n < 0 else 1
    n = abs(n)
    d, s = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e % 2:
                d *= p
            s *= p ** (e // 2)
        p += 1 if p == 2 else 2
    return sign * d * n, s


def _canonical_quadratic(ambient, gamma, mp):
    """Replace a quadratic generator by one with minimal polynomial x^2 - d,
    d a squarefree integer."""
    b, c = mp.coeffs[1], mp.coeffs[0]
    e = (b * b - 4 * c) / 4  # delta = gamma + b/2 has delta^2 = e
    n = e.numerator * e.denominator
    d, s = _square_free_split(n)
    delta = (gamma + b / 2) * Fraction(e.denominator, s)
    assert delta * delta == d
    return delta, Poly.from_ints([-d, 0, 1])


def _primitive_from_span(ambient, basis_elements, config=DEFAULT):
    """Deterministic primitive element for a multiplicatively closed span."""
    dim = len(basis_elements)
    if dim == 1:
        return trivial_subfield(ambient)
    for c in range(config.join_coeff_limit + 1):
        gamma = ambient.zero()
        for j, b in enumerate(basis_elements):
            gamma = gamma + b * (Fraction(c) ** j)
        mp = minimal_polynomial(gamma)
        if mp.degree != dim:
            continue
        if dim == 2:
            gamma, mp = _canonical_quadratic(ambient, gamma, mp)
        iv = ambient.element_interval(gamma)
        while (mp(iv[0]) == 0 or mp(iv[1]) == 0
               or count_roots_between(mp, iv[0], iv[1]) != 1):
            ambient.refine()
            iv = ambient.element_interval(gamma)
        field = NumberField(mp, iv, _trusted=True)
        return Subfield(ambient, field, gamma)
    raise DegreeLimitExceeded("primitive element search exhausted its budget")


def field_generated_by(elements, ambient, config=DEFAULT):
    """Smallest subfield of the ambient containing all given elements."""
    rows = [list(ambient.one().coords)]
    for e in elements:
        if isinstance(e, (int, Fraction)):
            continue
        rows.append(list(e.coords))
    span = Subspace(ambient.degree, [[Fraction(c) for c in r] for r in rows])
    # close under products until the dimension stabilizes
    while True:
        els = [ambient.element(r) for r in span.rows]
        new_rows = []
        for i, a in enumerate(els):
            for b in els[i:]:
                p = a * b
                if not span.contains_vector(list(p.coords)):
                    new_rows.append(list(p.coords))
        if not new_rows:
            break
        span = Subspace(ambient.degree, [list(r) for r in span.rows] + new_rows)
    return _primitive_from_span(ambient, [ambient.element(r) for r in span.rows],
                                config)


# compositum and intersection


def _join_candidate_poly(m1, m2, c):
    """Monic rational polynomial with roots alpha_i + c * beta_j."""
    deg = m1.degree * m2.degree
    pts = []
    k = 0
    while len(pts) < deg + 1:
        x0 = Fraction((k + 1) // 2 * (1 if k % 2 == 0 else -1))
        k += 1
        inner = m1.compose(Poly([x0, Fraction(-c)]))
        pts.append((x0, resultant(m2, inner)))
    return lagrange_interpolate(pts)


def _locate_root_in_field(mp, target_iv, M, config):
    """The element of M equal to the real root of mp isolated by target_iv,
    or None when that root is not in M.

    target_iv must be an isolating interval for one root of mp with non-root
    endpoints; since candidates are exact roots of mp, refining only M's
    embedding decides inclusion in or exclusion from the fixed interval.
    """
    lo, hi = target_iv
    if M.degree == 1:
        _, facs = factor_over_Q(mp, config)
        for g, _ in facs:
            if g.degree == 1:
                r = -g.coeffs[0]
                if lo < r < hi:
                    return M.from_rational(r)
        return None
    _, facs = factor_over_K(mp, M, config)
    candidates = [-g.coeffs[0] for g, _ in facs if g.degree == 1]
    for a in candidates:
        while True:
            alo, ahi = M.element_interval(a)
            if ahi < lo or alo > hi:
                break
            if lo < alo and ahi < hi:
                return a
            M.refine()
    return None


def field_join(K1, K2, config=DEFAULT):
    """Compositum (M, t1, t2): t1, t2 are the images of the generators.

    M is generated by gen1 + c*gen2 for the smallest c >= 0 such that both
    generators are expressible in M.
    """
    if K1.degree == 1:
        return K2, K2.from_rational(K1.root_rational), \
            (K2.gen() if K2.degree > 1 else K2.from_rational(K2.root_rational))
    if K2.degree == 1:
        return K1, K1.gen(), K1.from_rational(K2.root_rational)
    if K1.minpoly == K2.minpoly and K1.same_field(K2):
        return K1, K1.gen(), K1.gen()
    m1, m2 = K1.minpoly, K2.minpoly
    for c in range(config.join_coeff_limit + 1):
        p = _join_candidate_poly(m1, m2, c)
        sf = squarefree_part(p)

        def gamma_iv():
            return iv_add(K1._iv, iv_scale(K2._iv, Fraction(c)))

        def gamma_refine():
            K1.refine()
            K2.refine()

        # shrink until the sum interval isolates gamma among the roots of p
        while True:
            lo, hi = gamma_iv()
            if sf(lo) != 0 and sf(hi) != 0 \
                    and count_roots_between(sf, lo, hi) == 1:
                break
            gamma_refine()
        _, facs = factor_over_Q(p, config.with_overrides(
            factor_degree_limit=max(config.factor_degree_limit, p.degree)))
        target = None
        for g, _ in facs:
            lo, hi = gamma_iv()
            if g(lo) != 0 and g(hi) != 0 and count_roots_between(g, lo, hi) == 1:
                target = g
                break
        if target is None or target.degree < max(K1.degree, K2.degree):
            continue
        if target.degree == 1:
            continue  # gamma collapses to a rational; generators not expressible
        M = NumberField(target, gamma_iv(), _trusted=True)
        t1 = _locate_root_in_field(m1, K1._iv, M, config)
        if t1 is None:
            continue
        t2 = _locate_root_in_field(m2, K2._iv, M, config)
        if t2 is None:
            continue
        return M, t1, t2
    raise DegreeLimitExceeded("no compositum generator found within the budget")


def field_intersect_embedded(K1, K2, config=DEFAULT):
    """(field, a1, a2): the intersection as an abstract field plus elements
    a1 in K1, a2 in K2 both mapping onto its generator."""
    if K1.degree == 1 or K2.degree == 1:
        return QQ, K1.zero(), K2.zero()
    if K1.minpoly == K2.minpoly and K1.same_field(K2):
        return K1, K1.gen(), K2.gen()
    M, t1, t2 = field_join(K1, K2, config)
    rows1, rows2 = [], []
    cur = M.one()
    for _ in range(K1.degree):
        rows1.append([Fraction(x) for x in cur.coords])
        cur = cur * t1
    cur = M.one()
    for _ in range(K2.degree):
        rows2.append([Fraction(x) for x in cur.coords])
        cur = cur * t2
    S1 = Subspace(M.degree, rows1)
    S2 = Subspace(M.degree, rows2)
    W = S1.intersect(S2)
    if W.dim == 1:
        return QQ, K1.zero(), K2.zero()
    sub = _primitive_from_span(M, [M.element(r) for r in W.rows], config)
    gamma = sub.gen_in_ambient
    c1 = _solve_rational(rows1, list(gamma.coords))
    c2 = _solve_rational(rows2, list(gamma.coords))
    assert c1 is not None and c2 is not None
    return sub.field, K1.element(c1), K2.element(c2)


def field_intersect(K1, K2, config=DEFAULT):
    """Intersection of two real number fields as an abstract NumberField."""
    return field_intersect_embedded(K1, K2, config)[0]


# complete subfield lattice (principal subfields + intersections)


def subfields(K, config=DEFAULT):
    """All subfields of K, each with an embedding into K."""
    if K.degree > config.subfield_degree_limit:
        raise DegreeLimitExceeded(
            f"degree {K.degree} exceeds subfield cap "
            f"{config.subfield_degree_limit}")
    if K.degree == 1:
        return [trivial_subfield(K)]
    d = K.degree
    _, facs = factor_over_K(K.minpoly, K, config)
    spaces = []
    theta_pows = [K.one()]
    for _ in range(d - 1):
        theta_pows.append(theta_pows[-1] * K.gen())
    for f_i, _ in facs:
        di = f_i.degree
        # x^j mod f_i, as polynomials over K
        xr = [Poly([K.one()])]
        xpoly = Poly([K.zero(), K.one()])
        for _ in range(d - 1):
            xr.append((xr[-1] * xpoly) % f_i)
        # condition on a = sum c_j theta^j: sum c_j (x^j mod f_i - theta^j) = 0
        cols = []
        for j in range(d):
            diff = xr[j] - Poly([theta_pows[j]])
            col = []
            for t in range(di):
                entry = diff.coeffs[t] if t <= diff.degree else K.zero()
                col.extend(entry.coords)
            cols.append(col)
        neqs = di * d
        M = MatF([[cols[j][i] for j in range(d)] for i in range(neqs)])
        spaces.append(kernel(M))
    full = Subspace(d, [[Fraction(1) if i == j else Fraction(0)
                         for j in range(d)] for i in range(d)])
    lattice = {full}
    for s in spaces:
        lattice.add(s)
    changed = True
    while changed:
        changed = False
        items = list(lattice)
        for i in range(len(items)):
            for j in range(i + 1, len(items)):
                w = items[i].intersect(items[j])
                if w not in lattice:
                    lattice.add(w)
                    changed = True
    out = []
    for space in lattice:
        els = [K.element(r) for r in space.rows]
        out.append(_primitive_from_span(K, els, config))
    out.sort(key=lambda s: (s.degree,
                            tuple(tuple(r) for r in s.power_rows)))
    return out


# real towers holding all conjugates of a generator


def _sturm_chain_K(f):
    chain = [f, f.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _sign_variations_K(chain, x0):
    signs = []
    for p in chain:
        v = p(x0)
        s = v.sign() if isinstance(v, NFElement) else (0 if v == 0 else (1 if v > 0 else -1))
        if s != 0:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_real_roots_K(f, lo, hi, chain=None):
    if chain is None:
        chain = _sturm_chain_K(f)
    return _sign_variations_K(chain, Fraction(lo)) \
        - _sign_variations_K(chain, Fraction(hi))


def _coeff_bound_K(f, K):
    """Rational B with all real roots of monic f in (-B, B)."""
    B = Fraction(1)
    for c in f.coeffs[:-1]:
        iv = K.element_interval(c, max_width=Fraction(1))
        B = max(B, abs(iv[0]), abs(iv[1]))
    return B + 1


def _isolate_smallest_real_root_K(f, K):
    """Isolating rational interval for the smallest real root of f over K.

    f must be monic irreducible of degree >= 2 (hence no rational roots)."""
    chain = _sturm_chain_K(f)
    B = _coeff_bound_K(f, K)
    lo, hi = -B, B
    total = _count_real_roots_K(f, lo, hi, chain)
    assert total >= 1
    while True:
        if _count_real_roots_K(f, lo, hi, chain) == 1:
            return lo, hi
        mid = (lo + hi) / 2
        if _count_real_roots_K(f, lo, mid, chain) >= 1:
            hi = mid
        else:
            lo = mid


def _rational_minpoly_of_root(h, K, iv, config):
    """Q-minimal polynomial and isolating interval of the real root of
    h in K[x] isolated by iv."""
    norm = _norm_poly(h, K, config)
    cfg = config.with_overrides(
        factor_degree_limit=max(config.factor_degree_limit, norm.degree))
    _, facs = factor_over_Q(norm, cfg)
    lo, hi = iv
    while True:
        hits = []
        for g, _ in facs:
            if g(lo) == 0 or g(hi) == 0:
                hits = None
                break
            if count_roots_between(g, lo, hi) == 1:
                hits.append(g)
        if hits is not None and len(hits) == 1 \
                and count_roots_between(squarefree_part(norm), lo, hi) == 1:
            return hits[0], (lo, hi)
        # refine the isolating interval by sign bisection on h
        mid = (lo + hi) / 2
        vm = h(K.from_rational(mid))
        vl = h(K.from_rational(lo))
        assert not vm.is_zero() and not vl.is_zero()
        if vl.sign() != vm.sign():
            hi = mid
        else:
            lo = mid


def _extend_by_real_root(F, h, config):
    """Join F with the field generated by the smallest real root of h."""
    iv = _isolate_smallest_real_root_K(h, F)
    mp, iv = _rational_minpoly_of_root(h, F, iv, config)
    if mp.degree == 1:
        raise AssertionError("irreducible factor cannot have a rational root")
    K_new = NumberField(mp, iv, _trusted=True)
    M, _, _ = field_join(F, K_new, config)
    return M

def _sqrt_in_field(F, u, config):
    """Positive s in F with s*s = u, or None."""
    _, facs = factor_over_K(Poly([-u, F.zero(), F.one()]), F, config)
    for g, _ in facs:
        if g.degree == 1:
            s = -g.coeffs[0]
            if s.sign() > 0:
                return s
    return None


def conjugate_embeddings(k, config=DEFAULT):
    """All embeddings of k into F[i] for a real tower F.

    Returns (F, roots, identity_index): roots are ComplexAlg values over F,
    one per embedding of k, and roots[identity_index] is the image of the
    selected real generator of k. Raises DegreeLimitExceeded when the
    conjugates cannot be reached by adjoining real roots and square roots of
    negative quadratic discriminants.
    """
    mk = k.minpoly
    if k.degree == 1:
        return QQ, [ComplexAlg(QQ.from_rational(k.root_rational))], 0
    F = NumberField(k.minpoly, k.interval0, _trusted=True)
    while True:
        _, facs = factor_over_K(mk, F, config)
        real_roots = []
        complex_pairs = []
        extend_action = None
        for g, _ in facs:
            if g.degree == 1:
                real_roots.append(-g.coeffs[0])
            elif g.degree == 2:
                p, q = g.coeffs[1], g.coeffs[0]
                disc = p * p - 4 * q
                if disc.sign() > 0:
                    extend_action = ("real", g)
                    break
                s = _sqrt_in_field(F, -disc, config)
                if s is None:
                    extend_action = ("sqrt", -disc)
                    break
                half = Fraction(1, 2)
                re = -p * half
                im = s * half
                complex_pairs.append(ComplexAlg(re, im))
                complex_pairs.append(ComplexAlg(re, -im))
            else:
                B = _coeff_bound_K(g, F)
                if _count_real_roots_K(g, -B, B) >= 1:
                    extend_action = ("real", g)
                    break
                raise DegreeLimitExceeded(
                    "conjugates require a complex tower beyond square roots")
        if extend_action is None:
            roots = [ComplexAlg(r) for r in _sorted_real(real_roots)]
            roots += _sorted_pairs(complex_pairs)
            ident = _identity_root_index(roots, k, F)
            return F, roots, ident
        kind, payload = extend_action
        if kind == "real":
            F = _extend_by_real_root(F, payload, config)
        else:
            F = _extend_by_real_root(
                F, Poly([-payload, F.zero(), F.one()]), config)


def _sorted_real(roots):
    out = list(roots)
    out.sort(key=_cmp_key_real)
    return out


class _cmp_key_real:
    def __init__(self, el):
        self.el = el

    def __lt__(self, other):
        return (self.el - other.el).sign() < 0


def _sorted_pairs(pairs):
    # group conjugate pairs, order groups by real part, positive imag first
    groups = {}
    for z in pairs:
        key = tuple(z.re.coords)
        groups.setdefault(key, []).append(z)
    keyed = []
    for zs in groups.values():
        zs.sort(key=lambda z: -z.im.sign())
        keyed.append(zs)
    keyed.sort(key=lambda zs: _cmp_key_real(zs[0].re))
    out = []
    for zs in keyed:
        out.extend(zs)
    return out


def _identity_root_index(roots, k, F):
    """Index of the root matching k's own selected real embedding."""
    lo, hi = k._iv
    for idx, z in enumerate(roots):
        if not z.is_real():
            continue
        a = z.re
        while True:
            alo, ahi = F.element_interval(a)
            if ahi < lo or alo > hi:
                break
            if lo < alo and ahi < hi:
                return idx
            F.refine()
    raise AssertionError("no conjugate matches the field's own embedding")
