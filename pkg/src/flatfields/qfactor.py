"""Complete factorization of rational polynomials.

Pipeline: Yun squarefree decomposition, then for each squarefree part a
monicized Zassenhaus round: factor modulo a good odd prime, Hensel-lift the
modular factors past twice a Mignotte-style coefficient bound, and recombine
subsets by exact trial division over Z.

Everything here is deterministic; equal-degree splitting tries shift
polynomials in a fixed order instead of sampling random ones.
"""

from fractions import Fraction
from math import isqrt

from .config import DEFAULT
from .errors import DegreeLimitExceeded
from .poly import Poly, primitive_int_coeffs, yun_squarefree

# polynomials over Z/m: little-endian int lists; _gp_* keep entries in [0, m)


def _gp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _gp_add(a, b, p):
    n = max(len(a), len(b))
    return _gp_trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                     for i in range(n)])


def _gp_sub(a, b, p):
    n = max(len(a), len(b))
    return _gp_trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                     for i in range(n)])


def _gp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _gp_trim(out)


def _gp_divmod(a, b, p):
    """Division in (Z/p)[x]; the leading coefficient of b must be a unit."""
    if not b:
        raise ZeroDivisionError
    a = [c % p for c in a]
    inv = pow(b[-1], -1, p)
    dq = len(a) - len(b)
    if dq < 0:
        return [], _gp_trim(a)
    q = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        c = (a[k + len(b) - 1] * inv) % p
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] = (a[k + j] - c * bj) % p
    return _gp_trim(q), _gp_trim(a)


def _gp_gcd(a, b, p):
    while b:
        a, b = b, _gp_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [(c * inv) % p for c in a]
    return a


def _gp_xgcd(a, b, p):
    r0, r1 = [c % p for c in a], [c % p for c in b]
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gp_sub(s0, _gp_mul(q, s1, p), p)
        t0, t1 = t1, _gp_sub(t0, _gp_mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    norm = lambda u: _gp_trim([(c * inv) % p for c in u])
    return norm(r0), norm(s0), norm(t0)


def _gp_monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [(c * inv) % p for c in a]


def _gp_pow_mod(base, e, mod, p):
    result = [1]
    base = _gp_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _gp_divmod(_gp_mul(result, base, p), mod, p)[1]
        base = _gp_divmod(_gp_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _gp_deriv(a, p):
    return _gp_trim([(i * c) % p for i, c in enumerate(a)][1:])


def _gp_is_squarefree(a, p):
    d = _gp_deriv(a, p)
    if not d:
        return False
    return len(_gp_gcd(a, d, p)) == 1


def _distinct_degree(f, p):
    """[(product of irreducible factors of degree d, d)] for monic
    squarefree f over GF(p)."""
    out = []
    h = [0, 1]  # x
    v = list(f)
    d = 0
    while len(v) - 1 > 0:
        d += 1
        if 2 * d > len(v) - 1:
            out.append((v, len(v) - 1))
            break
        h = _gp_pow_mod(h, p, v, p)
        g = _gp_gcd(_gp_sub(h, [0, 1], p), v, p)
        if len(g) > 1:
            out.append((g, d))
            v = _gp_divmod(v, g, p)[0]
            h = _gp_divmod(h, v, p)[1]
    return out


def _trial_poly(index, p):
    """Deterministic enumeration of nonconstant monic polynomials over GF(p),
    ordered by degree then coefficients: x, x+1, ..., x^2, x^2+1, ..."""
    deg = 1
    count = p
    while index >= count:
        index -= count
        deg += 1
        count = p ** deg
    digits = []
    for _ in range(deg):
        digits.append(index % p)
        index //= p
    return digits + [1]


def _equal_degree(f, d, p):
    """Split monic squarefree f (all irreducible factors of degree d) into
    its irreducible factors, deterministically (p odd)."""
    n = len(f) - 1
    if n == d:
        return [f]
    exponent = (p ** d - 1) // 2
    trial = 0
    while True:
        t = _trial_poly(trial, p)
        trial += 1
        w = _gp_pow_mod(t, exponent, f, p)
        w = _gp_sub(w, [1], p)
        g = _gp_gcd(w, f, p)
        if 0 < len(g) - 1 < n:
            rest = _gp_divmod(f, g, p)[0]
            return _equal_degree(_gp_monic(g, p), d, p) + \
                _equal_degree(_gp_monic(rest, p), d, p)
        if trial > 64 + 8 * n * p:
            raise RuntimeError("equal-degree splitting did not converge")


def _factor_mod_p(f, p):
    """Monic irreducible factors of a squarefree monic f over GF(p)."""
    out = []
    for block, d in _distinct_degree(f, p):
        out.extend(_equal_degree(block, d, p))
    out.sort(key=lambda g: (len(g), g))
    return out


# Hensel lifting; integer polynomial helpers


def _sym(c, m):
    c %= m
    return c - m if 2 * c > m else c


def _ip_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _ip_sub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
            for i in range(n)]


def _ip_add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
            for i in range(n)]


def _ip_red(a, m):
    return _gp_trim([_sym(c, m) for c in a])


def _hensel_step(f, g, h, s, t, m):
    """One quadratic Hensel step: from f = g*h and s*g + t*h = 1 (mod m)
    to the same congruences mod m*m. h must be monic; deg s < deg h,
    deg t < deg g."""
    mm = m * m
    e = _ip_red(_ip_sub(f, _ip_mul(g, h)), mm)
    q, r = _gp_divmod(_ip_mul(s, e), h, mm)
    g1 = _ip_red(_ip_add(g, _ip_add(_ip_mul(t, e), _ip_mul(q, g))), mm)
    h1 = _ip_red(_ip_add(h, r), mm)
    b = _ip_red(_ip_sub(_ip_add(_ip_mul(s, g1), _ip_mul(t, h1)), [1]), mm)
    c, d = _gp_divmod(_ip_mul(s, b), h1, mm)
    s1 = _ip_red(_ip_sub(s, d), mm)
    t1 = _ip_red(_ip_sub(t, _ip_add(_ip_mul(t, b), _ip_mul(c, g1))), mm)
    return g1, h1, s1, t1


def _lift_pair(f, g0, h0, p, target):
    """Lift f = g0*h0 (mod p) to (g, h) with f = g*h (mod target), where
    target is a power of p; h0 monic mod p, f monic."""
    _, s, t = _gp_xgcd(g0, h0, p)
    g, h = list(g0), list(h0)
    m = p
    while m < target:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m = m * m
    return _ip_red(g, target), _ip_red(h, target)


def _lift_many(f, facs, p, target):
    """Lift pairwise-coprime monic mod-p factors of monic f to mod target."""
    if len(facs) == 1:
        return [_ip_red(f, target)]
    mid = len(facs) // 2
    g0 = [1]
    for fac in facs[:mid]:
        g0 = _gp_mul(g0, fac, p)
    h0 = [1]
    for fac in facs[mid:]:
        h0 = _gp_mul(h0, fac, p)
    g, h = _lift_pair(f, g0, h0, p, target)
    return _lift_many(g, facs[:mid], p, target) + \
        _lift_many(h, facs[mid:], p, target)


def _mignotte_bound(ints):
    """Bound on any coefficient of any monic integer factor of a monic
    integer polynomial."""
    n = len(ints) - 1
    norm2 = isqrt(sum(c * c for c in ints)) + 1
    return (1 << n) * norm2


_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
           67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131,
           137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197)


def _factor_squarefree_monic_int(ints):
    """Monic irreducible integer factors of a squarefree monic int poly."""
    n = len(ints) - 1
    if n <= 1:
        return [list(ints)]
    for p in _PRIMES:
        fp = _gp_trim([c % p for c in ints])
        if len(fp) - 1 == n and _gp_is_squarefree(fp, p):
            break
    else:
        raise RuntimeError("no good prime found for factorization")
    mod_factors = _factor_mod_p(_gp_monic(fp, p), p)
    if len(mod_factors) == 1:
        return [list(ints)]
    bound = 2 * _mignotte_bound(ints) + 1
    target = p
    while target < bound:
        target *= p
    lifted = _lift_many(_ip_red(ints, target), mod_factors, p, target)
    # the true monic factor over Z equals the symmetric remainder of the
    # product of the right subset of lifted factors
    remaining = list(range(len(lifted)))
    current = list(ints)
    found = []
    size = 1
    while 2 * size <= len(remaining):
        hit = _try_subsets(current, lifted, remaining, size, target)
        if hit is None:
            size += 1
            continue
        subset, factor, quotient = hit
        found.append(factor)
        current = quotient
        remaining = [i for i in remaining if i not in subset]
    if len(current) - 1 > 0:
        found.append(current)
    found.sort(key=lambda g: (len(g), g))
    return found


def _try_subsets(current, lifted, remaining, size, modulus):
    from itertools import combinations

    deg_current = len(current) - 1
    for subset in combinations(remaining, size):
        deg = sum(len(lifted[i]) - 1 for i in subset)
        if 2 * deg > deg_current:
            continue
        cand = [1]
        for i in subset:
            cand = _ip_red(_ip_mul(cand, lifted[i]), modulus)
        quo = _int_div_exact(current, cand)
        if quo is not None:
            return set(subset), cand, quo
    return None


def _int_div_exact(a, b):
    """Quotient if monic b divides a over Z, else None."""
    a = list(a)
    dq = len(a) - len(b)
    if dq < 0:
        return None
    qout = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        c = a[k + len(b) - 1]
        qout[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    if any(a[: len(b) - 1]):
        return None
    return qout


def factor_over_Q(f, config=DEFAULT):
    """Complete factorization over Q.

    Returns (unit, factors): unit is a Fraction, factors is a list of
    (monic irreducible Poly, multiplicity), and
    f = unit * prod factor^multiplicity holds exactly.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.degree > config.factor_degree_limit:
        raise DegreeLimitExceeded(
            f"degree {f.degree} exceeds factorization cap "
            f"{config.factor_degree_limit}")
    unit = f.lc
    if f.degree == 0:
        return unit, []
    out = []
    _, parts = yun_squarefree(f)
    for g, mult in parts:
        k = 0
        while g.coeffs[k] == 0:
            k += 1
        if k:
            out.append((Poly.from_ints([0, 1]), k * mult))
            g = Poly(g.coeffs[k:])
        if g.degree == 0:
            continue
        _, ints = primitive_int_coeffs(g)
        lc = ints[-1]  # g is monic, so lc is the cleared denominator, > 0
        if lc == 1:
            for fac in _factor_squarefree_monic_int(ints):
                out.append((Poly.from_ints(fac), mult))
        else:
            n = len(ints) - 1
            monicized = [c * lc ** (n - 1 - i) for i, c in enumerate(ints[:-1])] + [1]
            for fac in _factor_squarefree_monic_int(monicized):
                d = len(fac) - 1
                back = Poly([Fraction(c, lc ** (d - i))
                             for i, c in enumerate(fac)])
                out.append((back, mult))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    check = Poly([Fraction(1)])
    for fac, m in out:
        check = check * fac ** m
    assert check.scale(unit) == f, "factorization self-check failed"
    return unit, out


def is_irreducible_over_Q(f, config=DEFAULT):
    if f.degree <= 0:
        return False
    if f.degree == 1:
        return True
    _, factors = factor_over_Q(f, config)
    return len(factors) == 1 and factors[0][1] == 1
