"""Dense univariate polynomials over an exact field.

Coefficients may be Fractions (polynomials over Q) or any field-like value
supporting +, -, *, /, == 0 (number field elements). The rational-only
helpers (Sturm chains, root isolation, resultants) live at module level and
require Fraction coefficients.
"""

from fractions import Fraction

from .intervals import iv_poly_eval


class Poly:
    """Univariate polynomial; coeffs[i] is the coefficient of x^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def from_ints(ints):
        return Poly([Fraction(c) for c in ints])

    @staticmethod
    def x_power(k, one=Fraction(1)):
        return Poly([one * 0] * k + [one])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [a[0] * 0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if _is_zero(ai):
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Poly(out)

    def scale(self, c):
        return Poly([a * c for a in self.coeffs])

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly([self.coeffs[0] * 0 + 1]) if self.coeffs else Poly([Fraction(1)])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monic(self):
        if not self.coeffs:
            return self
        inv = 1 / self.lc if isinstance(self.lc, Fraction) else self.lc ** -1
        return self.scale(inv)

    def divmod(self, other):
        """Exact division with remainder; coefficient field must allow 1/lc."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        lc_inv = 1 / other.lc if isinstance(other.lc, Fraction) else other.lc ** -1
        quo = [self.coeffs[0] * 0] * (dq + 1)
        ob = other.coeffs
        for k in range(dq, -1, -1):
            c = rem[k + len(ob) - 1] * lc_inv
            quo[k] = c
            if not _is_zero(c):
                for j, oj in enumerate(ob):
                    rem[k + j] = rem[k + j] - c * oj
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def derivative(self):
        return Poly([c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Horner evaluation; x may live in an extension of the coefficients."""
        if not self.coeffs:
            return x * 0
        acc = x * 0 + self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def compose(self, inner):
        """self(inner(x)) by Horner in the polynomial ring."""
        if not self.coeffs:
            return Poly()
        acc = Poly([self.coeffs[-1]])
        for c in reversed(self.coeffs[:-1]):
            acc = acc * inner + Poly([c])
        return acc

    def map_coeffs(self, fn):
        return Poly([fn(c) for c in self.coeffs])

    def __repr__(self):
        return f"Poly({format_poly(self)})"


def _is_zero(c):
    return c == 0


def poly_gcd(a, b):
    """Monic gcd by the Euclidean algorithm over a field."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_xgcd(a, b):
    """(g, s, t) with s*a + t*b = g, g monic (or zero)."""
    zero, one = Poly(), None
    if not a.is_zero():
        one = Poly([a.lc * 0 + 1])
    elif not b.is_zero():
        one = Poly([b.lc * 0 + 1])
    else:
        raise ZeroDivisionError("xgcd of two zero polynomials")
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = r0.lc
    inv = 1 / lc if isinstance(lc, Fraction) else lc ** -1
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def squarefree_part(f):
    return (f // poly_gcd(f, f.derivative())).monic()


def yun_squarefree(f):
    """Yun decomposition of a rational polynomial.

    Returns (unit, [(g_i, i)]) with f = unit * prod g_i^i, the g_i monic,
    squarefree and pairwise coprime.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    unit = f.lc
    f = f.monic()
    if f.degree == 0:
        return unit, []
    out = []
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f // a
    c = df // a
    i = 1
    while b.degree > 0:
        d = c - b.derivative()
        g = poly_gcd(b, d)
        if g.degree > 0:
            out.append((g.monic(), i))
        b = b // g
        c = d // g
        i += 1
    return unit, out


# rational-only helpers


def clear_denominators(f):
    """(k, ints) with k a positive integer and k*f having the integer
    coefficient list ints."""
    from math import lcm

    den = 1
    for c in f.coeffs:
        den = lcm(den, c.denominator)
    return den, [int(c * den) for c in f.coeffs]


def primitive_int_coeffs(f):
    """Integer coefficient list of the primitive part, plus the rational
    content so that f = content * primitive."""
    from math import gcd

    den, ints = clear_denominators(f)
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    if g == 0:
        return Fraction(0), []
    if ints[-1] < 0:
        g = -g
    return Fraction(g, den), [c // g for c in ints]


def sturm_chain(f):
    chain = [f, f.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _sign_variations(chain, x):
    signs = []
    for p in chain:
        v = p(x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_between(f, lo, hi, chain=None):
    """Distinct real roots of squarefree f in the open interval (lo, hi).

    Endpoints must not be roots of f.
    """
    if f(lo) == 0 or f(hi) == 0:
        raise ValueError("interval endpoint is a root")
    if lo >= hi:
        return 0
    if chain is None:
        chain = sturm_chain(f)
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


def root_bound(f):
    """Rational bound M with every real root of f in [-M, M] (Cauchy)."""
    lc = abs(f.lc)
    m = max((abs(c) for c in f.coeffs[:-1]), default=Fraction(0))
    return Fraction(1) + m / lc


def isolate_real_roots(f):
    """Isolating intervals for the real roots of a squarefree polynomial.

    Returns a sorted list of (lo, hi) with exactly one root in each; an
    exact rational root r is reported as (r, r), and no open interval has a
    root at an endpoint.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.degree == 0:
        return []
    chain = sturm_chain(f)
    bound = root_bound(f)
    lo, hi = -bound, bound
    # nudge endpoints off roots
    while f(lo) == 0:
        lo -= 1
    while f(hi) == 0:
        hi += 1
    out = []
    stack = [(lo, hi, count_roots_between(f, lo, hi, chain))]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        if f(mid) == 0:
            out.append((mid, mid))
            # shrink around the exact root until the flanks are root-free
            eps = (b - a) / 4
            while f(mid - eps) == 0 or f(mid + eps) == 0:
                eps /= 2
            nl = count_roots_between(f, a, mid - eps, chain)
            nr = count_roots_between(f, mid + eps, b, chain)
            stack.append((a, mid - eps, nl))
            stack.append((mid + eps, b, nr))
        else:
            nl = count_roots_between(f, a, mid, chain)
            stack.append((a, mid, nl))
            stack.append((mid, b, n - nl))
    out.sort()
    return out


def refine_isolating(f, lo, hi):
    """One bisection step on an isolating interval of a simple root."""
    if lo == hi:
        return lo, hi
    mid = (lo + hi) / 2
    fm = f(mid)
    if fm == 0:
        return mid, mid
    if (f(lo) > 0) != (fm > 0):
        return lo, mid
    return mid, hi


def eval_interval(f, iv):
    return iv_poly_eval(f.coeffs, iv)


def resultant(f, g):
    """Resultant of two rational polynomials via the Sylvester determinant."""
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    m, n = f.degree, g.degree
    if m == 0:
        return f.coeffs[0] ** n
    if n == 0:
        return g.coeffs[0] ** m
    size = m + n
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + fc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + gc + [Fraction(0)] * (size - n - 1 - i))
    # exact Gaussian elimination determinant
    det = Fraction(1)
    for col in range(size):
        piv = None
        for r in range(col, size):
            if rows[r][col] != 0:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        pv = rows[col][col]
        det *= pv
        for r in range(col + 1, size):
            if rows[r][col] != 0:
                factor = rows[r][col] / pv
                for c in range(col, size):
                    rows[r][c] -= factor * rows[col][c]
    return det


def lagrange_interpolate(points):
    """Rational polynomial through (x_i, y_i) pairs with distinct x_i."""
    result = Poly()
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        num = Poly([Fraction(1)])
        den = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            num = num * Poly([-xj, Fraction(1)])
            den *= xi - xj
        result = result + num.scale(yi / den)
    return result


def graeffe_step(f):
    """Polynomial whose roots are the squares of the roots of f.

    Works over any coefficient field: g(x^2) = +/- f(x) f(-x).
    """
    even = Poly(f.coeffs[0::2])
    odd = Poly(f.coeffs[1::2])
    x = Poly([f.coeffs[0] * 0, f.coeffs[0] * 0 + 1])
    g = even * even - x * (odd * odd)
    if f.degree % 2 == 1:
        g = -g
    return g


def format_poly(f, var="x"):
    """Human-readable form like 'x^2 - 3x + 1' (rational coefficients)."""
    if f.is_zero():
        return "0"
    parts = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        if i == 0:
            term = str(c) if c > 0 else f"- {-c}" if parts else str(c)
            parts.append(term if not parts or c < 0 else f"+ {c}")
            continue
        mag = abs(c)
        coef = "" if mag == 1 else str(mag)
        xpow = var if i == 1 else f"{var}^{i}"
        if not parts:
            parts.append(("-" if c < 0 else "") + coef + xpow)
        else:
            parts.append(("- " if c < 0 else "+ ") + coef + xpow)
    return " ".join(parts)


def parse_poly(text):
    """Inverse of format_poly for rational coefficients."""
    text = text.replace("-", "+-").replace(" ", "")
    terms = [t for t in text.split("+") if t]
    coeffs = {}
    for t in terms:
        if "x" in t:
            coef_s, _, pow_s = t.partition("x")
            power = 1
            if pow_s.startswith("^"):
                power = int(pow_s[1:])
            if coef_s in ("", "-"):
                coef = Fraction(coef_s + "1")
            else:
                coef = Fraction(coef_s.rstrip("*"))
        else:
            power, coef = 0, Fraction(t)
        coeffs[power] = coeffs.get(power, Fraction(0)) + coef
    if not coeffs:
        return Poly()
    out = [Fraction(0)] * (max(coeffs) + 1)
    for k, v in coeffs.items():
        out[k] = v
    return Poly(out)
