"""Real number fields with certified embeddings, and their elements.

A NumberField is a monic irreducible rational polynomial together with an
isolating interval that selects one real root. Elements are coordinate
vectors in the power basis; all arithmetic is exact. Signs of elements are
decided by refining the isolating interval, never by floating point.
"""

from fractions import Fraction

from .config import DEFAULT
from .errors import BadInterval, DivisionByZero, FieldMismatch, ReduciblePolynomial
from .intervals import iv_poly_eval, iv_sign
from .poly import Poly, count_roots_between, sturm_chain


class NumberField:
    """Q(theta) for theta the unique root of minpoly in the given interval."""

    def __init__(self, minpoly, interval, _trusted=False):
        if not minpoly.is_monic() or minpoly.degree < 1:
            raise ReduciblePolynomial("minimal polynomial must be monic of degree >= 1")
        self.minpoly = minpoly
        lo, hi = Fraction(interval[0]), Fraction(interval[1])
        self.interval0 = (lo, hi)
        d = minpoly.degree
        if d == 1:
            root = -minpoly.coeffs[0]
            if not (lo <= root <= hi):
                raise BadInterval("interval does not contain the rational root")
            self._iv = (root, root)
            self.root_rational = root
        else:
            if minpoly(lo) == 0 or minpoly(hi) == 0:
                raise BadInterval("interval endpoint is a root")
            if not _trusted:
                chain = sturm_chain(minpoly)
                n = count_roots_between(minpoly, lo, hi, chain)
                if n != 1:
                    raise BadInterval(f"interval contains {n} roots, expected 1")
            self._iv = (lo, hi)
            self.root_rational = None
        self.degree = d
        # reduction rows: coordinates of theta^(d+j) for j = 0..d-2
        self._red = []
        if d >= 2:
            row = [-c for c in minpoly.coeffs[:-1]]
            self._red.append(tuple(row))
            for _ in range(d - 2):
                top = row[-1]
                row = [Fraction(0)] + row[:-1]
                if top:
                    for i in range(d):
                        row[i] += top * self._red[0][i]
                self._red.append(tuple(row))

    # construction helpers

    def element(self, coords):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != self.degree:
            raise FieldMismatch("coordinate vector has wrong length")
        return NFElement(self, coords)

    def from_rational(self, q):
        return NFElement(self, (Fraction(q),) + (Fraction(0),) * (self.degree - 1))

    def zero(self):
        return self.from_rational(0)

    def one(self):
        return self.from_rational(1)

    def gen(self):
        if self.degree == 1:
            return self.from_rational(self.root_rational)
        return NFElement(
            self, (Fraction(0), Fraction(1)) + (Fraction(0),) * (self.degree - 2))

    def is_rational_field(self):
        return self.degree == 1

    # arithmetic support

    def _reduce(self, longc):
        d = self.degree
        out = list(longc[:d]) + [Fraction(0)] * max(0, d - len(longc))
        for j, c in enumerate(longc[d:]):
            if c:
                row = self._red[j]
                for i in range(d):
                    out[i] += c * row[i]
        return tuple(out)

    # certified embedding

    def refine(self):
        """Halve the isolating interval, keeping the root inside."""
        lo, hi = self._iv
        if lo == hi:
            return
        mid = (lo + hi) / 2
        # minpoly irreducible of degree >= 2 has no rational roots
        if (self.minpoly(lo) > 0) != (self.minpoly(mid) > 0):
            self._iv = (lo, mid)
        else:
            self._iv = (mid, hi)

    def interval_width(self):
        return self._iv[1] - self._iv[0]

    def element_interval(self, elem, max_width=None):
        """Rational interval certified to contain the value of elem."""
        iv = iv_poly_eval(elem.coords, self._iv)
        if max_width is not None:
            while iv[1] - iv[0] > max_width:
                self.refine()
                iv = iv_poly_eval(elem.coords, self._iv)
        return iv

    def same_field(self, other):
        """Same minimal polynomial and certified same selected root."""
        if self is other:
            return True
        if self.minpoly != other.minpoly:
            return False
        if self.degree == 1:
            return True
        lo = max(self._iv[0], other._iv[0])
        hi = min(self._iv[1], other._iv[1])
        if lo >= hi:
            return False
        return count_roots_between(self.minpoly, lo, hi) == 1

    def __repr__(self):
        from .poly import format_poly
        return f"NumberField({format_poly(self.minpoly)}, {self._iv})"


def _compatible(f1, f2):
    return f1 is f2 or (f1.minpoly == f2.minpoly and f1.interval0 == f2.interval0)


class NFElement:
    """Element of a NumberField in power-basis coordinates; immutable."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = coords

    def _coerce(self, other):
        if isinstance(other, NFElement):
            if not _compatible(self.field, other.field):
                raise FieldMismatch("elements of different number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self):
        return all(c == 0 for c in self.coords[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElement(self.field,
                         tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElement(self.field,
                         tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return NFElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return NFElement(self.field, tuple(a * q for a in self.coords))
        a, b = self.coords, o.coords
        d = self.field.degree
        long = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    long[i + j] += ai * bj
        return NFElement(self.field, self.field._reduce(long))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero field element")
        from .poly import poly_xgcd
        g, s, _ = poly_xgcd(Poly(self.coords), self.field.minpoly)
        assert g.degree == 0
        inv_coeffs = list(s.coeffs) + [Fraction(0)] * (
            self.field.degree - len(s.coeffs))
        return NFElement(self.field, self.field._reduce(inv_coeffs))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        return hash((self.field.minpoly.coeffs, self.coords))

    def sign(self):
        """Exact sign via certified interval refinement."""
        if self.is_zero():
            return 0
        fld = self.field
        while True:
            s = iv_sign(iv_poly_eval(self.coords, fld._iv))
            if s is not None:
                return s
            fld.refine()

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    def abs_interval(self, max_width=None):
        iv = self.field.element_interval(self, max_width)
        lo, hi = abs(iv[0]), abs(iv[1])
        if iv[0] <= 0 <= iv[1]:
            return (Fraction(0), max(lo, hi))
        return (min(lo, hi), max(lo, hi))

    def poly(self):
        return Poly(self.coords)

    def approx_str(self, digits=8):
        """Decimal approximation for reports; never used in computation."""
        target = Fraction(1, 10 ** (digits + 2))
        iv = self.field.element_interval(self, max_width=target)
        mid = (iv[0] + iv[1]) / 2
        scaled = round(mid * 10 ** digits)
        sign = "-" if scaled < 0 else ""
        scaled = abs(scaled)
        whole, frac = divmod(scaled, 10 ** digits)
        return f"{sign}{whole}.{str(frac).zfill(digits)}"

    def __repr__(self):
        from .poly import format_poly
        return f"NF<{format_poly(Poly(self.coords), var='a')}>"


class ComplexAlg:
    """Element of K[i]: a pair of same-field real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        if im is None:
            im = re.field.zero()
        if not _compatible(re.field, im.field):
            raise FieldMismatch("real and imaginary parts in different fields")
        self.re = re
        self.im = im

    @property
    def field(self):
        return self.re.field

    def _coerce(self, other):
        if isinstance(other, ComplexAlg):
            if not _compatible(self.field, other.field):
                raise FieldMismatch("complex values over different fields")
            return other
        if isinstance(other, NFElement):
            return ComplexAlg(other)
        if isinstance(other, (int, Fraction)):
            return ComplexAlg(self.field.from_rational(other))
        return None

    def is_zero(self):
        return self.re.is_zero() and self.im.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def is_real(self):
        return self.im.is_zero()

    def conj(self):
        return ComplexAlg(self.re, -self.im)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexAlg(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexAlg(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return ComplexAlg(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexAlg(self.re * o.re - self.im * o.im,
                          self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if n.is_zero():
            raise DivisionByZero("inverse of complex zero")
        ninv = n.inverse()
        return ComplexAlg(self.re * ninv, -(self.im * ninv))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = ComplexAlg(self.field.one())
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((hash(self.re), hash(self.im)))

    def __repr__(self):
        return f"ComplexAlg({self.re!r} + {self.im!r} i)"


QQ = NumberField(Poly.from_ints([0, 1]), (Fraction(-1), Fraction(1)))


def nf_create(minpoly, interval, config=DEFAULT):
    """Validated number field constructor.

    Checks that minpoly is monic irreducible over Q and that the interval
    isolates exactly one real root (Sturm certificate).
    """
    from .qfactor import is_irreducible_over_Q

    if minpoly.is_zero() or not minpoly.is_monic():
        raise ReduciblePolynomial("minimal polynomial must be monic")
    if minpoly.degree < 1:
        raise ReduciblePolynomial("minimal polynomial must have degree >= 1")
    if minpoly.degree >= 2 and not is_irreducible_over_Q(minpoly, config):
        raise ReduciblePolynomial("polynomial factors over Q")
    return NumberField(minpoly, interval, _trusted=False)


def minimal_polynomial(a):
    """Monic minimal polynomial of a number field element over Q."""
    d = a.field.degree
    powers = [a.field.one().coords]
    cur = a.field.one()
    for _ in range(d):
        cur = cur * a
        powers.append(cur.coords)
    # first k with theta-power row k dependent on rows 0..k-1
    for k in range(1, d + 1):
        sol = _solve_rational([list(powers[j]) for j in range(k)],
                              list(powers[k]))
        if sol is not None:
            return Poly([-c for c in sol] + [Fraction(1)])
    raise AssertionError("unreachable: element has no minimal polynomial")


def nf_arith(a, b, op):
    """Exact field arithmetic dispatch: add | sub | mul | div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def sign(a):
    """Exact sign of a real field element: -1, 0 or +1."""
    return a.sign()


def _solve_rational(rows, target):
    """Solve sum x_j rows[j] = target over Q; None when inconsistent."""
    if not rows:
        return [] if all(t == 0 for t in target) else None
    ncols = len(target)
    aug = [[rows[j][i] for j in range(len(rows))] + [target[i]]
           for i in range(ncols)]
    nrows = len(aug)
    nvars = len(rows)
    piv_cols = []
    r = 0
    for c in range(nvars):
        piv = next((i for i in range(r, nrows) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, nrows):
        if aug[i][nvars] != 0:
            return None
    sol = [Fraction(0)] * nvars
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][nvars]
    return sol
