"""Exact linear algebra over Q, a number field K, or its extension K[i].

Matrices are dense; entries are Fractions, NFElements or ComplexAlg values
(one kind per matrix). Integer matrices are plain nested lists of ints with
their own fraction-free routines (characteristic polynomial, Smith form).
"""

from fractions import Fraction

from .errors import FieldMismatch
from .numfield import ComplexAlg, NFElement
from .poly import Poly


def zero_like(x):
    if isinstance(x, Fraction):
        return Fraction(0)
    if isinstance(x, NFElement):
        return x.field.zero()
    if isinstance(x, ComplexAlg):
        return ComplexAlg(x.field.zero())
    raise TypeError(f"unsupported entry type {type(x)!r}")


def one_like(x):
    if isinstance(x, Fraction):
        return Fraction(1)
    if isinstance(x, NFElement):
        return x.field.one()
    if isinstance(x, ComplexAlg):
        return ComplexAlg(x.field.one())
    raise TypeError(f"unsupported entry type {type(x)!r}")


def is_zero_entry(x):
    if isinstance(x, Fraction):
        return x == 0
    return x.is_zero()


def _check_same_kind(a, b):
    if type(a) is not type(b):
        raise FieldMismatch("mixed entry kinds in one operation")
    if isinstance(a, (NFElement, ComplexAlg)):
        fa = a.field if isinstance(a, NFElement) else a.re.field
        fb = b.field if isinstance(b, NFElement) else b.re.field
        if not (fa is fb or (fa.minpoly == fb.minpoly
                             and fa.interval0 == fb.interval0)):
            raise FieldMismatch("entries over different number fields")


class MatF:
    """Dense matrix over an exact field."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged matrix")

    @staticmethod
    def identity(n, one=Fraction(1)):
        z = one * 0
        return MatF([[one if i == j else z for j in range(n)]
                     for i in range(n)])

    @staticmethod
    def from_int_rows(rows, one=Fraction(1)):
        return MatF([[one * c for c in r] for r in rows])

    def sample(self):
        if not self.rows or not self.rows[0]:
            raise ValueError("empty matrix has no sample entry")
        return self.rows[0][0]

    def __eq__(self, other):
        return isinstance(other, MatF) and self.rows == other.rows

    def __mul__(self, other):
        if isinstance(other, MatF):
            if self.ncols != other.nrows:
                raise ValueError("dimension mismatch")
            z = zero_like(self.sample())
            out = []
            for i in range(self.nrows):
                row = []
                for j in range(other.ncols):
                    acc = z
                    for k in range(self.ncols):
                        a = self.rows[i][k]
                        if not is_zero_entry(a):
                            acc = acc + a * other.rows[k][j]
                    row.append(acc)
                out.append(row)
            return MatF(out)
        return NotImplemented

    def __add__(self, other):
        return MatF([[a + b for a, b in zip(ra, rb)]
                     for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return MatF([[a - b for a, b in zip(ra, rb)]
                     for ra, rb in zip(self.rows, other.rows)])

    def scale(self, c):
        return MatF([[a * c for a in r] for r in self.rows])

    def transpose(self):
        return MatF([[self.rows[i][j] for i in range(self.nrows)]
                     for j in range(self.ncols)])

    def mat_vec(self, v):
        z = zero_like(self.sample())
        out = []
        for i in range(self.nrows):
            acc = z
            for k in range(self.ncols):
                a = self.rows[i][k]
                if not is_zero_entry(a):
                    acc = acc + a * v[k]
            out.append(acc)
        return out

    def is_zero(self):
        return all(is_zero_entry(a) for r in self.rows for a in r)

    def __repr__(self):
        return f"MatF({self.nrows}x{self.ncols})"


def rref(M):
    """Reduced row echelon form; returns (R, pivot columns, rank)."""
    rows = [list(r) for r in M.rows]
    nr, nc = M.nrows, M.ncols
    pivots = []
    r = 0
    for c in range(nc):
        piv = None
        for i in range(r, nr):
            if not is_zero_entry(rows[i][c]):
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        inv = (1 / pv) if isinstance(pv, Fraction) else pv.inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nr):
            if i != r and not is_zero_entry(rows[i][c]):
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return MatF(rows), pivots, len(pivots)


def solve(M, b):
    """One solution x of M x = b (free variables zero), or None."""
    aug = MatF([row + [bv] for row, bv in zip(M.rows, b)])
    R, pivots, rank = rref(aug)
    n = M.ncols
    if n in pivots:
        return None
    z = zero_like(M.sample()) if M.nrows and M.ncols else Fraction(0)
    x = [z] * n
    for i, c in enumerate(pivots):
        x[c] = R.rows[i][n]
    return x


class Subspace:
    """Linear subspace stored only by its canonical RREF basis."""

    __slots__ = ("ambient_dim", "rows", "pivots")

    def __init__(self, ambient_dim, spanning_rows):
        self.ambient_dim = ambient_dim
        rows = [list(r) for r in spanning_rows]
        if any(len(r) != ambient_dim for r in rows):
            raise ValueError("spanning vector of wrong length")
        if rows:
            R, pivots, rank = rref(MatF(rows))
            self.rows = [tuple(r) for r in R.rows[:rank]]
            self.pivots = tuple(pivots)
        else:
            self.rows = []
            self.pivots = ()

    @staticmethod
    def zero(ambient_dim):
        return Subspace(ambient_dim, [])

    @property
    def dim(self):
        return len(self.rows)

    def is_zero_space(self):
        return not self.rows

    def basis(self):
        return [list(r) for r in self.rows]

    def _check_compatible(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise FieldMismatch("subspaces of different ambient dimension")
        if self.rows and other.rows:
            _check_same_kind(self.rows[0][0], other.rows[0][0])

    def contains_vector(self, v):
        """Exact membership by reduction against the RREF basis."""
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if not is_zero_entry(c):
                v = [a - c * b for a, b in zip(v, row)]
        return all(is_zero_entry(a) for a in v)

    def contains(self, other):
        self._check_compatible(other)
        return all(self.contains_vector(r) for r in other.rows)

    def sum(self, other):
        self._check_compatible(other)
        return Subspace(self.ambient_dim, list(self.rows) + list(other.rows))

    def intersect(self, other):
        """Zassenhaus-style intersection via the kernel of [U^T | -V^T]."""
        self._check_compatible(other)
        if self.is_zero_space() or other.is_zero_space():
            return Subspace.zero(self.ambient_dim)
        ru, rv = len(self.rows), len(other.rows)
        n = self.ambient_dim
        block = MatF([[self.rows[j][i] for j in range(ru)] +
                      [-other.rows[j][i] for j in range(rv)]
                      for i in range(n)])
        ker = kernel(block)
        vecs = []
        for k in ker.rows:
            vec = [zero_like(self.rows[0][0])] * n
            for j in range(ru):
                c = k[j]
                if not is_zero_entry(c):
                    vec = [a + c * b for a, b in zip(vec, self.rows[j])]
            vecs.append(vec)
        return Subspace(n, vecs)

    def __eq__(self, other):
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ambient_dim, tuple(self.rows)))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient_dim})"


def kernel(M):
    """Right kernel of M as a Subspace (vectors v with M v = 0)."""
    R, pivots, rank = rref(M)
    n = M.ncols
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    if M.nrows == 0 or M.ncols == 0:
        one = Fraction(1)
        return Subspace(n, [[one if i == j else Fraction(0) for j in range(n)]
                            for i in range(n)])
    one = one_like(M.sample())
    z = zero_like(M.sample())
    vecs = []
    for fcol in free:
        v = [z] * n
        v[fcol] = one
        for i, p in enumerate(pivots):
            v[p] = -R.rows[i][fcol]
        vecs.append(v)
    return Subspace(n, vecs)


def subspace_ops(U, V, op):
    """sum | intersect | contains, per the subspace calculus contract."""
    if op == "sum":
        return U.sum(V)
    if op == "intersect":
        return U.intersect(V)
    if op == "contains":
        return U.contains(V)
    raise ValueError(f"unknown subspace op {op!r}")


# integer matrices: plain nested lists of ints


def int_identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def int_mat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    return [[sum(A[i][k] * B[k][j] for k in range(m)) for j in range(p)]
            for i in range(n)]


def int_mat_vec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def int_mat_pow(A, e):
    n = len(A)
    result = int_identity(n)
    base = [row[:] for row in A]
    while e:
        if e & 1:
            result = int_mat_mul(result, base)
        base = int_mat_mul(base, base)
        e >>= 1
    return result


def int_det(A):
    """Fraction-free Bareiss determinant."""
    n = len(A)
    if n == 0:
        return 1
    M = [row[:] for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if piv is None:
                return 0
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def int_mat_inverse(A):
    """Exact inverse of a unimodular integer matrix (integer entries)."""
    n = len(A)
    M = MatF.from_int_rows(A)
    aug = MatF([M.rows[i] + [Fraction(1) if i == j else Fraction(0)
                             for j in range(n)] for i in range(n)])
    R, pivots, rank = rref(aug)
    if rank != n or pivots != list(range(n)):
        raise ValueError("matrix is not invertible")
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            v = R.rows[i][n + j]
            if v.denominator != 1:
                raise ValueError("matrix is not unimodular")
            row.append(int(v))
        out.append(row)
    return out


def charpoly(A):
    """Monic characteristic polynomial of an integer matrix, computed by the
    Faddeev-LeVerrier recurrence with exact integer divisions."""
    n = len(A)
    for row in A:
        if len(row) != n:
            raise ValueError("characteristic polynomial needs a square matrix")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    M = [row[:] for row in A]
    c = -sum(M[i][i] for i in range(n))
    coeffs[n - 1] = c
    for k in range(2, n + 1):
        for i in range(n):
            M[i][i] += coeffs[n - k + 1]
        M = int_mat_mul(A, M)
        tr = sum(M[i][i] for i in range(n))
        assert tr % k == 0, "Faddeev-LeVerrier divisibility failed"
        coeffs[n - k] = -tr // k
    return Poly.from_ints(coeffs)


def smith_normal_form(A):
    """(S, U, V) with U A V = S diagonal, d_i | d_{i+1}, U, V unimodular."""
    S = [row[:] for row in A]
    m = len(S)
    n = len(S[0]) if m else 0
    U = int_identity(m)
    V = int_identity(n)

    def row_op(i, j, c):  # row_i += c * row_j
        S[i] = [a + c * b for a, b in zip(S[i], S[j])]
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, c):  # col_i += c * col_j
        for r in range(m):
            S[r][i] += c * S[r][j]
        for r in range(n):
            V[r][i] += c * V[r][j]

    def row_swap(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for r in range(m):
            S[r][i], S[r][j] = S[r][j], S[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    def row_neg(i):
        S[i] = [-a for a in S[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(m, n):
        # locate smallest nonzero entry in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if S[i][j] != 0 and (best is None
                                     or abs(S[i][j]) < abs(S[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        if i != t:
            row_swap(t, i)
        if j != t:
            col_swap(t, j)
        if S[t][t] < 0:
            row_neg(t)
        # clear row and column t by euclidean steps
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                if S[i][t] != 0:
                    q = S[i][t] // S[t][t]
                    row_op(i, t, -q)
                    if S[i][t] != 0:
                        row_swap(t, i)
                        if S[t][t] < 0:
                            row_neg(t)
                        dirty = True
            for j in range(t + 1, n):
                if S[t][j] != 0:
                    q = S[t][j] // S[t][t]
                    col_op(j, t, -q)
                    if S[t][j] != 0:
                        col_swap(t, j)
                        if S[t][t] < 0:
                            row_neg(t)  # keep pivot positive after swap
                        dirty = True
        # divisibility: pivot must divide every remaining entry
        fixed = False
        for i in range(t + 1, m):
            if fixed:
                break
            for j in range(t + 1, n):
                if S[i][j] % S[t][t] != 0:
                    row_op(t, i, 1)
                    fixed = True
                    break
        if fixed:
            continue
        t += 1
    return S, U, V


def smith_with_inverses(A):
    """Smith form plus exact inverses of the transforms."""
    S, U, V = smith_normal_form(A)
    return S, U, V, int_mat_inverse(U), int_mat_inverse(V)


def poly_of_matrix(h, A):
    """Exact Horner evaluation h(A); A may be MatF or integer rows."""
    if not isinstance(A, MatF):
        one = one_like(h.coeffs[0]) if h.coeffs else Fraction(1)
        A = MatF.from_int_rows(A, one)
    if A.nrows != A.ncols:
        raise ValueError("square matrix required")
    n = A.nrows
    if h.is_zero():
        z = zero_like(A.sample())
        return MatF([[z] * n for _ in range(n)])
    one = one_like(h.coeffs[-1])
    acc = MatF.identity(n, one).scale(h.coeffs[-1])
    for c in reversed(h.coeffs[:-1]):
        acc = acc * A + MatF.identity(n, one).scale(c)
    return acc


def extended_gcd_poly(a, b):
    """(g, s, t) with g = gcd(a, b) monic and s a + t b = g, over any field."""
    from .poly import poly_xgcd
    return poly_xgcd(a, b)
