import random
from fractions import Fraction

from flatfields.linalg import (
    MatF, Subspace, charpoly, extended_gcd_poly, int_det, int_identity,
    int_mat_inverse, int_mat_mul, kernel, poly_of_matrix, rref,
    smith_normal_form, solve, subspace_ops,
)
from flatfields.numfield import nf_create
from flatfields.poly import Poly


def P(*ints):
    return Poly.from_ints(ints)


def QM(rows):
    return MatF([[Fraction(c) for c in r] for r in rows])


def test_rref_proportional_rows():
    R, pivots, rank = rref(QM([[2, 4], [1, 2]]))
    assert rank == 1
    assert R.rows[0] == [Fraction(1), Fraction(2)]
    assert all(c == 0 for c in R.rows[1])


def test_rref_swap():
    R, pivots, rank = rref(QM([[0, 1], [1, 0]]))
    assert R.rows == [[1, 0], [0, 1]]
    assert rank == 2


def test_rref_idempotent_random():
    rng = random.Random(2)
    for _ in range(25):
        M = QM([[rng.randint(-4, 4) for _ in range(4)] for _ in range(3)])
        R, _, _ = rref(M)
        R2, _, _ = rref(R)
        assert R.rows == R2.rows


def test_rref_over_number_field():
    k = nf_create(P(-2, 0, 1), (1, 2))
    r = k.gen()
    M = MatF([[r, k.from_rational(2)], [k.one(), r]])
    R, _, rank = rref(M)
    assert rank == 1
    assert R.rows[0] == [k.one(), r]


def test_kernel_cases():
    assert kernel(QM([[1, 0], [0, 1]])).is_zero_space()
    full = kernel(QM([[0, 0], [0, 0]]))
    assert full.dim == 2
    ker = kernel(QM([[1, 1, -1]]))
    assert ker.dim == 2
    assert ker.contains_vector([Fraction(1), Fraction(0), Fraction(1)])
    # substitution check
    M = QM([[1, 1, -1]])
    for v in ker.basis():
        assert all(x == 0 for x in M.mat_vec(v))


def test_solve():
    M = QM([[1, 2], [3, 4]])
    x = solve(M, [Fraction(5), Fraction(11)])
    assert M.mat_vec(x) == [Fraction(5), Fraction(11)]
    assert solve(QM([[1, 1], [1, 1]]), [Fraction(0), Fraction(1)]) is None


def test_charpoly_known():
    assert charpoly([[2, 1], [1, 1]]) == P(1, -3, 1)
    assert charpoly([[0, 1], [1, 0]]) == P(-1, 0, 1)
    assert charpoly(int_identity(3)) == P(-1, 1) ** 3


def test_cayley_hamilton_random():
    rng = random.Random(9)
    for _ in range(10):
        n = rng.randint(2, 4)
        A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        f = charpoly(A)
        assert poly_of_matrix(f, A).is_zero()


def test_poly_of_matrix_simple():
    A = [[0, 1], [0, 0]]
    assert poly_of_matrix(P(0, 0, 1), A).is_zero()
    assert poly_of_matrix(P(0, 1), A) == MatF.from_int_rows(A)


def test_smith_normal_form_cases():
    for A, diag in [([[2, 0], [0, 3]], [1, 6]),
                    ([[1, 0], [0, 1]], [1, 1]),
                    ([[2, 4], [6, 8]], [2, 4])]:
        S, U, V = smith_normal_form(A)
        assert [S[i][i] for i in range(2)] == diag
        assert int_mat_mul(int_mat_mul(U, A), V) == S
        assert abs(int_det(U)) == 1 and abs(int_det(V)) == 1


def test_smith_random_verify():
    rng = random.Random(13)
    for _ in range(15):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        A = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        S, U, V = smith_normal_form(A)
        assert int_mat_mul(int_mat_mul(U, A), V) == S
        assert abs(int_det(U)) == 1 and abs(int_det(V)) == 1
        diag = [S[i][i] for i in range(min(m, n))]
        for i in range(m):
            for j in range(n):
                if i != j:
                    assert S[i][j] == 0
        for a, b in zip(diag, diag[1:]):
            if a != 0:
                assert b % a == 0
            else:
                assert b == 0


def test_int_mat_inverse():
    U = [[1, 2], [0, 1]]
    assert int_mat_mul(U, int_mat_inverse(U)) == int_identity(2)


def test_subspace_ops():
    e1 = [Fraction(1), Fraction(0)]
    e2 = [Fraction(0), Fraction(1)]
    U = Subspace(2, [e1])
    V = Subspace(2, [e2])
    assert subspace_ops(U, U, "intersect") == U
    s = subspace_ops(U, V, "sum")
    assert s.dim == 2
    D1 = Subspace(2, [[Fraction(1), Fraction(1)]])
    D2 = Subspace(2, [[Fraction(1), Fraction(-1)]])
    assert D1.intersect(D2).is_zero_space()
    assert subspace_ops(s, D1, "contains")


def test_dimension_formula_random():
    rng = random.Random(21)
    for _ in range(20):
        n = 5
        U = Subspace(n, [[Fraction(rng.randint(-3, 3)) for _ in range(n)]
                         for _ in range(rng.randint(1, 4))])
        V = Subspace(n, [[Fraction(rng.randint(-3, 3)) for _ in range(n)]
                         for _ in range(rng.randint(1, 4))])
        assert U.sum(V).dim + U.intersect(V).dim == U.dim + V.dim


def test_extended_gcd_poly():
    g, s, t = extended_gcd_poly(P(0, 1), P(1, 1))
    assert g == P(1)
    assert s * P(0, 1) + t * P(1, 1) == P(1)
    g2, s2, t2 = extended_gcd_poly(P(1, -2, 1), P(-1, 0, 1))
    assert g2 == P(-1, 1)
    f = P(2, 4)
    gf, sf, tf = extended_gcd_poly(f, Poly())
    assert gf == P(1, 2).monic() and sf * f == gf
