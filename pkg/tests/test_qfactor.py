import random
from fractions import Fraction

import pytest

from flatfields.config import DEFAULT
from flatfields.errors import DegreeLimitExceeded
from flatfields.poly import Poly
from flatfields.qfactor import factor_over_Q, is_irreducible_over_Q


def P(*ints):
    return Poly.from_ints(ints)


def rebuild(unit, factors):
    acc = Poly([Fraction(1)])
    for g, m in factors:
        acc = acc * g ** m
    return acc.scale(unit)


def test_x4_minus_1():
    unit, factors = factor_over_Q(P(-1, 0, 0, 0, 1))
    assert unit == 1
    polys = sorted((g.coeffs for g, _ in factors))
    assert len(factors) == 3
    assert rebuild(unit, factors) == P(-1, 0, 0, 0, 1)
    degs = sorted(g.degree for g, _ in factors)
    assert degs == [1, 1, 2]


def test_irreducible_quadratic():
    # discriminant 5 is not a rational square
    assert is_irreducible_over_Q(P(1, -3, 1))
    unit, factors = factor_over_Q(P(1, -3, 1))
    assert len(factors) == 1 and factors[0][1] == 1


def test_repeated_factor():
    unit, factors = factor_over_Q(P(1, -2, 1))  # (x-1)^2
    assert factors == [(P(-1, 1), 2)]


def test_known_quartic_split():
    # x^4 - 10x^2 + 1 = minpoly of sqrt2 + sqrt3, irreducible
    assert is_irreducible_over_Q(P(1, 0, -10, 0, 1))


def test_cyclotomic_like():
    # x^6 - 1 = (x-1)(x+1)(x^2+x+1)(x^2-x+1)
    unit, factors = factor_over_Q(P(-1, 0, 0, 0, 0, 0, 1))
    assert sorted(g.degree for g, _ in factors) == [1, 1, 2, 2]
    assert rebuild(unit, factors) == P(-1, 0, 0, 0, 0, 0, 1)


def test_non_monic_and_rational_coeffs():
    f = P(-2, 0, 2).scale(Fraction(3, 5))  # (6/5)(x^2 - 1)
    unit, factors = factor_over_Q(f)
    assert rebuild(unit, factors) == f
    assert sorted(g.degree for g, _ in factors) == [1, 1]
    g = Poly([Fraction(1, 2), Fraction(0), Fraction(1)])  # x^2 + 1/2
    unit, factors = factor_over_Q(g)
    assert rebuild(unit, factors) == g


def test_x_power_factor():
    f = P(0, 0, -1, 0, 0, 1)  # x^2 (x^3 - 1)
    unit, factors = factor_over_Q(f)
    assert rebuild(unit, factors) == f
    assert (P(0, 1), 2) in factors


def test_random_products_roundtrip():
    rng = random.Random(3)
    pool = [P(-1, 1), P(1, 1), P(-2, 0, 1), P(1, 1, 1), P(1, -3, 1),
            P(-2, 1), P(3, 0, 1), P(-1, -1, 0, 1)]
    for _ in range(15):
        chosen = rng.sample(pool, rng.randint(2, 4))
        f = Poly([Fraction(rng.choice([1, 2, -3]))])
        expected_irreducible = {}
        for g in chosen:
            f = f * g
        unit, factors = factor_over_Q(f)
        assert rebuild(unit, factors) == f
        for g, m in factors:
            assert is_irreducible_over_Q(g)


def test_degree_cap():
    f = Poly.from_ints([1] * 40)
    with pytest.raises(DegreeLimitExceeded):
        factor_over_Q(f)


def test_big_coefficients():
    # product with large coefficients still factors exactly
    f = P(-12345, 1) * P(98765, 1) * P(1, -3, 1)
    unit, factors = factor_over_Q(f)
    assert rebuild(unit, factors) == f
    assert (P(-12345, 1), 1) in factors
