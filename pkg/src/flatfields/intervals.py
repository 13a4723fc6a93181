"""Rational interval arithmetic used by root certification.

Intervals are (lo, hi) pairs of Fractions with lo <= hi. These are only a
certification device; no interval ever appears in a result.
"""

from fractions import Fraction

ZERO = (Fraction(0), Fraction(0))


def iv_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def iv_sub(a, b):
    return (a[0] - b[1], a[1] - b[0])


def iv_neg(a):
    return (-a[1], -a[0])


def iv_mul(a, b):
    ps = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(ps), max(ps))


def iv_scale(a, c):
    return (a[0] * c, a[1] * c) if c >= 0 else (a[1] * c, a[0] * c)


def iv_point(c):
    c = Fraction(c)
    return (c, c)


def iv_contains_zero(a):
    return a[0] <= 0 <= a[1]


def iv_sign(a):
    """+1/-1 when the interval is strictly one-signed, else None."""
    if a[0] > 0:
        return 1
    if a[1] < 0:
        return -1
    return None


def iv_abs_hi(a):
    return max(abs(a[0]), abs(a[1]))


def iv_width(a):
    return a[1] - a[0]


def iv_poly_eval(coeffs, iv):
    """Interval Horner evaluation of a rational-coefficient polynomial."""
    acc = ZERO
    for c in reversed(coeffs):
        acc = iv_add(iv_mul(acc, iv), iv_point(c))
    return acc
