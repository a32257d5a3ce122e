"""Heights of rationals, rational tuples and of a + b*theta (theta a root of unity)."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import mpmath

from .numtheory import euler_phi

EXCLUDED_PAIRS = frozenset({(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)})


def rational_height(x: Fraction) -> int:
    x = Fraction(x)
    return max(abs(x.numerator), x.denominator)


def _integer_tuple(c: Sequence[Fraction]) -> list[int]:
    """Scale c to coprime integers (projective representative)."""
    c = [Fraction(v) for v in c]
    den = math.lcm(*(v.denominator for v in c))
    ints = [v.numerator * (den // v.denominator) for v in c]
    g = math.gcd(*ints)
    if g == 0:
        raise ValueError("projective height of the zero tuple is undefined")
    return [v // g for v in ints]


def projective_height(c: Sequence[Fraction]) -> int:
    if not c:
        raise ValueError("projective height of an empty tuple is undefined")
    return max(abs(v) for v in _integer_tuple(c))


def poly_height_bound(c: Sequence[Fraction]) -> int:
    """(t+1) * H(c): bounds the height of sum_j c_j theta**alpha_j X**beta_j."""
    return len(c) * projective_height(c)


def is_excluded_pair(a: Fraction, b: Fraction) -> bool:
    return (Fraction(a), Fraction(b)) in EXCLUDED_PAIRS


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, low degree first."""
    # X^n - 1 divided by Phi_d for every proper divisor d.
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div(num, list(cyclotomic_coeffs(d)))
    return tuple(num)


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        q, r = divmod(num[i + len(den) - 1], lead)
        assert r == 0
        out[i] = q
        for j, dj in enumerate(den):
            num[i + j] -= q * dj
    assert not any(num[: len(den) - 1])
    return out


def _minpoly_content(A: int, B: int, D: int, n: int) -> int:
    """Content of prod_k (D X - A - B theta_k) over primitive n-th roots theta_k.

    The product equals sum_i phi_i (D X - A)**i B**(deg - i), where phi_i are
    the coefficients of the n-th cyclotomic polynomial.
    """
    phi = cyclotomic_coeffs(n)
    deg = len(phi) - 1
    coeffs = [0] * (deg + 1)
    base = [1]  # (D X - A)**i
    for i, e in enumerate(phi):
        if i:
            nxt = [0] * (len(base) + 1)
            for k, v in enumerate(base):
                nxt[k] -= A * v
                nxt[k + 1] += D * v
            base = nxt
        if e:
            scale = e * B ** (deg - i)
            for k, v in enumerate(base):
                coeffs[k] += scale * v
    return math.gcd(*coeffs)


def algebraic_height_numeric(a: Fraction, b: Fraction, n: int,
                             precision: float = 1e-12) -> float:
    """Absolute height of a + b*theta, theta a primitive n-th root of unity.

    Uses the Mahler measure of the primitive integer minimal polynomial:
    H**phi(n) = lead * prod over conjugates of max(1, |a + b theta_k|).
    The leading coefficient is D**phi(n) divided by the polynomial's content,
    D the common denominator of a and b.
    """
    if not precision > 0:
        raise ValueError("precision must be positive")
    if n < 1:
        raise ValueError("order must be >= 1")
    a, b = Fraction(a), Fraction(b)
    D = math.lcm(a.denominator, b.denominator)
    A, B = a.numerator * (D // a.denominator), b.numerator * (D // b.denominator)
    phi = euler_phi(n)
    content = _minpoly_content(A, B, D, n)
    lead = Fraction(D ** phi, content)
    dps = max(20, int(-math.log10(precision)) + 15)
    with mpmath.workdps(dps):
        prod = mpmath.mpf(lead.numerator) / lead.denominator
        ma, mb = mpmath.mpf(a.numerator) / a.denominator, mpmath.mpf(b.numerator) / b.denominator
        for k in range(1, n + 1):
            if math.gcd(k, n) != 1:
                continue
            z = ma + mb * mpmath.expjpi(mpmath.mpf(2 * k) / n)
            prod *= max(mpmath.mpf(1), abs(z))
        return float(prod ** (mpmath.mpf(1) / phi))
