"""Random instance families for experiments and tests."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .expression import Expression, Term
from .heights import is_excluded_pair
from .oracle import expand_to_sparse


def random_rational(rng: random.Random, bound: int, nonzero: bool = True) -> Fraction:
    while True:
        x = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if x or not nonzero:
            return x


def random_pair(rng: random.Random, lo: int = -5, hi: int = 5,
                allow_excluded: bool = False) -> tuple[Fraction, Fraction]:
    while True:
        a, b = Fraction(rng.randint(lo, hi)), Fraction(rng.randint(lo, hi))
        if allow_excluded or not is_excluded_pair(a, b):
            return a, b


def random_expression(rng: random.Random, t_max: int = 4, exp_max: int = 64,
                      coef_bound: int = 1000, pair=None, t_min: int = 0) -> Expression:
    """Up to t_max+1 terms; alpha, beta <= exp_max; |num|, den <= coef_bound."""
    a, b = pair if pair is not None else random_pair(rng)
    t = rng.randint(t_min, t_max)
    terms = tuple(Term(random_rational(rng, coef_bound), rng.randint(0, exp_max),
                       rng.randint(0, exp_max)) for _ in range(t + 1))
    return Expression(a, b, terms)


def cancelling_expression(rng: random.Random, t_max: int = 3, exp_max: int = 8,
                          coef_bound: int = 5, pair=None) -> Expression:
    """A random expression plus a partial cancellation, so zero sums are common."""
    expr = random_expression(rng, t_max, exp_max, coef_bound, pair)
    if rng.random() < 0.5:
        return expr
    poly = expand_to_sparse(expr)
    items = sorted(poly.monomials.items())
    keep = [it for it in items if rng.random() < 0.8]
    tail = tuple(Term(-c, e, 0) for e, c in keep)
    return Expression(expr.a, expr.b, expr.terms + tail)


def zero_instance(expr: Expression) -> Expression:
    """expr minus its own monomial expansion (every beta = 0): identically zero."""
    poly = expand_to_sparse(expr)
    tail = tuple(Term(-c, e, 0) for e, c in sorted(poly.monomials.items()))
    return Expression(expr.a, expr.b, expr.terms + tail)


def gapped_instance(rng: random.Random, gap: Optional[int] = None, t_half: int = 2,
                    exp_max: int = 12, coef_bound: int = 20, pair=None,
                    zero_halves: float = 0.3) -> Expression:
    """Two independent halves whose beta ranges are separated by more than `gap`.

    With gap=None the separation is the instance's own delta (t and H(c) do
    not depend on the shift applied to the upper half).  Each half is, with
    probability `zero_halves`, made identically zero by appending its negated
    expansion, so both verdicts occur; halves that cancel to nothing are redrawn.
    """
    from .hitting import delta
    from .tester import EMPTY, normalize

    if pair is None:
        while True:
            pair = random_pair(rng)
            if pair[0] and pair[1]:
                break
    a, b = pair
    halves = []
    while len(halves) < 2:
        half = random_expression(rng, t_half, exp_max, coef_bound, (a, b))
        if rng.random() < zero_halves:
            half = zero_instance(half)
        if normalize(half).kind != EMPTY:
            halves.append(half)
    low, high = halves

    def lifted(g):
        lift = max(t.beta for t in low.terms) + g + 1 - min(t.beta for t in high.terms)
        return Expression(a, b, tuple(Term(t.c, t.alpha, t.beta + max(lift, 0))
                                      for t in high.terms))

    if gap is None:
        # any separating lift gives the same merged terms, hence the same t and M
        nf = normalize(low + lifted(0))
        gap = delta(nf.t, nf.params()["M"])
    return low + lifted(gap + rng.randint(0, 3))


def large_expression(rng: random.Random, t: int = 50, bits: int = 2048,
                     coef_bound: int = 1000, pair=(Fraction(2), Fraction(3))) -> Expression:
    a, b = pair
    return Expression(a, b, tuple(
        Term(random_rational(rng, coef_bound), rng.getrandbits(bits), rng.getrandbits(bits))
        for _ in range(t + 1)))


def large_zero_expression(rng: random.Random, groups: int = 17, bits: int = 2048,
                          pair=(Fraction(2), Fraction(3))) -> Expression:
    """Sums of c X^al (a+bX)^(be+1) - a c X^al (a+bX)^be - b c X^(al+1) (a+bX)^be."""
    a, b = pair
    terms = []
    for _ in range(groups):
        c = random_rational(rng, 1000)
        al, be = rng.getrandbits(bits), rng.getrandbits(bits)
        terms += [Term(c, al, be + 1), Term(-a * c, al, be), Term(-b * c, al + 1, be)]
    rng.shuffle(terms)
    return Expression(a, b, tuple(terms))
