"""Ground-truth engines used to check the deterministic testers.

Nothing here feeds a deterministic verdict; `random_eval_mod` in particular is
a randomized cross-check only.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from .cyclo import CycloElement, binomial_row
from .expression import Expression, SizeGuardError
from .numtheory import is_prime

DEFAULT_TERM_LIMIT = 200_000


@dataclass(frozen=True)
class SparsePoly:
    """Exponent -> nonzero rational coefficient."""

    monomials: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "monomials",
                           {int(e): Fraction(c) for e, c in self.monomials.items() if c})

    def is_zero(self) -> bool:
        return not self.monomials

    @property
    def degree(self) -> int:
        if not self.monomials:
            raise ValueError("the zero polynomial has no degree")
        return max(self.monomials)

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        out = dict(self.monomials)
        for e, c in other.monomials.items():
            out[e] = out.get(e, 0) + c
        return SparsePoly(out)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly({e: -c for e, c in self.monomials.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        out: dict[int, Fraction] = {}
        for e1, c1 in self.monomials.items():
            for e2, c2 in other.monomials.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return SparsePoly(out)

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        return sum((c * x ** e for e, c in self.monomials.items()), Fraction(0))

    def reduce_cyclic(self, p: int) -> CycloElement:
        """Residue modulo X^p - 1."""
        out: dict[int, Fraction] = {}
        for e, c in self.monomials.items():
            out[e % p] = out.get(e % p, 0) + c
        return CycloElement(p, {k: v for k, v in out.items() if v})

    def to_expression(self) -> Expression:
        """Re-encode as a form-(1) expression with every beta = 0."""
        return Expression.build(1, 0, [(c, e, 0) for e, c in sorted(self.monomials.items())])


def expand_to_sparse(expr: Expression, term_limit: int = DEFAULT_TERM_LIMIT) -> SparsePoly:
    """Exact monomial expansion of the represented polynomial."""
    work = sum(t.beta + 1 for t in expr.terms)
    if work > term_limit:
        raise SizeGuardError(
            f"expansion needs {work} binomial terms, above the limit of {term_limit}")
    out: dict[int, Fraction] = {}
    for term in expr.terms:
        if not term.c:
            continue
        for k, v in enumerate(binomial_row(expr.a, expr.b, term.beta)):
            if v:
                e = term.alpha + k
                out[e] = out.get(e, 0) + term.c * v
    return SparsePoly(out)


def _mod_fraction(x: Fraction, q: int, what: str) -> int:
    if x.denominator % q == 0:
        raise ValueError(f"{q} divides the denominator of {what}")
    return x.numerator * pow(x.denominator, -1, q) % q


def _power_mod(base: int, e: int, q: int) -> int:
    if base == 0:
        return 1 if e == 0 else 0
    # Fermat: base**(q-1) == 1 for base != 0 mod q.
    return pow(base, e % (q - 1), q)


def random_eval_mod(expr: Expression, q: int, x: Optional[int] = None,
                    rng_seed: int = 0) -> int:
    """Value of the represented polynomial at x, modulo the prime q.

    When x is omitted it is drawn uniformly from [0, q) with `rng_seed`.
    """
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    if x is None:
        x = random.Random(rng_seed).randrange(q)
    x %= q
    a = _mod_fraction(expr.a, q, "a")
    b = _mod_fraction(expr.b, q, "b")
    shift = (a + b * x) % q
    total = 0
    for i, term in enumerate(expr.terms):
        c = _mod_fraction(term.c, q, f"terms[{i}].c")
        total += c * _power_mod(x, term.alpha, q) * _power_mod(shift, term.beta, q)
    return total % q


# -- Sturm sequences --------------------------------------------------------

def _integer_dense(poly: SparsePoly) -> list[int]:
    den = math.lcm(*(c.denominator for c in poly.monomials.values()))
    coeffs = [0] * (poly.degree + 1)
    for e, c in poly.monomials.items():
        coeffs[e] = c.numerator * (den // c.denominator)
    return coeffs


def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _primitive(p: list[int]) -> list[int]:
    g = math.gcd(*p)
    return [c // g for c in p] if g > 1 else p


def _positive_prem(a: list[int], b: list[int]) -> list[int]:
    """A positive multiple of the remainder of a by b."""
    r = list(a)
    lead = b[-1]
    scale, sign = abs(lead), (1 if lead > 0 else -1)
    db = len(b) - 1
    while len(r) - 1 >= db and r:
        k = len(r) - 1 - db
        top = r[-1] * sign
        r = [scale * c for c in r]
        for j, bj in enumerate(b):
            r[k + j] -= top * bj
        _trim(r)
    return r


def sturm_sequence(coeffs: list[int]) -> list[list[int]]:
    seq = [_primitive(_trim(list(coeffs)))]
    deriv = [i * c for i, c in enumerate(coeffs)][1:]
    seq.append(_primitive(_trim(deriv)))
    while seq[-1] and len(seq[-1]) > 1:
        rem = _positive_prem(seq[-2], seq[-1])
        if not rem:
            break
        seq.append(_primitive([-c for c in rem]))
    return [s for s in seq if s]


def _variations(signs: list[int]) -> int:
    signs = [s for s in signs if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def real_root_count(poly: SparsePoly) -> int:
    """Number of distinct real roots, exactly."""
    if poly.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    seq = sturm_sequence(_integer_dense(poly))
    at_neg = [(1 if s[-1] > 0 else -1) * (-1) ** (len(s) - 1) for s in seq]
    at_pos = [1 if s[-1] > 0 else -1 for s in seq]
    return _variations(at_neg) - _variations(at_pos)
