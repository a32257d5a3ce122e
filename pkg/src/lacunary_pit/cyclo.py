"""Exact arithmetic in Q[X]/(X^p - 1), p prime.

An element is stored sparsely (index -> nonzero Fraction); `coeffs` gives the
full length-p coefficient vector.  Reducing an expression into this ring is
the same as evaluating it at every p-th root of unity at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .expression import Expression, SizeGuardError
from .numtheory import is_prime

DEFAULT_SIZE_GUARD = 20  # max bit-length of an exponent expanded exactly


@dataclass(frozen=True, eq=False)
class CycloElement:
    p: int
    terms: Mapping[int, Fraction]

    @classmethod
    def from_coeffs(cls, p: int, coeffs: Sequence) -> "CycloElement":
        if len(coeffs) != p:
            raise ValueError(f"expected {p} coefficients, got {len(coeffs)}")
        return cls(p, {i: Fraction(c) for i, c in enumerate(coeffs) if c})

    @classmethod
    def zero(cls, p: int) -> "CycloElement":
        return cls(p, {})

    @classmethod
    def one(cls, p: int) -> "CycloElement":
        return cls(p, {0: Fraction(1)})

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(self.terms.get(i, Fraction(0)) for i in range(self.p))

    def __eq__(self, other):
        if not isinstance(other, CycloElement):
            return NotImplemented
        return self.p == other.p and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.p, frozenset(self.terms.items())))

    def __repr__(self):
        body = " + ".join(f"({c})*X^{i}" for i, c in sorted(self.terms.items())) or "0"
        return f"CycloElement(p={self.p}, {body})"

    def _check(self, other: "CycloElement"):
        if self.p != other.p:
            raise ValueError(f"ring mismatch: p={self.p} vs p={other.p}")

    def __add__(self, other: "CycloElement") -> "CycloElement":
        self._check(other)
        return CycloElement(self.p, _accumulate(self.terms.items(), other.terms.items()))

    def __neg__(self) -> "CycloElement":
        return CycloElement(self.p, {i: -c for i, c in self.terms.items()})

    def __sub__(self, other: "CycloElement") -> "CycloElement":
        return self + (-other)

    def scale(self, c) -> "CycloElement":
        c = Fraction(c)
        if not c:
            return CycloElement.zero(self.p)
        return CycloElement(self.p, {i: c * v for i, v in self.terms.items()})

    def shift(self, k: int) -> "CycloElement":
        """Multiply by X**k (k may be huge; only k mod p matters)."""
        k %= self.p
        return CycloElement(self.p, {(i + k) % self.p: v for i, v in self.terms.items()})

    def __mul__(self, other: "CycloElement") -> "CycloElement":
        return mul(self, other)


def _accumulate(*parts: Iterable[tuple[int, Fraction]]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for part in parts:
        for i, c in part:
            out[i] = out.get(i, 0) + c
    return {i: c for i, c in out.items() if c}


def monomial(alpha: int, p: int) -> CycloElement:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return CycloElement(p, {alpha % p: Fraction(1)})


def mul(u: CycloElement, v: CycloElement) -> CycloElement:
    """Cyclic convolution; schoolbook over the stored (nonzero) coefficients."""
    u._check(v)
    p = u.p
    out: dict[int, Fraction] = {}
    for i, x in u.terms.items():
        for j, y in v.terms.items():
            k = i + j
            if k >= p:
                k -= p
            out[k] = out.get(k, 0) + x * y
    return CycloElement(p, {k: c for k, c in out.items() if c})


def _check_guard(e: int, size_guard: int):
    if e.bit_length() > size_guard:
        raise SizeGuardError(
            f"exponent has {e.bit_length()} bits, above the exact-expansion guard of "
            f"{size_guard} bits; coefficient sizes grow linearly in the exponent, "
            "use the structural tester for exponents this large"
        )


def pow(u: CycloElement, e: int, size_guard: int = DEFAULT_SIZE_GUARD) -> CycloElement:
    """u**e by square-and-multiply."""
    if e < 0:
        raise ValueError("negative exponent")
    _check_guard(e, size_guard)
    result = CycloElement.one(u.p)
    base = u
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


@lru_cache(maxsize=256)
def binomial_row(a: Fraction, b: Fraction, beta: int) -> tuple[Fraction, ...]:
    """Coefficients of (a + b X)**beta, low degree first."""
    row = []
    ak, bk = a.numerator * b.denominator, b.numerator * a.denominator
    den = (a.denominator * b.denominator) ** beta
    # C(beta, k) * A**(beta - k) * B**k over a common denominator
    binom = 1
    for k in range(beta + 1):
        if k:
            binom = binom * (beta - k + 1) // k
        row.append(Fraction(binom * ak ** (beta - k) * bk ** k, den))
    return tuple(row)


def shifted_power(a: Fraction, b: Fraction, beta: int, p: int,
                  size_guard: int = DEFAULT_SIZE_GUARD) -> CycloElement:
    """(a + b X)**beta in R_p.

    Below p the binomial row needs no wrap-around and is much cheaper than
    repeated squaring; both routes give the same element.
    """
    _check_guard(beta, size_guard)
    if beta < p:
        terms: dict[int, Fraction] = {}
        for k, c in enumerate(binomial_row(a, b, beta)):
            if c:
                terms[k] = c
        return CycloElement(p, terms)
    lin = CycloElement(p, _accumulate([(0, a), (1 % p, b)]))
    return pow(lin, beta, size_guard)


def eval_expression_mod(expr: Expression, p: int,
                        size_guard: int = DEFAULT_SIZE_GUARD) -> CycloElement:
    """The residue of the represented polynomial modulo X^p - 1."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    out: dict[int, Fraction] = {}
    for term in expr.terms:
        if not term.c:
            continue
        power = shifted_power(expr.a, expr.b, term.beta, p, size_guard)
        shift = term.alpha % p
        for i, v in power.terms.items():
            k = (i + shift) % p
            out[k] = out.get(k, 0) + term.c * v
    return CycloElement(p, {k: c for k, c in out.items() if c})


def vanishes_on_all_roots(u: CycloElement) -> bool:
    return not u.terms


def vanishes_on_primitive_roots(u: CycloElement) -> bool:
    """True iff u is a multiple of 1 + X + ... + X^(p-1), i.e. zero mod Phi_p."""
    if not u.terms:
        return True
    if len(u.terms) < u.p:
        return False
    return len(set(u.terms.values())) == 1
