"""Gap width, prime-count bounds and hitting-set construction."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import islice
from typing import Iterator, Optional

from .expression import format_rational, parse_rational
from .numtheory import ceil_log2, is_prime, iter_primes_from

ROU = "rou"
REAL = "real"


@dataclass(frozen=True)
class GapConstant:
    """A certified rational lower bound on log2(C), C the height gap constant."""

    c_log2_lower: Fraction
    provenance: str = ""

    def __post_init__(self):
        object.__setattr__(self, "c_log2_lower", Fraction(self.c_log2_lower))
        if self.c_log2_lower <= 0:
            raise ValueError("log2(C) lower bound must be positive")


# C = 5**(1/12), the height lower bound for non-torsion elements of abelian
# number fields; log2(5)/12 = 0.19349... > 193/1000.
C_DEFAULT = GapConstant(
    Fraction(193, 1000),
    "C = 5^(1/12) (abelian-field height bound); stored as log2(C) >= 193/1000",
)


def delta(t: int, M: int, C: GapConstant = C_DEFAULT) -> int:
    """Integer gap width: ceil(ceil_log2(t(t+1)M) / log2 C)."""
    if t < 0:
        raise ValueError("t must be non-negative")
    if M < 1:
        raise ValueError("M must be >= 1")
    if t == 0:
        return 0
    return math.ceil(Fraction(ceil_log2(t * (t + 1) * M)) / C.c_log2_lower)


def sparsity_bound(t: int, delta_: int) -> int:
    """Monomial count of a gap-free block after expansion: (t+1)(delta*t+1)."""
    return (t + 1) * (delta_ * t + 1)


def prime_count_bound(t: int, d: int, d_prime: int, delta_: int) -> int:
    """(t+1) * max(log(d+d'), (delta*t+1) * log(d+t*delta)), logs as ceil_log2(. + 1)."""
    if t < 0:
        raise ValueError("t must be non-negative")
    return (t + 1) * max(
        ceil_log2(d + d_prime + 1),
        (delta_ * t + 1) * ceil_log2(d + t * delta_ + 1),
    )


def real_point_count(t: int, sparse: bool = False) -> int:
    """Points needed to hit a nonzero expression with t+1 terms.

    A nonzero expression with t+1 terms has at most 6(t+1)-4 distinct real
    roots; a sparse polynomial with t+1 monomials has at most 2t+1.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    return 2 * t + 2 if sparse else 6 * (t + 1) - 3


@dataclass(frozen=True)
class HittingParams:
    t: int
    d: int = 0
    d_prime: int = 0
    M: int = 0
    delta: int = 0


@dataclass(frozen=True)
class HittingSetSpec:
    """A hitting set: primes (roots-of-unity kind) or rational points (real kind).

    Roots-of-unity sets are stored as (min_prime, count) and materialized
    lazily, so sets far too large to list can still be iterated from the
    start; an explicit prime list may be given instead.
    """

    kind: str
    params: HittingParams
    min_prime: int = 0
    count: int = 0
    explicit_primes: Optional[tuple[int, ...]] = None
    points: tuple[Fraction, ...] = ()

    def iter_primes(self) -> Iterator[int]:
        if self.kind != ROU:
            raise ValueError("not a roots-of-unity hitting set")
        if self.explicit_primes is not None:
            return iter(self.explicit_primes)
        return islice(iter_primes_from(self.min_prime), self.count)

    @cached_property
    def primes(self) -> tuple[int, ...]:
        return tuple(self.iter_primes())

    @property
    def size(self) -> int:
        return self.count if self.kind == ROU else len(self.points)

    def to_text(self) -> str:
        p = self.params
        lines = [f"{self.kind} {p.t} {p.d} {p.d_prime} {p.M} {p.delta}"]
        if self.kind == ROU:
            lines.extend(str(q) for q in self.iter_primes())
        else:
            lines.extend(format_rational(x) for x in self.points)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "HittingSetSpec":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty hitting-set document")
        head = lines[0].split()
        if len(head) != 6 or head[0] not in (ROU, REAL):
            raise ValueError("line 1: expected 'kind t d d' M delta'")
        try:
            params = HittingParams(*(int(v) for v in head[1:]))
        except ValueError:
            raise ValueError("line 1: parameters must be decimal naturals") from None
        if head[0] == REAL:
            points = tuple(parse_rational(v) for v in lines[1:])
            if len(set(points)) != len(points):
                raise ValueError("real points must be pairwise distinct")
            return cls(REAL, params, points=points)
        primes = []
        for i, v in enumerate(lines[1:], start=2):
            if not v.isdigit() or not is_prime(int(v)):
                raise ValueError(f"line {i}: {v!r} is not a prime")
            if primes and int(v) <= primes[-1]:
                raise ValueError(f"line {i}: primes must be strictly increasing")
            primes.append(int(v))
        return cls(ROU, params, min_prime=primes[0] if primes else 0,
                   count=len(primes), explicit_primes=tuple(primes))

    def check_covers(self, t: int, d: int, d_prime: int, M: int,
                     C: GapConstant = C_DEFAULT, sparse: bool = False) -> None:
        """Raise SpecTooSmall unless this set hits every expression with these parameters.

        `sparse` is for plain sparse polynomials (t+1 monomials, degree <= d + d'),
        which need (t+1) log(d + d') primes, each above t+1.
        """
        if self.kind != ROU:
            raise ValueError("not a roots-of-unity hitting set")
        if sparse:
            need = (t + 1) * ceil_log2(d + d_prime + 1)
            floor = max(4, t + 1)
        else:
            dl = delta(t, M, C)
            need = prime_count_bound(t, d, d_prime, dl)
            floor = max(4, sparsity_bound(t, dl))
        # Both bounds are 0 for a constant, which still needs one evaluation.
        need = max(need, 1)
        if self.count < need:
            raise SpecTooSmall(
                f"hitting set has {self.count} primes, parameters "
                f"(t={t}, d={d}, d'={d_prime}, M={M}) need {need}")
        if self.min_prime <= floor:
            raise SpecTooSmall(
                f"smallest prime {self.min_prime} does not exceed the sparsity bound {floor}")


class SpecTooSmall(ValueError):
    pass


def build_rou_hitting_set(t: int, d: int, d_prime: int, M: int,
                          C: GapConstant = C_DEFAULT) -> HittingSetSpec:
    if M < 1:
        raise ValueError("M must be >= 1")
    dl = delta(t, M, C)
    count = max(1, prime_count_bound(t, d, d_prime, dl))
    min_prime = max(5, sparsity_bound(t, dl) + 1)
    return HittingSetSpec(ROU, HittingParams(t, d, d_prime, M, dl),
                          min_prime=min_prime, count=count)


def build_real_hitting_set(t: int, sparse: bool = False) -> HittingSetSpec:
    """The integer points 1, 2, ..., real_point_count(t)."""
    n = real_point_count(t, sparse)
    return HittingSetSpec(REAL, HittingParams(t),
                          points=tuple(Fraction(i) for i in range(1, n + 1)))
