"""Identity testers for  f = sum_j c_j X^alpha_j (a + b X)^beta_j.

* structural_zero_test: splits f where consecutive beta exponents jump by more
  than delta, then expands each gap-free block exactly.  Exponents only enter
  through differences inside a block, so 2048-bit exponents are fine.
* blackbox_zero_test: evaluates f at all primitive p-th roots of unity for the
  primes of a hitting set (one exact reduction mod X^p - 1 per prime).
* real_point_zero_test: exact evaluation at rational points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import oracle
from .cyclo import (DEFAULT_SIZE_GUARD, CycloElement, binomial_row,
                    eval_expression_mod, monomial, mul, vanishes_on_all_roots,
                    vanishes_on_primitive_roots)
from .expression import Expression, SizeGuardError, Term
from .heights import projective_height
from .hitting import (C_DEFAULT, REAL, ROU, GapConstant, SpecTooSmall, delta,
                      real_point_count, sparsity_bound)
from .numtheory import is_prime, iter_primes_from

ZERO = "zero"
NONZERO = "nonzero"

SHIFTED = "shifted"    # b != 0 and a != 0
MONOMIAL = "monomial"  # degenerate pair rewritten to a sparse polynomial
EMPTY = "empty"        # every coefficient cancelled


@dataclass(frozen=True)
class NormalForm:
    expr: Expression
    kind: str
    stripped_beta: int = 0
    merged: int = 0
    dropped: int = 0

    @property
    def t(self) -> int:
        return len(self.expr.terms) - 1

    def params(self) -> dict:
        """(t, d, d', M) of the normalized expression; M = H(c)."""
        e = self.expr
        M = projective_height(e.coefficients) if e.terms else 1
        return {"t": max(self.t, 0), "d": e.d, "d_prime": e.d_prime, "M": M}

    def degree_bound(self) -> int:
        return max((t.alpha + t.beta for t in self.expr.terms), default=0)


@dataclass(frozen=True)
class GapDecomposition:
    delta: int
    blocks: tuple[range, ...]
    stripped_beta: int = 0


@dataclass(frozen=True)
class Verdict:
    result: str
    mode: str
    witness: Optional[dict] = None
    params: dict = field(default_factory=dict)
    evaluations: int = 0

    @property
    def is_zero(self) -> bool:
        return self.result == ZERO


def _merge(terms, key) -> tuple[list[Term], int, int]:
    acc: dict = {}
    for t in terms:
        k = key(t)
        acc[k] = acc.get(k, 0) + t.c
    merged = len(terms) - len(acc)
    kept = [(k, c) for k, c in acc.items() if c]
    return kept, merged, len(acc) - len(kept)


def _guarded_power(base: Fraction, e: int, size_guard: int) -> Fraction:
    if base in (0, 1, -1):
        return base ** e
    if e.bit_length() > size_guard:
        raise SizeGuardError(
            f"rewriting needs {base}^e with a {e.bit_length()}-bit exponent "
            f"(guard {size_guard} bits)")
    return base ** e


def normalize(expr: Expression, size_guard: int = DEFAULT_SIZE_GUARD) -> NormalForm:
    """Sort by beta, merge equal (alpha, beta), drop zeros, strip (a+bX)^beta_0.

    Degenerate shift pairs (a = 0 or b = 0) become plain sparse polynomials,
    stored with (a, b) = (1, 0) and every beta = 0 (with 0**0 == 1).
    """
    if not expr.terms:
        raise ValueError("expression has no terms")
    a, b = expr.a, expr.b
    if a == 0 or b == 0:
        if b == 0:
            rewritten = [Term(t.c * _guarded_power(a, t.beta, size_guard), t.alpha, 0)
                         for t in expr.terms]
        else:
            rewritten = [Term(t.c * _guarded_power(b, t.beta, size_guard), t.alpha + t.beta, 0)
                         for t in expr.terms]
        kept, merged, dropped = _merge(rewritten, key=lambda t: t.alpha)
        kept.sort()
        terms = tuple(Term(c, alpha, 0) for alpha, c in kept)
        return NormalForm(Expression(Fraction(1), Fraction(0), terms),
                          MONOMIAL if terms else EMPTY, 0, merged, dropped)
    kept, merged, dropped = _merge(expr.terms, key=lambda t: (t.beta, t.alpha))
    if not kept:
        return NormalForm(Expression(a, b, ()), EMPTY, 0, merged, dropped)
    kept.sort()
    beta0 = kept[0][0][0]
    terms = tuple(Term(c, alpha, beta - beta0) for (beta, alpha), c in kept)
    return NormalForm(Expression(a, b, terms), SHIFTED, beta0, merged, dropped)


def gap_split(expr: Expression, delta_: int, stripped_beta: int = 0) -> GapDecomposition:
    """Maximal runs of terms whose consecutive beta differences are <= delta."""
    betas = [t.beta for t in expr.terms]
    if any(x > y for x, y in zip(betas, betas[1:])):
        raise ValueError("terms must be sorted by beta (normalize first)")
    blocks = []
    start = 0
    for i in range(1, len(betas)):
        if betas[i] - betas[i - 1] > delta_:
            blocks.append(range(start, i))
            start = i
    if betas:
        blocks.append(range(start, len(betas)))
    return GapDecomposition(delta_, tuple(blocks), stripped_beta)


def expand_block(expr: Expression, block: range) -> dict[int, Fraction]:
    """Exact monomials of the block with its smallest (a+bX) power factored out."""
    terms = [expr.terms[i] for i in block]
    base = min(t.beta for t in terms)
    out: dict[int, Fraction] = {}
    for t in terms:
        for k, v in enumerate(binomial_row(expr.a, expr.b, t.beta - base)):
            if v:
                e = t.alpha + k
                out[e] = out.get(e, 0) + t.c * v
    return {e: c for e, c in out.items() if c}


def _verdict_params(nf: NormalForm, delta_: Optional[int]) -> dict:
    p = nf.params()
    return {"t": p["t"], "d": str(p["d"]), "d_prime": str(p["d_prime"]),
            "M": str(p["M"]), "delta": delta_}


def structural_zero_test(expr: Expression, C: GapConstant = C_DEFAULT,
                         size_guard: int = DEFAULT_SIZE_GUARD) -> Verdict:
    nf = normalize(expr, size_guard)
    if nf.kind == EMPTY:
        return Verdict(ZERO, "structural", params=_verdict_params(nf, 0))
    if nf.kind == MONOMIAL:
        # Distinct exponents after merging: nonzero.
        return Verdict(NONZERO, "structural", params=_verdict_params(nf, 0))
    t = nf.t
    M = projective_height(nf.expr.coefficients)
    dl = delta(t, M, C)
    gaps = gap_split(nf.expr, dl, nf.stripped_beta)
    for i, block in enumerate(gaps.blocks):
        if expand_block(nf.expr, block):
            return Verdict(NONZERO, "structural", witness={"block": i},
                           params=_verdict_params(nf, dl))
    return Verdict(ZERO, "structural", params=_verdict_params(nf, dl))


def decompose(expr: Expression, C: GapConstant = C_DEFAULT,
              size_guard: int = DEFAULT_SIZE_GUARD) -> tuple[NormalForm, GapDecomposition]:
    nf = normalize(expr, size_guard)
    if nf.kind != SHIFTED:
        return nf, GapDecomposition(0, (range(len(nf.expr.terms)),) if nf.expr.terms else ())
    dl = delta(nf.t, projective_height(nf.expr.coefficients), C)
    return nf, gap_split(nf.expr, dl, nf.stripped_beta)


def blackbox_zero_test(expr: Expression, spec, size_guard: int = DEFAULT_SIZE_GUARD,
                       C: GapConstant = C_DEFAULT, exhaustive: bool = False) -> Verdict:
    """Zero iff f vanishes at every primitive p-th root of unity, p in the set.

    Primes are tried in ascending order and the first non-vanishing one is the
    witness.  Once p exceeds deg f + 1 the residue mod X^p - 1 is f itself, so
    vanishing there means f = 0 and every later prime vanishes too; unless
    `exhaustive` is set the loop stops at that point.
    """
    if spec.kind != ROU:
        raise ValueError("blackbox_zero_test needs a roots-of-unity hitting set")
    nf = normalize(expr, size_guard)
    p = nf.params()
    spec.check_covers(p["t"], p["d"], p["d_prime"], p["M"], C, sparse=nf.kind != SHIFTED)
    params = _verdict_params(nf, spec.params.delta)
    tail = nf.degree_bound() + 2
    evaluations = 0
    for prime in spec.iter_primes():
        evaluations += 1
        residue = eval_expression_mod(nf.expr, prime, size_guard)
        if not vanishes_on_primitive_roots(residue):
            return Verdict(NONZERO, "blackbox", witness={"prime": prime},
                           params=params, evaluations=evaluations)
        if prime >= tail and not exhaustive:
            break
    return Verdict(ZERO, "blackbox", params=params, evaluations=evaluations)


def _power_table(x: Fraction, exponents) -> dict[int, Fraction]:
    return {e: x ** e for e in set(exponents)}


def real_point_zero_test(expr: Expression, spec, size_guard: int = DEFAULT_SIZE_GUARD,
                         exhaustive: bool = False) -> Verdict:
    """Exact evaluation at the rational points of a real hitting set.

    A nonzero polynomial of degree D has at most D roots, so after D+1
    vanishing points the rest are implied (skipped unless `exhaustive`).
    """
    if spec.kind != REAL:
        raise ValueError("real_point_zero_test needs a real-points hitting set")
    nf = normalize(expr, size_guard)
    t = max(nf.t, 0)
    need = real_point_count(t, sparse=nf.kind != SHIFTED)
    if len(spec.points) < need:
        raise SpecTooSmall(f"{len(spec.points)} points given, {need} needed for t={t}")
    if len(set(spec.points)) != len(spec.points):
        raise ValueError("hitting-set points must be pairwise distinct")
    terms = nf.expr.terms
    for term in terms:
        for e in (term.alpha, term.beta):
            if e.bit_length() > size_guard:
                raise SizeGuardError(
                    f"exact evaluation needs a {e.bit_length()}-bit exponent "
                    f"(guard {size_guard} bits)")
    params = _verdict_params(nf, None)
    degree = nf.degree_bound()
    a, b = nf.expr.a, nf.expr.b
    evaluations = roots = 0
    for x in spec.points:
        evaluations += 1
        xs = _power_table(x, (t.alpha for t in terms))
        ss = _power_table(a + b * x, (t.beta for t in terms))
        value = sum((t.c * xs[t.alpha] * ss[t.beta] for t in terms), Fraction(0))
        if value and (nf.stripped_beta == 0 or a + b * x != 0):
            return Verdict(NONZERO, "real", witness={"point": str(x)},
                           params=params, evaluations=evaluations)
        # f = g * (a+bX)^beta_0; only zeros of g count towards deg(g) + 1
        roots += not value
        if roots > degree and not exhaustive:
            break
    return Verdict(ZERO, "real", params=params, evaluations=evaluations)


# -- lower bounds for prod (X^p - 1) -------------------------------------------

@dataclass(frozen=True)
class LowerBoundCertificate:
    """No expression with these parameters equals prod (X^p - 1) or a nonzero multiple.

    The covered region is every (d, d') with d <= d_max and d + d' <= sum_max.
    """

    certified: bool
    t: int
    M: int
    delta: int
    prime_count: int
    d_max: int = 0
    sum_max: int = 0

    def covers(self, d: int, d_prime: int) -> bool:
        return self.certified and d <= self.d_max and d + d_prime <= self.sum_max

    def statement(self) -> str:
        if not self.certified:
            return (f"not certified: {self.prime_count} primes are too few for "
                    f"t={self.t}, H(c)<={self.M} with any d, d' >= 1")
        return (f"no expression with t={self.t}, alpha<=d, beta<=d', H(c)<={self.M} "
                f"and any shift pair (a, b) equals the product of X^p-1 over the "
                f"{self.prime_count} given primes, or any nonzero multiple of it, "
                f"whenever d<={self.d_max} and d+d'<={self.sum_max}; degenerate pairs "
                f"(a=0 or b=0) are covered through the sparse bound on d+d'")


def lower_bound_params(target_primes: Sequence[int], t: int, M: int,
                       C: GapConstant = C_DEFAULT) -> LowerBoundCertificate:
    primes = sorted(set(target_primes))
    if len(primes) != len(target_primes):
        raise ValueError("target primes must be distinct")
    dl = delta(t, M, C)
    floor = max(4, sparsity_bound(t, dl))
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p <= floor:
            raise ValueError(f"prime {p} does not exceed the sparsity bound {floor}")
    n = len(primes)
    # (t+1) ceil_log2(d+d'+1) <= n  and  (t+1)(dt+1) ceil_log2(d+t*delta+1) <= n
    sum_log = n // (t + 1)
    block_log = n // sparsity_bound(t, dl)
    d_max = 2 ** block_log - t * dl - 1
    sum_max = 2 ** sum_log - 1
    if d_max < 1 or sum_max < 2:
        return LowerBoundCertificate(False, t, M, dl, n)
    return LowerBoundCertificate(True, t, M, dl, n, d_max=d_max, sum_max=sum_max)


REFUTED = "refuted"
NOT_REFUTED = "not_refuted"


@dataclass(frozen=True)
class Refutation:
    status: str
    witness: Optional[dict] = None
    checked_primes: tuple[int, ...] = ()
    confirmed_equal: Optional[bool] = None


def target_product(target_primes: Sequence[int], q: int) -> CycloElement:
    """prod_p (X^p - 1) reduced in R_q."""
    acc = CycloElement.one(q)
    for p in target_primes:
        acc = mul(acc, monomial(p, q) - CycloElement.one(q))
    return acc


def _residue_summary(u: CycloElement) -> dict:
    return {"nonzero_coefficients": len(u.terms),
            "first": [[i, str(c)] for i, c in sorted(u.terms.items())[:4]]}


def refute_representation(expr: Expression, target_primes: Sequence[int],
                          size_guard: int = DEFAULT_SIZE_GUARD, extra: int = 3,
                          term_limit: Optional[int] = None) -> Refutation:
    """Check whether expr could equal P = prod_{p in targets} (X^p - 1).

    NotRefuted is inconclusive on its own; when the expression is small enough
    to expand, `confirmed_equal` records the exact comparison.
    """
    targets = list(target_primes)
    if len(set(targets)) != len(targets):
        raise ValueError("target primes must be distinct")
    for p in targets:
        if p < 5 or not is_prime(p):
            raise ValueError(f"target {p} is not a prime >= 5")
    checked = []
    for p in sorted(targets):
        checked.append(p)
        residue = eval_expression_mod(expr, p, size_guard)
        if not vanishes_on_all_roots(residue):
            return Refutation(REFUTED, {"prime": p, "stage": "target",
                                        "residue": _residue_summary(residue)},
                              tuple(checked))
    target_set = set(targets)
    extras = (q for q in iter_primes_from(5) if q not in target_set)
    for _, q in zip(range(extra), extras):
        checked.append(q)
        diff = eval_expression_mod(expr, q, size_guard) - target_product(targets, q)
        if not vanishes_on_all_roots(diff):
            return Refutation(REFUTED, {"prime": q, "stage": "extra",
                                        "residue": _residue_summary(diff)},
                              tuple(checked))
    limit = oracle.DEFAULT_TERM_LIMIT if term_limit is None else term_limit
    try:
        expanded = oracle.expand_to_sparse(expr, limit)
    except SizeGuardError:
        return Refutation(NOT_REFUTED, checked_primes=tuple(checked))
    product = oracle.SparsePoly({0: 1})
    for p in targets:
        product = product * oracle.SparsePoly({p: 1, 0: -1})
    diff = expanded - product
    if diff.is_zero():
        return Refutation(NOT_REFUTED, checked_primes=tuple(checked), confirmed_equal=True)
    e = max(diff.monomials)
    return Refutation(REFUTED, {"prime": None, "stage": "expansion",
                                "exponent": str(e), "difference": str(diff.monomials[e])},
                      tuple(checked), confirmed_equal=False)
