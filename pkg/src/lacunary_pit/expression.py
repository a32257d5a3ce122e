"""Expressions of the form  sum_j c_j * X**alpha_j * (a + b*X)**beta_j.

Coefficients and the shift pair are exact rationals; exponents are Python
ints, so they may carry thousands of bits.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?")
_NATURAL_RE = re.compile(r"\d+")


def parse_rational(text: str) -> Fraction:
    """Parse `-?digits(/digits)?`; the denominator must be nonzero."""
    if not isinstance(text, str) or not _RATIONAL_RE.fullmatch(text):
        raise ValueError(f"not a rational literal: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def parse_natural(text: str) -> int:
    if not isinstance(text, str) or not _NATURAL_RE.fullmatch(text):
        raise ValueError(f"not a decimal natural: {text!r}")
    return int(text)


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, str):
        return parse_rational(x)
    return Fraction(x)


@dataclass(frozen=True)
class Term:
    c: Fraction
    alpha: int
    beta: int

    def __post_init__(self):
        object.__setattr__(self, "c", as_fraction(self.c))
        if self.alpha < 0 or self.beta < 0:
            raise ValueError("exponents must be natural numbers")


@dataclass(frozen=True)
class Expression:
    """A shift pair (a, b) and a sequence of terms (c, alpha, beta)."""

    a: Fraction
    b: Fraction
    terms: tuple[Term, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", as_fraction(self.b))
        terms = tuple(t if isinstance(t, Term) else Term(*t) for t in self.terms)
        object.__setattr__(self, "terms", terms)

    @classmethod
    def build(cls, a: RationalLike, b: RationalLike,
              terms: Iterable[tuple[RationalLike, int, int]]) -> "Expression":
        return cls(as_fraction(a), as_fraction(b),
                   tuple(Term(as_fraction(c), int(al), int(be)) for c, al, be in terms))

    @property
    def t(self) -> int:
        return len(self.terms) - 1

    @property
    def d(self) -> int:
        return max((term.alpha for term in self.terms), default=0)

    @property
    def d_prime(self) -> int:
        return max((term.beta for term in self.terms), default=0)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(term.c for term in self.terms)

    def __add__(self, other: "Expression") -> "Expression":
        if (self.a, self.b) != (other.a, other.b):
            raise ValueError("cannot concatenate expressions with different shift pairs")
        return Expression(self.a, self.b, self.terms + other.terms)

    def __neg__(self) -> "Expression":
        return Expression(self.a, self.b, tuple(Term(-t.c, t.alpha, t.beta) for t in self.terms))

    def evaluate(self, x: Fraction) -> Fraction:
        """Exact value at a rational point (0**0 == 1)."""
        x = Fraction(x)
        shift = self.a + self.b * x
        return sum((t.c * x ** t.alpha * shift ** t.beta for t in self.terms), Fraction(0))

    # ExpressionDocument: exponents are decimal strings so nothing truncates.
    def to_document(self) -> dict:
        return {
            "a": format_rational(self.a),
            "b": format_rational(self.b),
            "terms": [
                {"c": format_rational(t.c), "alpha": str(t.alpha), "beta": str(t.beta)}
                for t in self.terms
            ],
        }

    @classmethod
    def from_document(cls, doc: dict) -> "Expression":
        """Parse an ExpressionDocument; errors name the offending field."""
        if not isinstance(doc, dict):
            raise DocumentError("document", "expected a JSON object")
        for key in ("a", "b", "terms"):
            if key not in doc:
                raise DocumentError(key, "missing field")
        a = _field(parse_rational, doc["a"], "a")
        b = _field(parse_rational, doc["b"], "b")
        raw_terms = doc["terms"]
        if not isinstance(raw_terms, list) or not raw_terms:
            raise DocumentError("terms", "expected a non-empty list")
        terms = []
        for i, rec in enumerate(raw_terms):
            where = f"terms[{i}]"
            if not isinstance(rec, dict):
                raise DocumentError(where, "expected an object")
            for key in ("c", "alpha", "beta"):
                if key not in rec:
                    raise DocumentError(f"{where}.{key}", "missing field")
            terms.append(Term(
                _field(parse_rational, rec["c"], f"{where}.c"),
                _field(parse_natural, rec["alpha"], f"{where}.alpha"),
                _field(parse_natural, rec["beta"], f"{where}.beta"),
            ))
        return cls(a, b, tuple(terms))


class SizeGuardError(ValueError):
    """An exact computation was refused because its operands are too large."""


class DocumentError(ValueError):
    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def _field(parser, value, name):
    try:
        return parser(value)
    except ValueError as exc:
        raise DocumentError(name, str(exc)) from None
