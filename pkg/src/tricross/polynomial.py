"""Sparse Laurent polynomials in ``A`` with exact integer coefficients.

Python integers are unbounded, so coefficient growth never wraps.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import ZeroPolynomialError

__all__ = ["LaurentPolynomial", "A", "delta", "delta_power", "span"]


class LaurentPolynomial:
    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exp, coeff in items:
                if not isinstance(exp, int) or not isinstance(coeff, int):
                    raise TypeError("exponents and coefficients must be int")
                clean[exp] = clean.get(exp, 0) + coeff
        self._terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPolynomial:
        return cls({exp: coeff})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def max_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no degree")
        return max(self._terms)

    @property
    def min_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no degree")
        return min(self._terms)

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials are invertible over the integers")
            return LaurentPolynomial({e * k: 1 if k % 2 == 0 else c})
        result = LaurentPolynomial({0: 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPolynomial:
        """Multiply by ``A**k``."""
        return LaurentPolynomial({e + k: c for e, c in self._terms.items()})

    def substitute_inverse(self) -> LaurentPolynomial:
        """The image under ``A -> A**-1``."""
        return LaurentPolynomial({-e: c for e, c in self._terms.items()})

    def evaluate(self, a):
        """Value at ``a``; integer arguments give exact Fractions."""
        if isinstance(a, int):
            a = Fraction(a)
        return sum(c * a**e for e, c in self._terms.items())

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def to_pairs(self) -> list[list[int]]:
        """JSON form: ``[exponent, coefficient]`` pairs, descending."""
        return [[e, self._terms[e]] for e in sorted(self._terms, reverse=True)]

    @classmethod
    def from_pairs(cls, pairs) -> LaurentPolynomial:
        return cls({int(e): int(c) for e, c in pairs})

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, e in enumerate(sorted(self._terms, reverse=True)):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "A" if e == 1 else f"A^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self):
        return f"LaurentPolynomial({self.to_pairs()})"


def _coerce(x) -> LaurentPolynomial:
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial({0: x})
    raise TypeError(f"cannot combine LaurentPolynomial with {type(x).__name__}")


A = LaurentPolynomial({1: 1})


@lru_cache(maxsize=None)
def delta_power(k: int) -> LaurentPolynomial:
    """``(-A**2 - A**-2)**k`` for ``k >= 0``."""
    if k < 0:
        raise ValueError("delta_power needs k >= 0")
    return LaurentPolynomial({2: -1, -2: -1}) ** k


delta = delta_power(1)


def span(p: LaurentPolynomial) -> int:
    if p.is_zero():
        raise ZeroPolynomialError("span of the zero polynomial is undefined")
    return p.max_degree - p.min_degree
