"""Exact Laurent polynomials in the bracket variable A over the integers.

A polynomial is stored as a map exponent -> coefficient with all zero
coefficients pruned, so equal polynomials always have equal term maps.
Coefficients are plain Python ints (arbitrary precision).
"""

from __future__ import annotations

import cmath
import json
from typing import Iterator, Mapping


class LaurentPoly:
    """Integer-coefficient Laurent polynomial in one variable A."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                if coeff:
                    clean[int(exp)] = int(coeff)
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def var(cls) -> LaurentPoly:
        """The variable A itself."""
        return cls({1: 1})

    @classmethod
    def loop_delta(cls) -> LaurentPoly:
        """The bracket loop value delta = -A^2 - A^-2."""
        return cls({2: -1, -2: -1})

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms = dict(self._terms)
        for exp, coeff in other._terms.items():
            total = terms.get(exp, 0) + coeff
            if total:
                terms[exp] = total
            else:
                terms.pop(exp, None)
        return LaurentPoly(terms)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                total = terms.get(e, 0) + c1 * c2
                if total:
                    terms[e] = total
                else:
                    terms.pop(e, None)
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self._terms) == 1:          # unit monomials are invertible
                (exp, coeff), = self._terms.items()
                if coeff in (1, -1):
                    return LaurentPoly({-exp: coeff}) ** (-n)
            raise ValueError("negative powers only defined for unit monomials")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mirror(self) -> LaurentPoly:
        """Substitute A -> A^-1 (negate every exponent)."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def terms(self) -> Iterator[tuple[int, int]]:
        """Yield (exponent, coefficient) pairs in descending exponent order."""
        for exp in sorted(self._terms, reverse=True):
            yield exp, self._terms[exp]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- numeric evaluation ------------------------------------------------

    def eval(self, a: complex) -> complex:
        """Evaluate at a nonzero complex point."""
        if a == 0:
            raise ValueError("cannot evaluate a Laurent polynomial at A = 0")
        value = 0j
        for exp, coeff in self._terms.items():
            value += coeff * a ** exp
        if not (cmath.isfinite(value.real) and cmath.isfinite(value.imag)):
            raise ValueError("evaluation produced a non-finite value")
        return value

    # -- text / JSON forms -------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for i, (exp, coeff) in enumerate(self.terms()):
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if exp == 0:
                body = str(mag)
            else:
                head = "A" if exp == 1 else f"A^{exp}"
                body = head if mag == 1 else f"{mag}{head}"
            if i == 0:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"{sign} {body}")
        return " ".join(chunks)

    __repr__ = __str__

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of str(): parse e.g. "-A^5 - A^-3 + A^-7"."""
        terms: dict[int, int] = {}
        stripped = text.replace("-", " - ").replace("+", " + ")
        # exponent minus signs got split; rejoin "A^ - 3" into "A^-3"
        stripped = stripped.replace("^ - ", "^-").replace("^ + ", "^")
        tokens = stripped.split()
        if tokens == ["0"]:
            return cls.zero()
        sign = 1
        for tok in tokens:
            if tok == "-":
                sign = -sign
                continue
            if tok == "+":
                continue
            if "A" in tok:
                head, _, tail = tok.partition("A")
                mag = int(head) if head else 1
                exp = int(tail[1:]) if tail.startswith("^") else (1 if not tail else None)
                if exp is None:
                    raise ValueError(f"bad term {tok!r}")
            else:
                mag = int(tok)
                exp = 0
            terms[exp] = terms.get(exp, 0) + sign * mag
            sign = 1
        return cls(terms)

    def to_json(self) -> str:
        """JSON object {"exp": coeff, ...} with exponents as string keys."""
        return json.dumps({str(e): c for e, c in self.terms()})

    @classmethod
    def from_json(cls, text: str) -> LaurentPoly:
        return cls({int(e): int(c) for e, c in json.loads(text).items()})


def lp_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def lp_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def lp_mirror(p: LaurentPoly) -> LaurentPoly:
    return p.mirror()


def lp_eval(p: LaurentPoly, a: complex) -> complex:
    return p.eval(a)
