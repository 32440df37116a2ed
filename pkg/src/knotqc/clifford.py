"""The Majorana Clifford algebra: anticommuting generators squaring to one.

Elements are formal combinations of monomials c_{i1} c_{i2} ... (ascending
index order, sign absorbed into the coefficient).  Monomials are stored as
bitmasks, bounding the generator count at 63.

Coefficients may be exact Cyc8 numbers (the ring Z[i, 1/sqrt(2)] realized
inside the 8th cyclotomic field with Fraction coordinates) or plain Python
complex; the braiding elements (1 + c_{k+1} c_k)/sqrt(2) are built exactly
so that identities like s1 s2 s1 = (A + B)/sqrt(2) hold with no rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np


class Cyc8:
    """Exact arithmetic in Q(zeta_8), with zeta = e^{i pi/4}.

    Elements are a0 + a1 z + a2 z^2 + a3 z^3 with rational coordinates and
    z^4 = -1.  Contains i = z^2 and sqrt(2) = z - z^3.
    """

    __slots__ = ("coords",)

    def __init__(self, coords=(0, 0, 0, 0)):
        self.coords = tuple(Fraction(c) for c in coords)

    @classmethod
    def of(cls, value) -> Cyc8:
        if isinstance(value, Cyc8):
            return value
        return cls((Fraction(value), 0, 0, 0))

    @classmethod
    def i(cls) -> Cyc8:
        return cls((0, 0, 1, 0))

    @classmethod
    def sqrt2(cls) -> Cyc8:
        return cls((0, 1, 0, -1))

    @classmethod
    def inv_sqrt2(cls) -> Cyc8:
        return cls((0, Fraction(1, 2), 0, Fraction(-1, 2)))

    def __add__(self, other) -> Cyc8:
        other = Cyc8.of(other)
        return Cyc8(tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self) -> Cyc8:
        return Cyc8(tuple(-a for a in self.coords))

    def __sub__(self, other) -> Cyc8:
        return self + (-Cyc8.of(other))

    def __rsub__(self, other) -> Cyc8:
        return Cyc8.of(other) + (-self)

    def __mul__(self, other) -> Cyc8:
        other = Cyc8.of(other)
        out = [Fraction(0)] * 4
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(other.coords):
                if not b:
                    continue
                k = i + j
                term = a * b
                if k >= 4:
                    k -= 4
                    term = -term
                out[k] += term
        return Cyc8(tuple(out))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, Cyc8):
            return self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.coords == (Fraction(other), 0, 0, 0)
        return complex(self) == other

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self) -> bool:
        return any(self.coords)

    def __complex__(self) -> complex:
        z = complex(math.sqrt(0.5), math.sqrt(0.5))
        return sum(float(a) * z ** k for k, a in enumerate(self.coords))

    def conjugate(self) -> Cyc8:
        a0, a1, a2, a3 = self.coords
        # conj(z^k) = z^{-k} = -z^{4-k} for k = 1..3
        return Cyc8((a0, -a3, -a2, -a1))

    def __repr__(self) -> str:
        return f"Cyc8{self.coords}"


@dataclass(frozen=True)
class CliffordElement:
    """Linear combination of Clifford monomials over n generators."""

    n: int
    combo: tuple[tuple[int, object], ...]  # (bitmask, coefficient), mask-sorted

    @classmethod
    def build(cls, n: int, terms: dict[int, object]) -> CliffordElement:
        if n > 63:
            raise ValueError("generator count bounded at 63 (bitmask monomials)")
        clean = tuple(sorted(((m, c) for m, c in terms.items() if _nonzero(c)), key=lambda t: t[0]))
        return cls(n, clean)

    @classmethod
    def scalar(cls, n: int, value) -> CliffordElement:
        return cls.build(n, {0: value})

    @classmethod
    def generator(cls, n: int, index: int) -> CliffordElement:
        """The generator c_index, 1-based."""
        if not 1 <= index <= n:
            raise ValueError(f"generator index {index} out of range")
        return cls.build(n, {1 << (index - 1): Cyc8.of(1)})

    def terms(self) -> dict[int, object]:
        return dict(self.combo)

    def __add__(self, other: CliffordElement) -> CliffordElement:
        self._check(other)
        terms = self.terms()
        for m, c in other.combo:
            terms[m] = terms.get(m, 0) + c
        return CliffordElement.build(self.n, terms)

    def __sub__(self, other: CliffordElement) -> CliffordElement:
        return self + other.scale(-1)

    def scale(self, factor) -> CliffordElement:
        return CliffordElement.build(self.n, {m: c * factor for m, c in self.combo})

    def __mul__(self, other: CliffordElement) -> CliffordElement:
        self._check(other)
        terms: dict[int, object] = {}
        for m1, c1 in self.combo:
            for m2, c2 in other.combo:
                mask, sign = _monomial_product(m1, m2)
                coeff = c1 * c2
                if sign < 0:
                    coeff = -coeff
                terms[mask] = terms.get(mask, 0) + coeff
        return CliffordElement.build(self.n, terms)

    def _check(self, other: CliffordElement) -> None:
        if self.n != other.n:
            raise ValueError("generator count mismatch")

    def is_scalar(self, value) -> bool:
        target = CliffordElement.scalar(self.n, Cyc8.of(value) if not isinstance(value, complex) else value)
        return self == target

    def conjugate_transpose(self) -> CliffordElement:
        """Adjoint: generators are self-adjoint, coefficients conjugate.

        The adjoint of c_{i1}...c_{ik} is c_{ik}...c_{i1} = sign * ascending
        order, with sign = (-1)^(k(k-1)/2).
        """
        terms = {}
        for m, c in self.combo:
            k = bin(m).count("1")
            sign = -1 if (k * (k - 1) // 2) % 2 else 1
            conj = c.conjugate() if hasattr(c, "conjugate") else complex(c).conjugate()
            terms[m] = conj if sign > 0 else -conj
        return CliffordElement.build(self.n, terms)


def _nonzero(c) -> bool:
    if isinstance(c, Cyc8):
        return bool(c)
    return c != 0


def _monomial_product(m1: int, m2: int) -> tuple[int, int]:
    """Product of ascending monomials: resulting mask and sign.

    Each generator of m2 moves left past the generators of m1 with a larger
    index, contributing one transposition sign each; coincident generators
    then square to +1.
    """
    sign = 0
    m = m2
    while m:
        low = m & -m
        # bits of m1 strictly above this generator
        above = m1 & ~(low | (low - 1))
        sign ^= bin(above).count("1") & 1
        m ^= low
    return m1 ^ m2, -1 if sign else 1


def cl_mul(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    return x * y


def braid_tau(n: int, k: int) -> tuple[CliffordElement, CliffordElement]:
    """The braiding element tau_k = (1 + c_{k+1} c_k)/sqrt(2) and its inverse."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"braid index {k} out of range for {n} generators")
    one = CliffordElement.scalar(n, Cyc8.of(1))
    bivector = CliffordElement.generator(n, k + 1) * CliffordElement.generator(n, k)
    s = Cyc8.inv_sqrt2()
    tau = (one + bivector).scale(s)
    tau_inv = (one - bivector).scale(s)
    return tau, tau_inv


def conjugation_matrix(n: int, k: int) -> np.ndarray:
    """Matrix of x -> tau_k x tau_k^{-1} on span{c_1..c_n}: c_k -> c_{k+1},
    c_{k+1} -> -c_k, identity elsewhere."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"braid index {k} out of range for {n} generators")
    m = np.eye(n)
    m[k - 1, k - 1] = 0.0
    m[k, k] = 0.0
    m[k, k - 1] = 1.0     # image of c_k is c_{k+1}
    m[k - 1, k] = -1.0    # image of c_{k+1} is -c_k
    return m


def fermion_pair(n: int, i: int, j: int) -> tuple[CliffordElement, CliffordElement]:
    """Standard fermion (psi, psi^dagger) built from Majorana generators i, j:
    psi = (c_i + i c_j)/2."""
    if i == j:
        raise ValueError("fermion pairing needs two distinct generators")
    ci = CliffordElement.generator(n, i)
    cj = CliffordElement.generator(n, j)
    half = Fraction(1, 2)
    psi = (ci + cj.scale(Cyc8.i())).scale(half)
    psi_dag = (ci - cj.scale(Cyc8.i())).scale(half)
    return psi, psi_dag


def quaternion_triple(n: int, x: int, y: int, z: int) -> tuple[CliffordElement, ...]:
    """I = c_y c_x, J = c_z c_y, K = c_x c_z for distinct generators x, y, z.

    Satisfies I^2 = J^2 = K^2 = IJK = -1 exactly.
    """
    if len({x, y, z}) != 3:
        raise ValueError("need three distinct generators")
    cx, cy, cz = (CliffordElement.generator(n, g) for g in (x, y, z))
    return cy * cx, cz * cy, cx * cz
