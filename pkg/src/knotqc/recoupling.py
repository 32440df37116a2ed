"""Quantum integers, loop/theta net evaluations, and vertex normalization.

All evaluations are numeric at a concrete bracket variable A (symbolic
quantum-factorial quotients are out of scope).  At the unitary roots
A = e^{i pi / 2r} the quantum integer [n] equals sin(n pi / r)/sin(pi / r),
so [r-1] = 0 and admissible vertex labels are capped by the level r.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np


def unitary_root(r: int) -> complex:
    """The bracket variable A = e^{i pi / 2r} for level r."""
    if r < 3:
        raise ValueError("level must be at least 3")
    return cmath.exp(1j * math.pi / (2 * r))


def quantum_int(n: int, a: complex) -> complex:
    """[n] = (A^2n - A^-2n) / (A^2 - A^-2)."""
    denom = a ** 2 - a ** -2
    if abs(denom) < 1e-14:
        raise ValueError("degenerate evaluation point: A^2 = A^-2")
    return (a ** (2 * n) - a ** (-2 * n)) / denom


def delta_n(n: int, a: complex) -> complex:
    """Loop value of the closed n-strand projector: (-1)^n [n+1]."""
    return (-1) ** n * quantum_int(n + 1, a)


def quantum_factorial(n: int, a: complex) -> complex:
    value = 1 + 0j
    for k in range(1, n + 1):
        value *= quantum_int(k, a)
    return value


@dataclass(frozen=True)
class AdmissibleTriple:
    a: int
    b: int
    c: int
    r: int

    def __post_init__(self):
        if not is_admissible(self.a, self.b, self.c, self.r):
            raise ValueError(f"({self.a},{self.b},{self.c}) is not admissible at level {self.r}")


def triple_parameters(a: int, b: int, c: int) -> tuple[int, int, int] | None:
    """Internal line counts (m, n, p) with a = m+p, b = m+n, c = n+p."""
    m2, n2, p2 = a + b - c, b + c - a, c + a - b
    if m2 < 0 or n2 < 0 or p2 < 0 or m2 % 2 or n2 % 2 or p2 % 2:
        return None
    return m2 // 2, n2 // 2, p2 // 2


def is_admissible(a: int, b: int, c: int, r: int | None = None) -> bool:
    """Parity and triangle constraints, plus a+b+c <= 2r-4 when r is given."""
    if min(a, b, c) < 0:
        return False
    if triple_parameters(a, b, c) is None:
        return False
    if r is not None and a + b + c > 2 * r - 4:
        return False
    return True


def theta_net(a: int, b: int, c: int, point: complex, r: int | None = None) -> complex:
    """Closed theta network value via the (m, n, p) reparameterization."""
    params = triple_parameters(a, b, c)
    if params is None or not is_admissible(a, b, c, r):
        raise ValueError(f"({a},{b},{c}) is not an admissible triple")
    m, n, p = params
    sign = (-1) ** (m + n + p)
    num = quantum_factorial(m + n + p + 1, point) * quantum_factorial(m, point) \
        * quantum_factorial(n, point) * quantum_factorial(p, point)
    den = quantum_factorial(m + n, point) * quantum_factorial(n + p, point) \
        * quantum_factorial(p + m, point)
    return sign * num / den


def two_strand_nets(delta: float) -> tuple[float, float, float]:
    """The 2-projector net evaluations (Delta, Theta, T) as functions of delta."""
    if delta == 0:
        raise ValueError("loop value delta must be nonzero")
    big_delta = delta ** 2 - 1
    theta = (delta - 1 / delta) * (delta ** 2 - 2)
    tet = (delta - 1 / delta) ** 2 * (delta ** 2 - 2) - 2 * theta / delta
    return big_delta, theta, tet


def fib_recoupling_F(delta: float) -> tuple[np.ndarray, np.ndarray]:
    """Recoupling matrices for the 2-projector theory at a golden loop value.

    Returns (raw F, symmetrized F).  The raw matrix comes straight from the
    net evaluations; rescaling every vertex by alpha with
    alpha^2 = sqrt(Delta^3)/Theta symmetrizes it to [[tau, sqrt(tau)],
    [sqrt(tau), -tau]] with tau = 1/Delta.  Requires delta^2 = delta + 1,
    otherwise F^2 != I and the model is inconsistent.
    """
    if abs(delta ** 2 - delta - 1) > 1e-12:
        raise ValueError("loop value must satisfy delta^2 = delta + 1")
    big_delta, theta, tet = two_strand_nets(delta)
    raw = np.array(
        [
            [1 / big_delta, big_delta / theta],
            [theta / big_delta ** 2, tet * big_delta / theta ** 2],
        ]
    )
    tau = 1 / big_delta
    sym = np.array([[tau, math.sqrt(tau)], [math.sqrt(tau), -tau]])
    return raw, sym


def theta_hat(a: int, b: int, c: int, point: complex, r: int) -> float:
    """Sign-stripped theta: Theta = (-1)^((a+b+c)/2) * theta_hat, positive real."""
    value = theta_net(a, b, c, point, r)
    stripped = (-1) ** ((a + b + c) // 2) * value
    if abs(stripped.imag) > 1e-9 or stripped.real <= 0:
        raise ValueError(f"theta_hat({a},{b},{c}) is not positive real: {stripped}")
    return stripped.real


def vertex_factor(a: int, b: int, c: int, r: int) -> float:
    """Positive real vertex normalization f(a,b,c) at A = e^{i pi/2r}.

    f = sqrt( sqrt([a+1][b+1][c+1]) / theta_hat(a,b,c) ).
    """
    point = unitary_root(r)
    if not is_admissible(a, b, c, r):
        raise ValueError(f"({a},{b},{c}) is not admissible at level {r}")
    prod = (
        quantum_int(a + 1, point) * quantum_int(b + 1, point) * quantum_int(c + 1, point)
    )
    if abs(prod.imag) > 1e-9 or prod.real <= 0:
        raise ValueError("quantum-integer product is not positive real")
    radicand = math.sqrt(prod.real) / theta_hat(a, b, c, point, r)
    if radicand <= 0:
        raise ValueError("vertex factor radicand is not positive")
    return math.sqrt(radicand)


def modified_bubble_coefficient(a: int, b: int, c: int, r: int) -> float:
    """The bubble-collapse coefficient sqrt(Delta_b Delta_c / Delta_a).

    Equals (-1)^((b+c-a)/2) sqrt([b+1][c+1]/[a+1]), real for admissible
    triples.
    """
    point = unitary_root(r)
    if not is_admissible(a, b, c, r):
        raise ValueError(f"({a},{b},{c}) is not admissible at level {r}")
    qb = quantum_int(b + 1, point).real
    qc = quantum_int(c + 1, point).real
    qa = quantum_int(a + 1, point).real
    return (-1) ** ((b + c - a) // 2) * math.sqrt(qb * qc / qa)


def recoupling_matrix_element(
    a: int, b: int, c: int, d: int, i: int, j: int, r: int, mod_tet_value: complex
) -> complex:
    """Scaffold for M[a,b,c,d]_ij given an externally supplied ModTet value.

    The general tetrahedral evaluations are not computed here; only the
    2-strand case has explicit nets (see fib_recoupling_F).  The element is
    ModTet / ((-1)^((a+b+c+d)/2) sqrt([a+1][b+1][c+1][d+1])), with the
    denominator independent of i and j.
    """
    point = unitary_root(r)
    for triple in ((a, b, j), (c, d, j), (a, d, i), (b, c, i)):
        if not is_admissible(*triple, r):
            raise ValueError(f"triple {triple} is not admissible at level {r}")
    prod = 1.0
    for label in (a, b, c, d):
        prod *= quantum_int(label + 1, point).real
    denom = (-1) ** ((a + b + c + d) // 2) * math.sqrt(prod)
    return mod_tet_value / denom
