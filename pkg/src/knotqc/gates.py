"""Yang-Baxter solutions as two-qubit gates, universality via entanglement,
explicit CNOT factorizations, and the CHSH quantity.

All matrices act on the basis |00>, |01>, |10>, |11> with the first tensor
factor most significant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cmatrix import is_unitary, mat_dist, mat_tensor

SQRT2 = math.sqrt(2)

HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / SQRT2

BELL_BASIS_R = np.array(
    [
        [1, 0, 0, 1],
        [0, 1, -1, 0],
        [0, 1, 1, 0],
        [-1, 0, 0, 1],
    ],
    dtype=complex,
) / SQRT2

SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)

CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
)

PHASE_D = np.diag([1, 1, 1, -1]).astype(complex)

R0 = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, -1]], dtype=complex
)


def r_prime(a: complex, b: complex, c: complex, d: complex) -> np.ndarray:
    """The swap-like Yang-Baxter family with unit-modulus parameters."""
    return np.array(
        [[a, 0, 0, 0], [0, 0, b, 0], [0, c, 0, 0], [0, 0, 0, d]], dtype=complex
    )


def r_double_prime(a: complex, b: complex, c: complex, d: complex) -> np.ndarray:
    """The anti-diagonal Yang-Baxter family with unit-modulus parameters."""
    return np.array(
        [[0, 0, 0, a], [0, b, 0, 0], [0, 0, c, 0], [d, 0, 0, 0]], dtype=complex
    )


def ybe_check(r: np.ndarray, algebraic: bool = False, tol: float = 1e-12) -> bool:
    """Braided Yang-Baxter test (R x I)(I x R)(R x I) = (I x R)(R x I)(I x R).

    With algebraic=True the matrix is composed with the swap first (algebraic
    solutions are exactly the swap-composites of braided ones).
    """
    if r.shape != (4, 4):
        raise ValueError("Yang-Baxter check expects a 4x4 matrix")
    m = r @ SWAP if algebraic else r
    eye = np.eye(2, dtype=complex)
    left = mat_tensor(m, eye) @ mat_tensor(eye, m) @ mat_tensor(m, eye)
    right = mat_tensor(eye, m) @ mat_tensor(m, eye) @ mat_tensor(eye, m)
    return mat_dist(left, right) <= tol


@dataclass(frozen=True)
class TwoQubitState:
    a: complex
    b: complex
    c: complex
    d: complex

    def vector(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c, self.d], dtype=complex)

    def norm(self) -> float:
        return float(np.linalg.norm(self.vector()))

    @classmethod
    def from_vector(cls, v) -> TwoQubitState:
        v = np.asarray(v, dtype=complex).ravel()
        return cls(*v)

    @classmethod
    def product(cls, first, second) -> TwoQubitState:
        return cls.from_vector(np.kron(np.asarray(first, complex), np.asarray(second, complex)))


def is_entangled(state: TwoQubitState, tol: float = 1e-10) -> bool:
    """Tensor indecomposability criterion ad - bc != 0 for normalized states."""
    if abs(state.norm() - 1) > 1e-8:
        raise ValueError("entanglement criterion expects a normalized state")
    return abs(state.a * state.d - state.b * state.c) > tol


def is_entangling(gate: np.ndarray, tol: float = 1e-10, samples: int = 100, seed: int = 11) -> bool:
    """Brylinski universality surrogate: search product states whose image is
    entangled, over a fixed grid plus random product states."""
    rng = np.random.default_rng(seed)
    probes = []
    angles = np.linspace(0, math.pi, 5)
    for t1 in angles:
        for t2 in angles[:4]:
            q1 = np.array([math.cos(t1), math.sin(t1)], dtype=complex)
            q2 = np.array([math.cos(t2), math.sin(t2) * 1j], dtype=complex)
            probes.append(np.kron(q1, q2))
    for _ in range(samples):
        q1 = rng.normal(size=2) + 1j * rng.normal(size=2)
        q2 = rng.normal(size=2) + 1j * rng.normal(size=2)
        probes.append(np.kron(q1 / np.linalg.norm(q1), q2 / np.linalg.norm(q2)))
    for probe in probes:
        image = TwoQubitState.from_vector(gate @ probe)
        if abs(image.a * image.d - image.b * image.c) > tol:
            return True
    return False


@dataclass(frozen=True)
class FactorizationReport:
    name: str
    distance: float
    gate_is_ybe: bool
    gate_entangling: bool
    locals_unitary: bool

    @property
    def passed(self) -> bool:
        return self.distance <= 1e-12 and self.locals_unitary


def cnot_from_phase() -> FactorizationReport:
    """CNOT = Q D Q with the Hadamard acting on the target qubit.

    Q is the block matrix diag(H, H); under the most-significant-first
    tensor convention used here that is I (x) H (the source text calls it
    H (x) I while displaying exactly this block matrix).
    """
    q = mat_tensor(np.eye(2, dtype=complex), HADAMARD)
    product = q @ PHASE_D @ q
    return FactorizationReport(
        name="QDQ",
        distance=mat_dist(product, CNOT),
        gate_is_ybe=ybe_check(PHASE_D, algebraic=True),
        gate_entangling=is_entangling(PHASE_D),
        locals_unitary=is_unitary(q),
    )


def cnot_from_r0() -> FactorizationReport:
    """CNOT = (lambda (x) mu)(R0 (I (x) sigma) R0)(H (x) H)."""
    sigma = np.array([[1, 1j], [1j, 1]], dtype=complex) / SQRT2
    lam = np.array([[1, 1], [1j, -1j]], dtype=complex) / SQRT2
    mu = np.array([[(1 - 1j) / 2, (1 + 1j) / 2], [(1 - 1j) / 2, (-1 - 1j) / 2]], dtype=complex)
    product = (
        mat_tensor(lam, mu)
        @ (R0 @ mat_tensor(np.eye(2, dtype=complex), sigma) @ R0)
        @ mat_tensor(HADAMARD, HADAMARD)
    )
    locals_ok = all(is_unitary(m) for m in (sigma, lam, mu, HADAMARD))
    return FactorizationReport(
        name="R0",
        distance=mat_dist(product, CNOT),
        gate_is_ybe=ybe_check(R0),
        gate_entangling=is_entangling(R0),
        locals_unitary=locals_ok,
    )


def cnot_from_bell_r() -> FactorizationReport:
    """CNOT = M R N with M = alpha (x) beta, N = gamma (x) delta."""
    alpha = np.array([[1, 1], [1, -1]], dtype=complex) / SQRT2
    beta = np.array([[-1, 1], [1j, 1j]], dtype=complex) / SQRT2
    gamma = np.array([[1, 1j], [1, -1j]], dtype=complex) / SQRT2
    delta = np.diag([-1, -1j]).astype(complex)
    m = mat_tensor(alpha, beta)
    n = mat_tensor(gamma, delta)
    product = m @ BELL_BASIS_R @ n
    locals_ok = all(is_unitary(x) for x in (alpha, beta, gamma, delta))
    return FactorizationReport(
        name="MRN",
        distance=mat_dist(product, CNOT),
        gate_is_ybe=ybe_check(BELL_BASIS_R),
        gate_entangling=is_entangling(BELL_BASIS_R),
        locals_unitary=locals_ok,
    )


# -- CHSH ---------------------------------------------------------------------

OBS_Q = np.array([[1, 0], [0, -1]], dtype=complex)
OBS_R = np.array([[0, 1], [1, 0]], dtype=complex)
OBS_S = np.array([[-1, -1], [-1, 1]], dtype=complex) / SQRT2
OBS_T = np.array([[1, -1], [-1, -1]], dtype=complex) / SQRT2


def chsh_delta(state: TwoQubitState) -> tuple[float, float]:
    """CHSH quantity: (closed-form value, direct expectation value).

    The closed form (2 - 4(a+d)^2 + 4(ad-bc))/sqrt(2) assumes real
    amplitudes; the direct path evaluates <QS> + <RS> + <RT> - <QT> with the
    first-factor observables Q, R and second-factor observables S, T and is
    valid for any normalized state.
    """
    v = state.vector()
    if abs(np.linalg.norm(v) - 1) > 1e-8:
        raise ValueError("CHSH expects a normalized state")
    a, b, c, d = state.a, state.b, state.c, state.d
    formula = float(
        (2 - 4 * abs(a + d) ** 2 + 4 * (a * d - b * c).real) / SQRT2
    ) if max(abs(a.imag), abs(b.imag), abs(c.imag), abs(d.imag)) < 1e-12 else float("nan")

    def expect(first, second) -> float:
        op = mat_tensor(first, second)
        return float((v.conj() @ op @ v).real)

    direct = expect(OBS_Q, OBS_S) + expect(OBS_R, OBS_S) + expect(OBS_R, OBS_T) - expect(OBS_Q, OBS_T)
    return formula, direct
