"""Dense complex matrix helpers shared by the representation and gate modules.

Backed by numpy complex128 arrays.  The tensor product uses the convention
(a (x) b)[i*p+k, j*q+l] = a[i,j] * b[k,l], i.e. the first factor is the most
significant index, matching the qubit basis order |00>, |01>, |10>, |11>.
Intended scale is small (dimension at most about 2^10); there is no sparse
path.
"""

from __future__ import annotations

import numpy as np

ComplexMatrix = np.ndarray


def mat(rows) -> ComplexMatrix:
    m = np.array(rows, dtype=complex)
    if m.ndim != 2:
        raise ValueError("matrix data must be two-dimensional")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def identity(n: int) -> ComplexMatrix:
    return np.eye(n, dtype=complex)


def mat_mul(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    return a @ b


def mat_tensor(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    return np.kron(a, b)


def mat_dagger(a: ComplexMatrix) -> ComplexMatrix:
    return a.conj().T


def mat_trace(a: ComplexMatrix) -> complex:
    if a.shape[0] != a.shape[1]:
        raise ValueError("trace needs a square matrix")
    return complex(np.trace(a))


def mat_dist(a: ComplexMatrix, b: ComplexMatrix) -> float:
    """Entrywise max-abs distance."""
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.max(np.abs(a - b))) if a.size else 0.0


def is_unitary(a: ComplexMatrix, tol: float = 1e-12) -> bool:
    if a.shape[0] != a.shape[1]:
        raise ValueError("unitarity is defined for square matrices")
    return mat_dist(a.conj().T @ a, np.eye(a.shape[0], dtype=complex)) <= tol
