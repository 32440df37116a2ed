"""Unitary braid-group representations: quaternionic SU(2) pairs, the 2x2
Temperley-Lieb representation of B_3, and the Fibonacci model in both its
local F/R form and its action on no-consecutive-star sequences.

Basis conventions: two-dimensional Fibonacci spaces are ordered (|*>, |P>).
Sequence bases are ordered lexicographically with * before P, which puts
the all-star-allowed "vacuum-most" vector first.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .cmatrix import is_unitary, mat_dist

GOLDEN = (1 + math.sqrt(5)) / 2
FIB_POINT = cmath.exp(3j * math.pi / 5)   # bracket variable of the Fibonacci model


# -- quaternions -------------------------------------------------------------

QUAT_I = np.array([[1j, 0], [0, -1j]])
QUAT_J = np.array([[0, 1], [-1, 0]], dtype=complex)
QUAT_K = np.array([[0, 1j], [1j, 0]])


@dataclass(frozen=True)
class Quaternion:
    a: float
    b: float
    c: float
    d: float

    def to_matrix(self) -> np.ndarray:
        return self.a * np.eye(2, dtype=complex) + self.b * QUAT_I + self.c * QUAT_J + self.d * QUAT_K

    def norm(self) -> float:
        return math.sqrt(self.a ** 2 + self.b ** 2 + self.c ** 2 + self.d ** 2)

    def __mul__(self, other: Quaternion) -> Quaternion:
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    @classmethod
    def from_axis(cls, a: float, b: float, axis) -> Quaternion:
        x, y, z = axis
        return cls(a, b * x, b * y, b * z)


def quat_to_matrix(q: Quaternion) -> np.ndarray:
    return q.to_matrix()


def braid_pair_axis(theta: float, u) -> np.ndarray:
    """A unit axis v satisfying u . v = (a^2 - b^2)/(2 b^2) for g = a + b u.

    Rotates u inside a plane through an angle whose cosine is the required
    dot product; any unit vector orthogonal to u works as the rotation
    partner.
    """
    u = np.asarray(u, dtype=float)
    u = u / np.linalg.norm(u)
    a, b = math.cos(theta / 2), math.sin(theta / 2)
    if abs(b) < 1e-12:
        raise ValueError("theta = 0 gives no braiding constraint (b = 0)")
    dot = (a * a - b * b) / (2 * b * b)
    if abs(dot) > 1:
        raise ValueError(f"no admissible axis: required dot product {dot} exceeds 1")
    # orthonormal partner to u
    probe = np.array([1.0, 0.0, 0.0]) if abs(u[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    w = probe - np.dot(probe, u) * u
    w = w / np.linalg.norm(w)
    return dot * u + math.sqrt(1 - dot * dot) * w


def su2_braid_pair(theta: float, u, v) -> tuple[Quaternion, Quaternion]:
    """Braid-related pair g = a + b u, h = a + b v with a = cos(theta/2).

    The axes must satisfy u . v = (a^2 - b^2)/(2 b^2) (within 1e-10) unless
    they coincide, in which case the relation is trivial.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    for name, vec in (("u", u), ("v", v)):
        if abs(np.linalg.norm(vec) - 1) > 1e-10:
            raise ValueError(f"axis {name} must be a unit vector")
    a, b = math.cos(theta / 2), math.sin(theta / 2)
    if np.linalg.norm(u - v) > 1e-12:
        required = (a * a - b * b) / (2 * b * b)
        if abs(float(np.dot(u, v)) - required) > 1e-10:
            raise ValueError(
                f"axes violate the braiding constraint: u.v = {float(np.dot(u, v))}, need {required}"
            )
    g = Quaternion.from_axis(a, b, u)
    h = Quaternion.from_axis(a, b, v)
    return g, h


# -- representation containers ------------------------------------------------


@dataclass(frozen=True)
class RepMatrixSet:
    """Generator images of B_n; images[i] represents s_{i+1}."""

    strands: int
    images: tuple[np.ndarray, ...]
    label: str

    def image(self, letter: int) -> np.ndarray:
        gen = self.images[abs(letter) - 1]
        return gen if letter > 0 else gen.conj().T

    def word_image(self, letters) -> np.ndarray:
        dim = self.images[0].shape[0]
        out = np.eye(dim, dtype=complex)
        for x in letters:
            out = out @ self.image(x)
        return out

    def check(self, tol: float = 1e-10) -> dict[str, float]:
        """Residuals for unitarity, the braid relation, and distant commutation."""
        uni = max(
            float(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0])))) for m in self.images
        )
        braid = 0.0
        for i in range(len(self.images) - 1):
            x, y = self.images[i], self.images[i + 1]
            braid = max(braid, mat_dist(x @ y @ x, y @ x @ y))
        comm = 0.0
        for i in range(len(self.images)):
            for j in range(i + 2, len(self.images)):
                comm = max(comm, mat_dist(self.images[i] @ self.images[j], self.images[j] @ self.images[i]))
        return {"unitarity": uni, "braid_relation": braid, "commutation": comm, "tol": tol}

    def passes(self, tol: float = 1e-10) -> bool:
        res = self.check(tol)
        return max(res["unitarity"], res["braid_relation"], res["commutation"]) <= tol


# -- the 2x2 Temperley-Lieb representation of B_3 -----------------------------

UNITARY_THETA_RANGES = (
    (0.0, math.pi / 6),
    (math.pi / 3, 2 * math.pi / 3),
    (5 * math.pi / 6, 7 * math.pi / 6),
    (4 * math.pi / 3, 5 * math.pi / 3),
    (11 * math.pi / 6, 2 * math.pi),
)


def theta_is_admissible(theta: float, tol: float = 1e-12) -> bool:
    """Angles where the 2x2 representation is unitary: |cos(2 theta)| >= 1/2."""
    t = theta % (2 * math.pi)
    return abs(math.cos(2 * t)) >= 0.5 - tol


def tl_two_by_two(theta: float) -> tuple[RepMatrixSet, np.ndarray, np.ndarray]:
    """The B_3 representation Phi(s_i) = A I + A^-1 U_i at A = e^{i theta}.

    U_1 = d |w><w| with w = (1, 0); U_2 = d |v><v| with
    v = (d^-1, sqrt(1 - d^-2)) and d = -2 cos(2 theta).  Returns the
    representation and the two Temperley-Lieb images.
    """
    if not theta_is_admissible(theta):
        raise ValueError(
            f"theta = {theta} lies outside the unitary ranges "
            "[0,pi/6] u [pi/3,2pi/3] u [5pi/6,7pi/6] u [4pi/3,5pi/3] u [11pi/6,2pi]"
        )
    a = cmath.exp(1j * theta)
    d = -2 * math.cos(2 * theta)
    u1 = np.array([[d, 0], [0, 0]], dtype=complex)
    inner = 1 - d ** -2
    root = math.sqrt(max(inner, 0.0))
    u2 = np.array([[1 / d, root], [root, d - 1 / d]], dtype=complex)
    phi1 = a * np.eye(2) + (1 / a) * u1
    phi2 = a * np.eye(2) + (1 / a) * u2
    rep = RepMatrixSet(3, (phi1, phi2), f"tl-2x2 theta={theta}")
    return rep, u1, u2


# -- the Fibonacci model -------------------------------------------------------


def fibonacci_local() -> tuple[np.ndarray, np.ndarray]:
    """The recoupling matrix F and local braiding R on basis (|*>, |P>).

    F = [[tau, sqrt(tau)], [sqrt(tau), -tau]] with tau = 1/golden;
    R = diag(e^{4 pi i/5}, -e^{2 pi i/5}) at A = e^{3 pi i/5}.
    """
    tau = 1 / GOLDEN
    f = np.array([[tau, math.sqrt(tau)], [math.sqrt(tau), -tau]], dtype=complex)
    r = np.diag([cmath.exp(4j * math.pi / 5), -cmath.exp(2j * math.pi / 5)])
    return f, r


@lru_cache(maxsize=None)
def fib_basis(n: int) -> tuple[str, ...]:
    """All strings over {*, P} of length n with no two consecutive stars,
    ordered lexicographically with * before P.  Count is fib(n+1) under
    f0 = f1 = 1."""
    if n > 20:
        raise ValueError("sequence length bounded at 20")
    if n == 0:
        return ("",)
    if n == 1:
        return ("*", "P")
    out = []
    for prefix in fib_basis(n - 1):
        for ch in ("*", "P"):
            if ch == "*" and prefix.endswith("*"):
                continue
            out.append(prefix + ch)
    return tuple(sorted(out))


def fibonacci_dimension(n: int) -> int:
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def fib_tl_generator(n: int, i: int, delta: float = GOLDEN) -> np.ndarray:
    """Matrix of U_i on fib_basis(n), for the Temperley-Lieb algebra on n+2
    strands with loop value delta (1 <= i <= n+1).

    A sequence x_1..x_n is read as a chain of labels flanked by P at both
    ends and by * beyond the left flank; U_i acts at chain site i-1 (site 0
    is the left flank) conditioned on its two neighbors:

        (*,  c, *):  c is forced P, eigenvalue delta
        (*,  c, P) or (P, c, *): c is forced P, annihilated
        (P,  c, P):  two-dimensional site, delta |w><w| with
                     w = (1/delta, b) on (c = *, c = P), b = sqrt(1 - 1/delta^2)

    The published right-end action P* -> 0 breaks U_i^2 = delta U_i; the
    pattern rule above restores all the algebra relations, matching the
    two-dimensional case U_2 = [[a, b], [b, delta b^2]].
    """
    if not 1 <= i <= n + 1:
        raise ValueError(f"generator index {i} out of range for sequences of length {n}")
    if 1 - 1 / delta ** 2 < 0:
        raise ValueError("loop value must satisfy 1 - 1/delta^2 >= 0")
    a = 1 / delta
    b = math.sqrt(1 - a * a)
    basis = fib_basis(n)
    index = {s: k for k, s in enumerate(basis)}
    dim = len(basis)
    m = np.zeros((dim, dim), dtype=complex)

    site = i - 1  # chain site acted on; chain = (*,) + (P,) + x + (P,)
    for col, seq in enumerate(basis):
        chain = "*P" + seq + "P"
        pos = site + 1  # index into chain of the acted-on label
        left, mid, right = chain[pos - 1], chain[pos], chain[pos + 1]
        if left == "*" and right == "*":
            m[col, col] += delta
        elif left == "*" or right == "*":
            continue  # annihilated
        else:
            # both neighbors P: genuine two-dimensional site inside the sequence
            # (the flank site i = 1 always has a * to its left, so pos >= 2 here)
            seq_pos = pos - 2  # position inside the bare sequence
            flipped = seq[:seq_pos] + ("P" if mid == "*" else "*") + seq[seq_pos + 1:]
            w_mid = a if mid == "*" else b
            for other_mid, target in ((mid, seq), ("P" if mid == "*" else "*", flipped)):
                if target not in index:
                    continue
                w_other = a if other_mid == "*" else b
                m[index[target], col] += delta * w_mid * w_other
    return m


def fib_braid_rep(n: int) -> RepMatrixSet:
    """Unitary braid images rho(s_i) = A I + A^-1 U_i on fib_basis(n),
    A = e^{3 pi i/5}."""
    a = FIB_POINT
    dim = fibonacci_dimension(n + 1)
    images = []
    for i in range(1, n + 2):
        u = fib_tl_generator(n, i)
        images.append(a * np.eye(dim, dtype=complex) + (1 / a) * u)
    return RepMatrixSet(n + 2, tuple(images), f"fibonacci chain n={n}")


def golden_consistency_exact() -> bool:
    """delta^2 b^4 = 1 at delta = golden ratio, checked exactly in Q(sqrt 5).

    With delta = (1 + sqrt5)/2 and b^2 = 1 - delta^-2, the quantity
    delta^2 b^4 equals (delta - 1/delta)^2; membership of the golden ratio
    in x^2 = x + 1 makes this exactly 1.
    """
    # numbers p + q sqrt5 with Fraction coordinates
    def mul(x, y):
        return (x[0] * y[0] + 5 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])

    def sub(x, y):
        return (x[0] - y[0], x[1] - y[1])

    delta = (Fraction(1, 2), Fraction(1, 2))
    # 1/delta = delta - 1 since delta^2 = delta + 1
    inv_delta = sub(delta, (Fraction(1), Fraction(0)))
    diff = sub(delta, inv_delta)
    square = mul(diff, diff)
    return square == (Fraction(1), Fraction(0))


# -- density smoke test --------------------------------------------------------


def _su2_distance(u: np.ndarray, v: np.ndarray) -> float:
    """Projective operator distance (global phase modded out by sign)."""
    return min(float(np.max(np.abs(u - v))), float(np.max(np.abs(u + v))))


def haar_su2(rng: np.random.Generator) -> np.ndarray:
    q = rng.normal(size=4)
    q /= np.linalg.norm(q)
    return Quaternion(*q).to_matrix()


def density_smoke(rep: RepMatrixSet, depth: int, targets: int = 100, seed: int = 7,
                  resolution: float = 1e-3, cap: int = 200_000) -> float:
    """Covering radius of words of length <= depth against Haar-random targets.

    Breadth-first enumeration over the generators and their inverses with
    deduplication at the given resolution.  A shrinking radius is evidence
    (not proof) of density; commuting generator sets plateau instead.
    """
    if rep.images[0].shape != (2, 2):
        raise ValueError("density smoke test is defined for 2x2 representations")
    rng = np.random.default_rng(seed)
    goals = [haar_su2(rng) for _ in range(targets)]

    gens = []
    for m in rep.images:
        gens.append(m)
        gens.append(m.conj().T)

    def key(m: np.ndarray) -> tuple:
        z = (m / cmath.exp(1j * cmath.phase(m[0, 0]) if abs(m[0, 0]) > 1e-8 else 1)).round(
            int(-math.log10(resolution))
        )
        return tuple(np.concatenate([z.real.ravel(), z.imag.ravel()]))

    frontier = [np.eye(2, dtype=complex)]
    seen = {key(frontier[0])}
    points = [frontier[0]]
    for _ in range(depth):
        nxt = []
        for m in frontier:
            for g in gens:
                cand = m @ g
                k = key(cand)
                if k in seen:
                    continue
                seen.add(k)
                nxt.append(cand)
                if len(points) + len(nxt) >= cap:
                    break
        frontier = nxt
        points.extend(nxt)
        if not frontier or len(points) >= cap:
            break

    stack = np.stack(points)
    radius = 0.0
    for goal in goals:
        d1 = np.max(np.abs(stack - goal), axis=(1, 2))
        d2 = np.max(np.abs(stack + goal), axis=(1, 2))
        radius = max(radius, float(np.min(np.minimum(d1, d2))))
    return radius
