"""Laws-of-Form mark calculus, iterant algebra, and the nilpotent Dirac check.

Mark expressions are ordered forests written with angle brackets:
expr := mark* ; mark := '<' expr '>'.  The two rewrite rules are
calling (<><> -> <>) and crossing (<<>> -> nothing); every expression
reduces to Marked (<>) or Unmarked (empty).

Iterants are pairs [a, b] with a period-two shift eta obeying
[a,b] eta = eta [b,a] and eta^2 = 1; they generate the full 2x2 matrix
algebra via [a,b] -> diag(a,b), eta -> the off-diagonal flip.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

# a mark expression is a tuple of nodes; each node is itself a tuple (its contents)
MarkExpr = tuple


class LofValue(enum.Enum):
    MARKED = "marked"
    UNMARKED = "unmarked"


def lof_parse(text: str) -> MarkExpr:
    """Parse an angle-bracket expression; whitespace is ignored."""
    stack: list[list] = [[]]
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        if ch == "<":
            stack.append([])
        elif ch == ">":
            if len(stack) == 1:
                raise ValueError(f"unbalanced '>' at position {pos}")
            done = stack.pop()
            stack[-1].append(_freeze(done))
        else:
            raise ValueError(f"unexpected character {ch!r} at position {pos}")
    if len(stack) != 1:
        raise ValueError(f"unclosed '<' ({len(stack) - 1} still open at end of input)")
    return _freeze(stack[0])


def _freeze(nodes: list) -> tuple:
    return tuple(nodes)


def lof_render(e: MarkExpr) -> str:
    return "".join("<" + lof_render(child) + ">" for child in e)


def mark_count(e: MarkExpr) -> int:
    return sum(1 + mark_count(child) for child in e)


def _depth_of_deepest(e: MarkExpr) -> int:
    if not e:
        return 0
    return 1 + max(_depth_of_deepest(child) for child in e)


def _reduce_deepest_once(e: MarkExpr) -> MarkExpr | None:
    """Apply one calling/crossing step at a deepest mark; None if irreducible."""
    target = _depth_of_deepest(e)

    def rewrite(forest: MarkExpr, depth: int) -> MarkExpr | None:
        if depth + 1 == target:
            # deepest marks live directly in this forest and are empty
            empties = [i for i, child in enumerate(forest) if not child]
            if len(empties) >= 2 and len(forest) >= 2:
                i = empties[1]
                return forest[:i] + forest[i + 1:]      # calling: drop a twin mark
            if len(forest) == 1 and not forest[0]:
                return "CROSS"                           # crossing: caller deletes the mark
        for i, child in enumerate(forest):
            result = rewrite(child, depth + 1)
            if result == "CROSS":
                return forest[:i] + forest[i + 1:]
            if result is not None:
                return forest[:i] + (result,) + forest[i + 1:]
        return None

    # top-level calling between empty roots
    if target == 1:
        empties = [i for i, child in enumerate(e) if not child]
        if len(empties) >= 2:
            i = empties[1]
            return e[:i] + e[i + 1:]
    result = rewrite(e, 0)
    if result == "CROSS":
        # a lone nested <<>> at the roots: rewrite on the root forest signalled
        # removal of the enclosing mark, which cannot happen at depth 0
        raise AssertionError("unreachable")
    return result


def _reduce_leftmost_once(e: MarkExpr) -> MarkExpr | None:
    """Apply one step at the leftmost outermost redex; None if irreducible."""

    def rewrite(forest: MarkExpr) -> MarkExpr | None:
        for i, child in enumerate(forest):
            # crossing: a mark whose content is a single empty mark
            if len(child) == 1 and not child[0]:
                return forest[:i] + forest[i + 1:]
            # calling: two adjacent empty marks
            if not child and i + 1 < len(forest) and not forest[i + 1]:
                return forest[:i] + forest[i + 1:]
            inner = rewrite(child)
            if inner is not None:
                return forest[:i] + (inner,) + forest[i + 1:]
        return None

    return rewrite(e)


def lof_reduce(e: MarkExpr, strategy: str = "deepest") -> LofValue:
    """Reduce to Marked or Unmarked by repeated calling/crossing steps."""
    step = _reduce_deepest_once if strategy == "deepest" else _reduce_leftmost_once
    current = e
    while True:
        if current == ():
            return LofValue.UNMARKED
        if current == ((),):
            return LofValue.MARKED
        nxt = step(current)
        if nxt is None:
            # fully reduced forests are only () or (<>,); several empty marks
            # still admit calling, so reaching here means a logic error
            raise AssertionError(f"stuck expression: {lof_render(current)}")
        current = nxt


def lof_boolean_oracle(e: MarkExpr) -> LofValue:
    """Independent evaluation by the Boolean reading: a mark negates its
    contents, juxtaposition is OR, the empty expression is false."""

    def value(forest: MarkExpr) -> bool:
        return any(not value(child) for child in forest)

    return LofValue.MARKED if value(e) else LofValue.UNMARKED


def enumerate_expressions(max_marks: int) -> list[MarkExpr]:
    """All expressions with at most max_marks marks (ordered forests)."""
    forests_by_size: list[list[MarkExpr]] = [[()]]
    for size in range(1, max_marks + 1):
        acc: list[MarkExpr] = []
        # first mark contains k nodes, remaining forest has size-1-k nodes
        for k in range(size):
            for inside in forests_by_size[k]:
                for rest in forests_by_size[size - 1 - k]:
                    acc.append((inside,) + rest)
        forests_by_size.append(acc)
    out: list[MarkExpr] = []
    for group in forests_by_size:
        out.extend(group)
    return out


# -- iterants ----------------------------------------------------------------


@dataclass(frozen=True)
class Iterant:
    """[p, q] + [r, s] eta with complex components."""

    p: complex = 0
    q: complex = 0
    r: complex = 0
    s: complex = 0

    @classmethod
    def diag(cls, p: complex, q: complex) -> Iterant:
        return cls(p, q, 0, 0)

    @classmethod
    def shift(cls) -> Iterant:
        return cls(0, 0, 1, 1)

    @classmethod
    def e(cls) -> Iterant:
        return cls(1, -1, 0, 0)

    @classmethod
    def i(cls) -> Iterant:
        """The iterant square root of minus one, [1,-1] eta."""
        return cls(0, 0, 1, -1)

    def __add__(self, other: Iterant) -> Iterant:
        return Iterant(self.p + other.p, self.q + other.q, self.r + other.r, self.s + other.s)

    def __sub__(self, other: Iterant) -> Iterant:
        return Iterant(self.p - other.p, self.q - other.q, self.r - other.r, self.s - other.s)

    def scale(self, z: complex) -> Iterant:
        return Iterant(z * self.p, z * self.q, z * self.r, z * self.s)

    def __mul__(self, other: Iterant) -> Iterant:
        # ([a,b] + [c,d]e)([f,g] + [h,k]e) with e the shift:
        # e[f,g] = [g,f]e and e[h,k]e = [k,h]
        a, b, c, d = self.p, self.q, self.r, self.s
        f, g, h, k = other.p, other.q, other.r, other.s
        return Iterant(
            a * f + c * k,
            b * g + d * h,
            a * h + c * g,
            b * k + d * f,
        )

    def dagger(self) -> Iterant:
        """Conjugate transpose through the matrix picture."""
        m = self.to_matrix().conj().T
        return Iterant.from_matrix(m)

    def to_matrix(self) -> np.ndarray:
        return np.array([[self.p, self.r], [self.s, self.q]], dtype=complex)

    @classmethod
    def from_matrix(cls, m) -> Iterant:
        return cls(complex(m[0, 0]), complex(m[1, 1]), complex(m[0, 1]), complex(m[1, 0]))

    def close_to(self, other: Iterant, tol: float = 1e-12) -> bool:
        pairs = zip((self.p, self.q, self.r, self.s), (other.p, other.q, other.r, other.s))
        return all(abs(x - y) <= tol for x, y in pairs)


def iterant_mul(x: Iterant, y: Iterant) -> Iterant:
    return x * y


def iterant_quaternions() -> tuple[Iterant, Iterant, Iterant]:
    """I = ba, J = cb, K = ac from the Majorana triple a = e, b = eta, c = i e eta."""
    a = Iterant.e()
    b = Iterant.shift()
    c = (a * b).scale(1j)
    return b * a, c * b, a * c


# -- nilpotent Dirac construction --------------------------------------------

E_MATRIX = np.array([[-1.0, 0.0], [0.0, 1.0]], dtype=complex)
ETA_MATRIX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)


@dataclass(frozen=True)
class NilpotentCheck:
    operator: np.ndarray
    algebra_residual: float
    squared_norm: float


def _nilpotent_report(u: np.ndarray, energy: float, momentum: float, mass: float) -> NilpotentCheck:
    target = (-energy ** 2 + momentum ** 2 + mass ** 2) * np.eye(2)
    residual = float(np.max(np.abs(u @ u - target)))
    squared = float(np.max(np.abs(u @ u)))
    return NilpotentCheck(u, residual, squared)


def dirac_nilpotent(energy: float, momentum: float, mass: float) -> NilpotentCheck:
    """U = beta alpha E + beta p + alpha m with alpha = diag(-1,1), beta the flip.

    U^2 = (-E^2 + p^2 + m^2) I as an exact algebra identity; on shell the
    squared norm vanishes.
    """
    alpha, beta = E_MATRIX, ETA_MATRIX
    u = beta @ alpha * energy + beta * momentum + alpha * mass
    return _nilpotent_report(u, energy, momentum, mass)


def rowland_u(energy: float, momentum: float, mass: float) -> NilpotentCheck:
    """Majorana-representation nilpotent U = -i eta E + i e eta p + e m."""
    e, eta = E_MATRIX, ETA_MATRIX
    u = -1j * eta * energy + 1j * (e @ eta) * momentum + e * mass
    return _nilpotent_report(u, energy, momentum, mass)
