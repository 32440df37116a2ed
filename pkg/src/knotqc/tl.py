"""The Temperley-Lieb diagram algebra TL_n and Jones-Wenzl projectors.

A diagram on n strands is a planar perfect matching of 2n boundary points:
bottom points 0..n-1 read left to right, top points n..2n-1 read right to
left (point 2n-1 sits above point 0).  Walking 0,1,...,2n-1 then traverses
the disk boundary once, so a matching is planar exactly when that walk is a
balanced bracket sequence.

Elements are formal combinations of diagrams with either LaurentPoly
coefficients (symbolic mode) or complex coefficients (numeric mode); the
two modes never mix inside one element.  Composition x * y stacks x above
y and converts every closed middle loop into a factor of the loop value
delta = -A^2 - A^-2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .laurent import LaurentPoly

MAX_ENUMERATE_STRANDS = 12


@dataclass(frozen=True)
class TLDiagram:
    n: int
    pairing: tuple[int, ...]

    def __post_init__(self):
        pts = 2 * self.n
        if len(self.pairing) != pts:
            raise ValueError("pairing length must be 2n")
        for i, j in enumerate(self.pairing):
            if not 0 <= j < pts or j == i or self.pairing[j] != i:
                raise ValueError("pairing must be a fixed-point-free involution")
        if not _is_planar(self.pairing):
            raise ValueError("pairing is not planar")

    def top_lane(self, lane: int) -> int:
        """Boundary point index of the top endpoint in the given lane."""
        return 2 * self.n - 1 - lane

    def __str__(self) -> str:
        open_for = {}
        out = []
        label = 0
        for i in range(2 * self.n):
            if self.pairing[i] > i:
                open_for[i] = label
                out.append(f"({label}")
                label += 1
            else:
                out.append(f"{open_for[self.pairing[i]]})")
        return " ".join(out)


def _is_planar(pairing: tuple[int, ...]) -> bool:
    stack: list[int] = []
    for i in range(len(pairing)):
        if pairing[i] > i:
            stack.append(pairing[i])
        else:
            if not stack or stack.pop() != i:
                return False
    return True


def identity_diagram(n: int) -> TLDiagram:
    return TLDiagram(n, tuple(2 * n - 1 - i for i in range(2 * n)))


def generator_diagram(n: int, i: int) -> TLDiagram:
    """The cup-cap diagram U_i (1-based strand index, 1 <= i <= n-1)."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for TL_{n}")
    pairing = list(2 * n - 1 - k for k in range(2 * n))
    a, b = i - 1, i  # lanes joined at the bottom
    pairing[a], pairing[b] = b, a
    ta, tb = 2 * n - 1 - a, 2 * n - 1 - b
    pairing[ta], pairing[tb] = tb, ta
    return TLDiagram(n, tuple(pairing))


def compose_diagrams(x: TLDiagram, y: TLDiagram) -> tuple[TLDiagram, int]:
    """Stack x above y; return the composite and the closed-loop count.

    Nodes 0..2n-1 are x's points, 2n..4n-1 are y's shifted by 2n; x's bottom
    lane i is glued to y's top lane i.  Result boundary: x's top and y's
    bottom.  Unvisited interface nodes after all boundary walks lie on
    closed loops.
    """
    if x.n != y.n:
        raise ValueError("cannot compose diagrams with different strand counts")
    n = x.n
    P = 2 * n

    def pair_step(v: int) -> int:
        return x.pairing[v] if v < P else P + y.pairing[v - P]

    def iface(v: int) -> int:
        if v < n:                      # x bottom lane v -> y top lane v
            return P + (P - 1 - v)
        return P - 1 - (v - P)          # y top point -> x bottom lane

    def is_boundary(v: int) -> bool:
        return n <= v < P or P <= v < P + n

    def res_index(v: int) -> int:
        return v if v < P else v - P    # x top keeps its index, y bottom shifts

    visited: set[int] = set()
    result = [-1] * P
    for b in list(range(n, P)) + list(range(P, P + n)):
        if b in visited:
            continue
        visited.add(b)
        v = pair_step(b)
        visited.add(v)
        while not is_boundary(v):
            v = iface(v)
            visited.add(v)
            v = pair_step(v)
            visited.add(v)
        i, j = res_index(b), res_index(v)
        result[i], result[j] = j, i

    loops = 0
    for v0 in range(2 * P):
        if v0 in visited or is_boundary(v0):
            continue
        loops += 1
        v = v0
        while v not in visited:
            visited.add(v)
            w = pair_step(v)
            visited.add(w)
            v = iface(w)
    return TLDiagram(n, tuple(result)), loops


def diagram_trace_loops(d: TLDiagram) -> int:
    """Loop count of the trace closure (top lane i joined to bottom lane i)."""
    seen = set()
    loops = 0
    for start in range(2 * d.n):
        if start in seen:
            continue
        loops += 1
        p = start
        while p not in seen:
            seen.add(p)
            q = d.pairing[p]
            seen.add(q)
            p = 2 * d.n - 1 - q  # closure arc to the same lane's other end
    return loops


class TLElement:
    """Formal combination of TL diagrams sharing one strand count."""

    __slots__ = ("n", "combo")

    def __init__(self, n: int, combo: dict[TLDiagram, object] | None = None):
        self.n = n
        clean: dict[TLDiagram, object] = {}
        if combo:
            for diag, coeff in combo.items():
                if diag.n != n:
                    raise ValueError("diagram strand count mismatch")
                if _is_zero_coeff(coeff):
                    continue
                clean[diag] = coeff
        self.combo = clean

    @property
    def mode(self) -> str:
        for coeff in self.combo.values():
            return "symbolic" if isinstance(coeff, LaurentPoly) else "numeric"
        return "empty"

    def scale(self, factor) -> TLElement:
        _check_modes(factor, *self.combo.values())
        return TLElement(self.n, {d: _mul_coeff(c, factor) for d, c in self.combo.items()})

    def __add__(self, other: TLElement) -> TLElement:
        if self.n != other.n:
            raise ValueError("strand count mismatch")
        _check_modes(*self.combo.values(), *other.combo.values())
        combo = dict(self.combo)
        for d, c in other.combo.items():
            combo[d] = _add_coeff(combo.get(d), c)
        return TLElement(self.n, combo)

    def __sub__(self, other: TLElement) -> TLElement:
        return self + other.scale(_neg_one_like(other))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TLElement):
            return NotImplemented
        return self.n == other.n and self.combo == other.combo

    def __repr__(self) -> str:
        if not self.combo:
            return f"TLElement({self.n}, 0)"
        parts = [f"({coeff})*[{diag}]" for diag, coeff in self.combo.items()]
        return " + ".join(parts)


def _is_zero_coeff(c) -> bool:
    if isinstance(c, LaurentPoly):
        return c.is_zero()
    return c == 0


def _add_coeff(a, b):
    if a is None:
        return b
    return a + b


def _mul_coeff(a, b):
    return a * b


def _neg_one_like(element: TLElement):
    return LaurentPoly.monomial(0, -1) if element.mode == "symbolic" else -1.0


def _check_modes(*coeffs) -> None:
    kinds = {isinstance(c, LaurentPoly) for c in coeffs if c is not None}
    if len(kinds) > 1:
        raise TypeError("symbolic and numeric coefficients cannot mix in one element")


def tl_identity(n: int, numeric: bool = False) -> TLElement:
    one = 1 + 0j if numeric else LaurentPoly.one()
    return TLElement(n, {identity_diagram(n): one})


def tl_generator(n: int, i: int, numeric: bool = False) -> TLElement:
    one = 1 + 0j if numeric else LaurentPoly.one()
    return TLElement(n, {generator_diagram(n, i): one})


def tl_mul(x: TLElement, y: TLElement, delta=None) -> TLElement:
    """Bilinear composition; closed loops become factors of the loop value.

    In symbolic mode delta defaults to -A^2 - A^-2; numeric mode requires an
    explicit complex delta (or elements built at a fixed evaluation point).
    """
    if x.n != y.n:
        raise ValueError("strand count mismatch")
    modes = {x.mode, y.mode} - {"empty"}
    if len(modes) > 1:
        raise TypeError("cannot multiply symbolic by numeric elements")
    symbolic = modes == {"symbolic"} or (not modes and delta is None)
    if delta is None:
        if not symbolic:
            raise ValueError("numeric multiplication needs an explicit loop value")
        delta = LaurentPoly.loop_delta()
    combo: dict[TLDiagram, object] = {}
    for dx, cx in x.combo.items():
        for dy, cy in y.combo.items():
            diag, loops = compose_diagrams(dx, dy)
            coeff = _mul_coeff(cx, cy)
            for _ in range(loops):
                coeff = _mul_coeff(coeff, delta)
            combo[diag] = _add_coeff(combo.get(diag), coeff)
    return TLElement(x.n, combo)


@lru_cache(maxsize=None)
def _enumerate_pairings(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)

    # recursive split: point 0 pairs across an even-length inside segment
    def gen(points: tuple[int, ...]):
        if not points:
            yield ()
            return
        first = points[0]
        for k in range(1, len(points), 2):
            partner = points[k]
            for inner in gen(points[1:k]):
                for outer in gen(points[k + 1:]):
                    yield ((first, partner),) + inner + outer

    all_points = tuple(range(2 * n))
    out = []
    for chords in gen(all_points):
        p = [-1] * (2 * n)
        for i, j in chords:
            p[i], p[j] = j, i
        out.append(tuple(p))
    return tuple(out)


def tl_enumerate(n: int) -> list[TLDiagram]:
    """All planar diagrams in TL_n; the count is the n-th Catalan number."""
    if n > MAX_ENUMERATE_STRANDS:
        raise ValueError(f"diagram enumeration bounded at n = {MAX_ENUMERATE_STRANDS}")
    return [TLDiagram(n, p) for p in _enumerate_pairings(n)]


def tl_embed(x: TLElement, n: int, offset: int) -> TLElement:
    """Embed an element of TL_k into TL_n acting on lanes offset..offset+k-1."""
    k = x.n
    if offset < 0 or offset + k > n:
        raise ValueError("embedding window out of range")
    combo = {}
    for diag, coeff in x.combo.items():
        pairing = [-1] * (2 * n)

        def to_big(p: int) -> int:
            if p < k:
                return offset + p
            lane = 2 * k - 1 - p
            return 2 * n - 1 - (offset + lane)

        for p in range(2 * k):
            pairing[to_big(p)] = to_big(diag.pairing[p])
        for lane in range(n):
            if not offset <= lane < offset + k:
                pairing[lane] = 2 * n - 1 - lane
                pairing[2 * n - 1 - lane] = lane
        combo[TLDiagram(n, tuple(pairing))] = coeff
    return TLElement(n, combo)


def jones_wenzl(n: int, point: complex) -> TLElement:
    """Numeric Jones-Wenzl projector p_n at the bracket variable `point`.

    Built by the Wenzl recursion p_{k+1} = p_k - (Delta_{k-1}/Delta_k)
    p_k U_k p_k; requires the quantum integers [k] to be nonzero for k <= n.
    """
    from .recoupling import delta_n, quantum_int

    for k in range(2, n + 1):
        if abs(quantum_int(k, point)) < 1e-9:
            raise ValueError(f"quantum integer [{k}] vanishes at this evaluation point")
    delta = complex(LaurentPoly.loop_delta().eval(point))
    proj = tl_identity(1, numeric=True)
    for k in range(1, n):
        big = tl_embed(proj, k + 1, 0)
        ratio = delta_n(k - 1, point) / delta_n(k, point)
        u = tl_generator(k + 1, k, numeric=True)
        correction = tl_mul(tl_mul(big, u, delta), big, delta).scale(-ratio)
        proj = big + correction
    return proj


def tl_closure(x: TLElement):
    """Symbolic trace closure normalized so a single loop evaluates to 1.

    Each diagram contributes delta^(loops-1), matching the bracket
    normalization <unknot> = 1.  Numeric elements carry no evaluation point
    of their own; close those with tl_closure_numeric.
    """
    if x.mode == "numeric":
        raise TypeError("use tl_closure_numeric for numeric elements")
    delta = LaurentPoly.loop_delta()
    total = LaurentPoly.zero()
    for diag, coeff in x.combo.items():
        total = total + coeff * delta ** (diagram_trace_loops(diag) - 1)
    return total


def tl_closure_numeric(x: TLElement, delta: complex, normalized: bool = True) -> complex:
    """Numeric trace closure; normalized=False keeps every loop as a delta."""
    total = 0j
    shift = 1 if normalized else 0
    for diag, coeff in x.combo.items():
        total += complex(coeff) * delta ** (diagram_trace_loops(diag) - shift)
    return total


def tl_closure_raw(x: TLElement):
    """Symbolic trace closure with every loop contributing delta."""
    if x.mode == "numeric":
        raise TypeError("use tl_closure_numeric for numeric elements")
    delta = LaurentPoly.loop_delta()
    total = LaurentPoly.zero()
    for diag, coeff in x.combo.items():
        total = total + coeff * delta ** diagram_trace_loops(diag)
    return total


def cup_cap_row(n: int) -> TLDiagram:
    """The diagram pairing lanes (0,1), (2,3), ... at both top and bottom."""
    if n % 2:
        raise ValueError("cup-cap row needs an even strand count")
    pairing = [-1] * (2 * n)
    for i in range(0, n, 2):
        pairing[i], pairing[i + 1] = i + 1, i
        t0, t1 = 2 * n - 1 - i, 2 * n - 2 - i
        pairing[t0], pairing[t1] = t1, t0
    return TLDiagram(n, tuple(pairing))


def nested_cup_cap_row(n: int, width: int) -> TLDiagram:
    """Cup-cap row whose cups join blocks of `width` lanes by nesting.

    Lane blocks (0..width-1) and (width..2*width-1) are joined by nested
    arcs (lane j to lane 2*width-1-j), matching the plat closure of cabled
    strand pairs.
    """
    if n % (2 * width):
        raise ValueError("strand count must be a multiple of twice the cable width")
    pairing = [-1] * (2 * n)
    for block in range(0, n, 2 * width):
        for j in range(width):
            a, b = block + j, block + 2 * width - 1 - j
            pairing[a], pairing[b] = b, a
            ta, tb = 2 * n - 1 - a, 2 * n - 1 - b
            pairing[ta], pairing[tb] = tb, ta
    return TLDiagram(n, tuple(pairing))
