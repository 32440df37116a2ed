"""Three-coloring of link diagrams and involutory-quandle axiom checking.

Arc colors live on quandle arcs (maximal over-passes: PD edges glued
through the over-strand at each crossing).  Each crossing imposes the
GF(3) relation 2*over = under_in + under_out, the linearization of the
three-color quandle rule; the coloring count is 3^(kernel dimension) of
that linear system, computed by Gaussian elimination mod 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linkdata import PDCode


def _quandle_arcs(d: PDCode) -> tuple[dict[int, int], int]:
    """Union PD edges through over-passes; returns (edge -> arc index, arc count)."""
    parent = {e: e for e in d.edges}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in d.crossings:
        _, b, _, dd = c.edges
        rb, rd = find(b), find(dd)
        if rb != rd:
            parent[max(rb, rd)] = min(rb, rd)
    roots = sorted({find(e) for e in d.edges})
    index = {r: i for i, r in enumerate(roots)}
    return {e: index[find(e)] for e in d.edges}, len(roots)


@dataclass(frozen=True)
class ColoringSystem:
    """GF(3) constraint rows for a diagram's three-colorings."""

    variables: int
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_pd(cls, d: PDCode) -> ColoringSystem:
        arc_of, count = _quandle_arcs(d)
        total = count + d.free_loops  # free loops are unconstrained variables
        rows = []
        for c in d.crossings:
            a, b, cc, dd = c.edges
            row = [0] * total
            row[arc_of[b]] = (row[arc_of[b]] + 2) % 3
            row[arc_of[a]] = (row[arc_of[a]] - 1) % 3
            row[arc_of[cc]] = (row[arc_of[cc]] - 1) % 3
            rows.append(tuple(row))
        return cls(total, tuple(rows))

    def kernel_dimension(self) -> int:
        rows = [list(r) for r in self.rows]
        rank = 0
        for col in range(self.variables):
            pivot = next((r for r in range(rank, len(rows)) if rows[r][col] % 3), None)
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            inv = pow(rows[rank][col], -1, 3)
            rows[rank] = [(x * inv) % 3 for x in rows[rank]]
            for r in range(len(rows)):
                if r != rank and rows[r][col] % 3:
                    factor = rows[r][col]
                    rows[r] = [(x - factor * y) % 3 for x, y in zip(rows[r], rows[rank])]
            rank += 1
            if rank == len(rows):
                break
        return self.variables - rank


def three_coloring_count(d: PDCode) -> int:
    """Number of GF(3) colorings; always a power of 3 and at least 3."""
    system = ColoringSystem.from_pd(d)
    return 3 ** system.kernel_dimension()


def is_nontrivially_colorable(d: PDCode) -> bool:
    return three_coloring_count(d) > 3


@dataclass(frozen=True)
class QuandleTable:
    """Finite binary operation table: op[x][y] = x * y over labels 0..n-1."""

    op: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.op)
        for row in self.op:
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise ValueError("operation table is not closed over its label set")

    @property
    def size(self) -> int:
        return len(self.op)

    def apply(self, x: int, y: int) -> int:
        return self.op[x][y]


@dataclass(frozen=True)
class QuandleReport:
    idempotence: tuple[tuple[int, ...], ...]
    involution: tuple[tuple[int, ...], ...]
    distributivity: tuple[tuple[int, ...], ...]

    @property
    def passed(self) -> bool:
        return not (self.idempotence or self.involution or self.distributivity)


def quandle_axiom_check(table: QuandleTable) -> QuandleReport:
    """Exhaustively verify x*x = x, (x*y)*y = x, (x*y)*z = (x*z)*(y*z)."""
    n = table.size
    idem = tuple((x,) for x in range(n) if table.apply(x, x) != x)
    invol = tuple(
        (x, y)
        for x in range(n)
        for y in range(n)
        if table.apply(table.apply(x, y), y) != x
    )
    dist = tuple(
        (x, y, z)
        for x in range(n)
        for y in range(n)
        for z in range(n)
        if table.apply(table.apply(x, y), z) != table.apply(table.apply(x, z), table.apply(y, z))
    )
    return QuandleReport(idem, invol, dist)


def dihedral_quandle(n: int) -> QuandleTable:
    """The quandle x*y = 2y - x mod n; n = 3 gives the three-color quandle."""
    return QuandleTable(tuple(tuple((2 * y - x) % n for y in range(n)) for x in range(n)))
