"""Combinatorial presentations of braids and link diagrams.

Braid words list generator indices (letter i means s_i, -i means s_i^-1)
and are multiplied top to bottom: the diagram of ``b1.compose(b2)`` stacks
b1 above b2.

PD codes follow the planar-diagram edge convention: every crossing breaks
all strands, so an N-crossing diagram has 2N edges and each edge id occurs
in exactly two crossing slots.  A crossing record stores the four incident
edges counterclockwise starting at the incoming under-edge, plus a sign.

Crossing sign and smoothing conventions (strands of a braid flow DOWN,
letter s_i makes the right strand cross OVER the left one)::

     a     d          record X(a, b, c, d), counterclockwise from the
      \   /           incoming under-edge a; here the over-strand runs
       \ /            d -> b, and the crossing sign is +1.
        X             sign -1 flips over/under: the over-strand runs
       / \            b -> d.
      /   \
     b     c

    A-smoothing joins (a,b) and (c,d); B-smoothing joins (a,d) and (b,c).

For a positive braid letter this makes the A-smoothing the identity
pattern and the B-smoothing the cup-cap, matching the Temperley-Lieb
expansion of a crossing used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin braid group B_n."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("strand count must be positive")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(f"letter {x} out of range for {self.strands} strands")

    def compose(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise ValueError("cannot compose braids with different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def permutation(self) -> tuple[int, ...]:
        """Underlying permutation: position p at the top ends up at perm[p-1].

        Satisfies perm(b1.compose(b2)) = perm(b2) o perm(b1): the strand
        passes through b1 first, then b2.
        """
        pos = list(range(1, self.strands + 1))
        for x in self.letters:
            i = abs(x) - 1
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
        # pos[j] = which top strand currently sits at position j+1; invert
        perm = [0] * self.strands
        for j, start in enumerate(pos):
            perm[start - 1] = j + 1
        return tuple(perm)

    def free_reduce(self) -> BraidWord:
        """Cancel adjacent s_i s_i^-1 pairs until none remain (explicit, never implicit)."""
        stack: list[int] = []
        for x in self.letters:
            if stack and stack[-1] == -x:
                stack.pop()
            else:
                stack.append(x)
        return BraidWord(self.strands, tuple(stack))


def braid_compose(b1: BraidWord, b2: BraidWord) -> BraidWord:
    return b1.compose(b2)


def exponent_sum(b: BraidWord) -> int:
    return b.exponent_sum()


def braid_permutation(b: BraidWord) -> tuple[int, ...]:
    return b.permutation()


@dataclass(frozen=True)
class Crossing:
    """One crossing: edges counterclockwise from the incoming under-edge."""

    edges: tuple[int, int, int, int]
    sign: int

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise ValueError("crossing sign must be +1 or -1")


@dataclass(frozen=True)
class PDCode:
    """A planar diagram: crossing records plus crossing-free loop components."""

    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0

    def __post_init__(self):
        counts: dict[int, int] = {}
        for c in self.crossings:
            for e in c.edges:
                counts[e] = counts.get(e, 0) + 1
        bad = [e for e, k in counts.items() if k != 2]
        if bad:
            raise ValueError(f"edges {sorted(bad)} do not occur exactly twice")
        if self.free_loops < 0:
            raise ValueError("free loop count cannot be negative")

    @property
    def edges(self) -> tuple[int, ...]:
        seen = set()
        for c in self.crossings:
            seen.update(c.edges)
        return tuple(sorted(seen))

    def component_count(self) -> int:
        """Number of link components (arcs joined through crossings, plus free loops)."""
        return len(self._component_map()[1]) + self.free_loops

    def _component_map(self) -> tuple[dict[int, int], list[int]]:
        """Map edge -> component index; components ordered by smallest edge."""
        parent: dict[int, int] = {e: e for e in self.edges}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in self.crossings:
            a, b, cc, d = c.edges
            for u, v in ((a, cc), (b, d)):   # under path and over path
                parent[find(u)] = find(v)
        roots = sorted({find(e) for e in self.edges})
        comp_of_root = {r: i for i, r in enumerate(roots)}
        return {e: comp_of_root[find(e)] for e in self.edges}, roots

    def with_free_loop(self, count: int = 1) -> PDCode:
        return PDCode(self.crossings, self.free_loops + count)

    def mirror(self) -> PDCode:
        """Switch every crossing (over becomes under)."""
        return PDCode(tuple(switch_crossing(c) for c in self.crossings), self.free_loops)


def switch_crossing(c: Crossing) -> Crossing:
    """Swap over/under at one crossing, keeping the four edges in place.

    Rotating the record by one slot makes the old over-entry the new
    under-entry; the sign flips.
    """
    a, b, cc, d = c.edges
    if c.sign > 0:
        return Crossing((d, a, b, cc), -1)
    return Crossing((b, cc, d, a), 1)


@dataclass(frozen=True)
class Orientation:
    """Per-component direction flips relative to the traversal default."""

    flips: frozenset[int] = field(default_factory=frozenset)

    @classmethod
    def default(cls) -> Orientation:
        return cls(frozenset())

    @classmethod
    def flipping(cls, *components: int) -> Orientation:
        return cls(frozenset(components))


def _strand_flow(d: PDCode) -> tuple[dict[int, int], list[dict[int, bool]]]:
    """Trace each component and record, per crossing, whether each strand is
    traversed with (True) or against (False) its as-built flow.

    As-built flow: under-strand enters at slot 0, leaves at slot 2; the
    over-strand enters at slot 3 for sign +1 and at slot 1 for sign -1.
    Returns (edge -> component index, per-crossing {strand: with_flow}),
    where strand key 0 is the under-strand and 1 the over-strand.
    """
    comp, _ = d._component_map()
    # every edge occupies exactly two (crossing, slot) places
    places: dict[int, list[tuple[int, int]]] = {}
    for ci, c in enumerate(d.crossings):
        for slot, e in enumerate(c.edges):
            places.setdefault(e, []).append((ci, slot))

    usage: list[dict[int, bool]] = [dict() for _ in d.crossings]
    seen_passages: set[tuple[int, int]] = set()
    for ci0, c0 in enumerate(d.crossings):
        for strand0, slot0 in ((0, 0), (1, 3 if c0.sign > 0 else 1)):
            if (ci0, strand0) in seen_passages:
                continue
            # walk the component, entering crossing ci at slot `slot`
            ci, slot = ci0, slot0
            while True:
                c = d.crossings[ci]
                strand = 0 if slot in (0, 2) else 1
                if (ci, strand) in seen_passages:
                    break
                seen_passages.add((ci, strand))
                over_in = 3 if c.sign > 0 else 1
                with_flow = (slot == 0) if strand == 0 else (slot == over_in)
                usage[ci][strand] = with_flow
                exit_slot = {0: 2, 2: 0, 1: 3, 3: 1}[slot]
                out_edge = c.edges[exit_slot]
                here = (ci, exit_slot)
                other = [p for p in places[out_edge] if p != here]
                ci, slot = other[0]
    return comp, usage


def writhe(d: PDCode, orientation: Orientation | None = None) -> int:
    """Sum of crossing signs under a consistent orientation of the diagram.

    Signs are recomputed by tracing every component: the stored sign assumed
    both strands travel with their as-built flow, and flipping exactly one
    strand of a crossing flips its sign.  The optional orientation reverses
    whole components (indexed by the order of their smallest edge).
    """
    if orientation is None:
        orientation = Orientation.default()
    comp, usage = _strand_flow(d)
    total = 0
    for ci, c in enumerate(d.crossings):
        a, b, cc, dd = c.edges
        under_comp = comp[a]
        over_comp = comp[b]
        under_fwd = usage[ci].get(0, True) ^ (under_comp in orientation.flips)
        over_fwd = usage[ci].get(1, True) ^ (over_comp in orientation.flips)
        total += c.sign if under_fwd == over_fwd else -c.sign
    return total


# -- braid closures --------------------------------------------------------


def _braid_pd_records(b: BraidWord) -> tuple[list[list[int]], list[int], list[int], list[int]]:
    """Crossing records for the open braid, with fresh edge ids.

    Returns (records as mutable 4-lists, signs, top edge ids, bottom edge ids).
    """
    n = b.strands
    next_id = n + 1
    top = list(range(1, n + 1))
    cur = list(top)
    records: list[list[int]] = []
    signs: list[int] = []
    for x in b.letters:
        i = abs(x) - 1
        left_in, right_in = cur[i], cur[i + 1]
        left_out, right_out = next_id, next_id + 1
        next_id += 2
        if x > 0:
            # right over left; under-edge is the left input
            records.append([left_in, left_out, right_out, right_in])
            signs.append(1)
        else:
            # left over right; under-edge is the right input
            records.append([right_in, left_in, left_out, right_out])
            signs.append(-1)
        cur[i], cur[i + 1] = left_out, right_out
    return records, signs, top, cur


def _glue(records: list[list[int]], pairs: list[tuple[int, int]], signs: list[int]) -> PDCode:
    """Identify edge pairs (relabelling to the smaller id) and build the PDCode."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for rec in records:
        for e in rec:
            parent.setdefault(e, e)
    for u, v in pairs:
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)

    used: set[int] = set()
    crossings = []
    for rec, s in zip(records, signs):
        edges = tuple(find(e) for e in rec)
        used.update(edges)
        crossings.append(Crossing(edges, s))
    # edges that were glued into a cycle touching no crossing are free loops
    all_ids = {find(e) for e in parent}
    free = len(all_ids - used)
    return PDCode(tuple(crossings), free)


def trace_closure(b: BraidWord) -> PDCode:
    """Standard closure: bottom of strand p reattaches to its top."""
    records, signs, top, bottom = _braid_pd_records(b)
    pairs = list(zip(bottom, top))
    return _glue(records, pairs, signs)


def plat_closure(b: BraidWord) -> PDCode:
    """Plat closure: caps pair strands (1,2), (3,4), ... at top and bottom."""
    if b.strands % 2:
        raise ValueError("plat closure needs an even number of strands")
    records, signs, top, bottom = _braid_pd_records(b)
    pairs = [(top[i], top[i + 1]) for i in range(0, b.strands, 2)]
    pairs += [(bottom[i], bottom[i + 1]) for i in range(0, b.strands, 2)]
    return _glue(records, pairs, signs)
