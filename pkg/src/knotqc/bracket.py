"""Bracket polynomial state sums and the normalized Jones invariant.

The state sum follows the smoothing convention documented in linkdata:
for a crossing record (a, b, c, d) the A-smoothing joins (a,b) and (c,d),
the B-smoothing joins (a,d) and (b,c).  States are enumerated in PD-code
order with the A-smoothing as bit 0.
"""

from __future__ import annotations

from .laurent import LaurentPoly
from .linkdata import BraidWord, Crossing, Orientation, PDCode, switch_crossing, trace_closure, writhe
from . import tl

MAX_STATE_SUM_CROSSINGS = 24


def _state_histogram(d: PDCode) -> dict[tuple[int, int], int]:
    """Count states by (A-count minus B-count, loop count).

    Returns {(exponent, loops): multiplicity} over all 2^N smoothings.
    """
    n = len(d.crossings)
    if n > MAX_STATE_SUM_CROSSINGS:
        raise ValueError(f"state sum limited to {MAX_STATE_SUM_CROSSINGS} crossings, got {n}")
    edge_index = {e: i for i, e in enumerate(d.edges)}
    m = len(edge_index)
    # per crossing, the two join patterns as flat index pairs
    a_joins = []
    b_joins = []
    for c in d.crossings:
        a, b, cc, dd = (edge_index[e] for e in c.edges)
        a_joins.append((a, b, cc, dd))   # join (a,b), (c,d)
        b_joins.append((a, dd, b, cc))   # join (a,d), (b,c)

    hist: dict[tuple[int, int], int] = {}
    free = d.free_loops
    for state in range(1 << n):
        parent = list(range(m))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        a_count = 0
        s = state
        for i in range(n):
            if s & 1:
                p, q, r, t = b_joins[i]
            else:
                p, q, r, t = a_joins[i]
                a_count += 1
            s >>= 1
            rp, rq = find(p), find(q)
            if rp != rq:
                parent[rp] = rq
            rr, rt = find(r), find(t)
            if rr != rt:
                parent[rr] = rt
        loops = sum(1 for x in range(m) if find(x) == x) + free
        key = (2 * a_count - n, loops)
        hist[key] = hist.get(key, 0) + 1
    if n == 0:
        hist[(0, free)] = 1
    return hist


def bracket_state_sum(d: PDCode) -> LaurentPoly:
    """The bracket polynomial, normalized so the unknot evaluates to 1."""
    if len(d.crossings) == 0 and d.free_loops == 0:
        raise ValueError("bracket of an empty diagram is undefined; use an unknot")
    delta = LaurentPoly.loop_delta()
    total = LaurentPoly.zero()
    for (exp, loops), mult in _state_histogram(d).items():
        total = total + LaurentPoly.monomial(exp, mult) * delta ** (loops - 1)
    return total


def bracket_raw(d: PDCode) -> LaurentPoly:
    """Bracket with every loop contributing delta (empty diagram = 1).

    This is the projector-closure normalization used for colored brackets,
    one factor of delta above bracket_state_sum.
    """
    delta = LaurentPoly.loop_delta()
    total = LaurentPoly.zero()
    for (exp, loops), mult in _state_histogram(d).items():
        total = total + LaurentPoly.monomial(exp, mult) * delta ** loops
    return total


def normalized_f(d: PDCode, orientation: Orientation | None = None) -> LaurentPoly:
    """Writhe-normalized invariant f_K(A) = (-A^3)^{-w} <K>."""
    w = writhe(d, orientation)
    factor = LaurentPoly.monomial(-3, -1) ** w if w >= 0 else LaurentPoly.monomial(3, -1) ** (-w)
    return factor * bracket_state_sum(d)


def bracket_via_tl(b: BraidWord) -> LaurentPoly:
    """Bracket of the trace closure computed through the diagram algebra.

    Each positive letter expands to A*1 + A^-1*U_i, each negative letter to
    A^-1*1 + A*U_i; the product is closed with the unknot-normalized trace.
    """
    element = tl.tl_identity(b.strands)
    var = LaurentPoly.var()
    inv = LaurentPoly.monomial(-1)
    for x in b.letters:
        gen = tl.tl_generator(b.strands, abs(x))
        ident = tl.tl_identity(b.strands)
        if x > 0:
            factor = ident.scale(var) + gen.scale(inv)
        else:
            factor = ident.scale(inv) + gen.scale(var)
        element = tl.tl_mul(element, factor)
    return tl.tl_closure(element)


def switching_check(d: PDCode, crossing: int) -> bool:
    """Verify A<X> - A^-1<switched X> = (A^2 - A^-2)<A-smoothing> at one crossing."""
    if not 0 <= crossing < len(d.crossings):
        raise ValueError(f"crossing index {crossing} out of range")
    switched = PDCode(
        tuple(switch_crossing(c) if i == crossing else c for i, c in enumerate(d.crossings)),
        d.free_loops,
    )
    smoothed = smooth_crossing(d, crossing, "A")
    lhs = LaurentPoly.var() * bracket_state_sum(d) - LaurentPoly.monomial(-1) * bracket_state_sum(switched)
    rhs = (LaurentPoly.monomial(2) - LaurentPoly.monomial(-2)) * bracket_state_sum(smoothed)
    return lhs == rhs


def smooth_crossing(d: PDCode, crossing: int, kind: str) -> PDCode:
    """Replace one crossing by its A- or B-smoothing, merging edges."""
    c = d.crossings[crossing]
    a, b, cc, dd = c.edges
    pairs = [(a, b), (cc, dd)] if kind == "A" else [(a, dd), (b, cc)]
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    remaining = [cr for i, cr in enumerate(d.crossings) if i != crossing]
    new_crossings = tuple(Crossing(tuple(find(e) for e in cr.edges), cr.sign) for cr in remaining)
    used = {e for cr in new_crossings for e in cr.edges}
    touched = {find(e) for e in (a, b, cc, dd)}
    free = d.free_loops + len(touched - used)
    return PDCode(new_crossings, free)


def reidemeister_ii_pair(b: BraidWord, position: int, index: int) -> tuple[PDCode, PDCode]:
    """A pair of trace-closure diagrams differing by one Reidemeister-II move.

    Inserts s_index s_index^-1 into the word at the given position.
    """
    if not 1 <= index < b.strands:
        raise ValueError("generator index out of range")
    letters = list(b.letters)
    expanded = letters[:position] + [index, -index] + letters[position:]
    return trace_closure(b), trace_closure(BraidWord(b.strands, tuple(expanded)))


# -- colored brackets via cabling -------------------------------------------


def cable_pd(d: PDCode, a: int) -> tuple[list[tuple], list[int], dict]:
    """Replace every strand by `a` parallel strands.

    Returns (records, signs, boundary) where records hold the cabled crossing
    edge tuples, and boundary maps each original edge e to its list of cabled
    sub-edge ids in flow-relative order (index 0 leftmost along the flow).
    Sub-edge ids are (e, i) tuples; grid-internal edges get fresh tags.
    """
    records: list[tuple] = []
    signs: list[int] = []
    fresh = 0

    def internal() -> tuple:
        nonlocal fresh
        fresh += 1
        return ("int", fresh)

    for ci, c in enumerate(d.crossings):
        ea, eb, ec, ed = c.edges
        # local frame: under flows south -> north through lanes x = 0..a-1
        # (x increases eastward, lane 0 is leftmost = west); the over strand
        # flows west -> east for sign +1 (lanes y, sub j at y = a-1-j) and
        # east -> west for sign -1 (sub j at y = j).
        under_in = [(ea, i) for i in range(a)]
        under_out = [(ec, i) for i in range(a)]
        if c.sign > 0:
            over_in = [(ed, j) for j in range(a)]
            over_out = [(eb, j) for j in range(a)]
            y_of_sub = lambda j: a - 1 - j
        else:
            over_in = [(eb, j) for j in range(a)]
            over_out = [(ed, j) for j in range(a)]
            y_of_sub = lambda j: j

        # vertical wires: ver[x][k] = edge below row k of lane x
        ver = [[under_in[x]] + [internal() for _ in range(a - 1)] + [under_out[x]] for x in range(a)]
        # horizontal wires per over-sub j: hor[j][k] = edge before column k
        if c.sign > 0:
            hor = [[over_in[j]] + [internal() for _ in range(a - 1)] + [over_out[j]] for j in range(a)]
            col_of_step = lambda k: k
        else:
            hor = [[over_in[j]] + [internal() for _ in range(a - 1)] + [over_out[j]] for j in range(a)]
            col_of_step = lambda k: a - 1 - k

        for j in range(a):
            y = y_of_sub(j)
            for k in range(a):
                x = col_of_step(k)
                south = ver[x][y]
                north = ver[x][y + 1]
                west_to_east = c.sign > 0
                before = hor[j][k]
                after = hor[j][k + 1]
                if west_to_east:
                    west, east = before, after
                else:
                    west, east = after, before
                # record CCW from under-in (south): (S, E, N, W)
                records.append((south, east, north, west))
                signs.append(c.sign)

    boundary = {e: [(e, i) for i in range(a)] for e in d.edges}
    return records, signs, boundary


def colored_bracket(d: PDCode, a: int, point: complex) -> complex:
    """Numeric colored bracket <L>_a at the bracket variable `point`.

    Each strand is replaced by `a` parallel strands with one Jones-Wenzl
    projector inserted per component (at its smallest edge).  Uses the
    projector-closure normalization: <unknot>_a = Delta_a and the 0-cable
    of anything is 1.  At a = 1 this equals delta times the unknot-normalized
    bracket (one overall loop factor).
    """
    if a < 0 or a > 3:
        raise ValueError("cable count limited to 0 <= a <= 3")
    if a == 0:
        return 1.0 + 0j
    if a * a * len(d.crossings) > MAX_STATE_SUM_CROSSINGS:
        raise ValueError(
            "cabled diagram exceeds the 2^N enumeration bound; "
            "use the braid-word transfer path for larger cablings"
        )

    delta = complex(LaurentPoly.loop_delta().eval(point))
    projector = tl.jones_wenzl(a, point)

    records, signs, boundary = cable_pd(d, a)

    comp_map, _ = d._component_map() if d.edges else ({}, [])
    components: dict[int, list[int]] = {}
    for e in d.edges:
        components.setdefault(comp_map[e], []).append(e)
    insertion_edges = [min(edges) for _, edges in sorted(components.items())]

    # Cut each insertion edge: its sub-edge (e, i) splits in two, one side
    # per occurrence among the cabled records, and the projector term joins
    # the cut points.  Flow-relative lane indexing makes sub_i meet sub_i at
    # both straight gluings and plat U-turns, and the Jones-Wenzl projector
    # is invariant under both lane reversal and vertical flip, so assigning
    # sides by occurrence order is safe.
    cut = set(insertion_edges)
    seen_once: set[tuple] = set()
    fixed_records = []
    for rec in records:
        fixed = []
        for sub in rec:
            if isinstance(sub, tuple) and len(sub) == 2 and sub[0] in cut:
                if sub in seen_once:
                    fixed.append(("cutH",) + sub)
                else:
                    seen_once.add(sub)
                    fixed.append(("cutL",) + sub)
            else:
                fixed.append(sub)
        fixed_records.append(tuple(fixed))

    # enumerate the state histogram once per combination of projector terms
    from itertools import product as iproduct

    terms = list(projector.combo.items())
    total = 0j
    free_cable_loops = d.free_loops  # each original free loop cables to a projector closure
    for combo in iproduct(range(len(terms)), repeat=len(insertion_edges) + free_cable_loops):
        coeff = 1 + 0j
        joins: list[tuple] = []
        for which, e in zip(combo, insertion_edges):
            diagram, c = terms[which]
            coeff *= complex(c)
            # diagram boundary: bottom points 0..a-1, top a..2a-1 (left to right:
            # top point for lane i is 2a-1-i); bottom i attaches to cutL, top to cutH
            for p, q in _diagram_pairs(diagram):
                joins.append((_cut_point(e, p, a), _cut_point(e, q, a)))
        extra_loop_factor = 1 + 0j
        for which in combo[len(insertion_edges):]:
            diagram, c = terms[which]
            extra_loop_factor *= complex(c) * delta ** tl.diagram_trace_loops(diagram)
        coeff *= extra_loop_factor
        if not records and not insertion_edges:
            total += coeff
            continue
        value = _numeric_state_sum(fixed_records, joins, point, delta)
        total += coeff * value
    return total


def cable_braid_word(b: BraidWord, a: int) -> BraidWord:
    """Blackboard a-cable of a braid: each letter becomes a^2 parallel crossings.

    A positive letter at cable position i expands to the descending runs
    prod_{j=0..a-1} ( s_{p+a+j} s_{p+a+j-1} ... s_{p+j+1} ) with p = (i-1)a;
    negative letters expand to the reversed, inverted word.
    """
    letters: list[int] = []
    for x in b.letters:
        i = abs(x)
        p = (i - 1) * a
        block: list[int] = []
        for j in range(a):
            block.extend(range(p + a + j, p + j, -1))
        if x < 0:
            block = [-k for k in reversed(block)]
        letters.extend(block)
    return BraidWord(a * b.strands, tuple(letters))


def colored_bracket_trace(b: BraidWord, a: int, point: complex) -> complex:
    """<trace closure of b>_a via the diagram-algebra transfer product.

    Cables the braid word, inserts one Jones-Wenzl projector per closure
    component, multiplies the crossing expansions in TL_{a n}, and closes
    with the raw (every loop = delta) normalization.  Feasible far beyond
    the brute cabled state sum.
    """
    if a == 0:
        return 1.0 + 0j
    delta = complex(LaurentPoly.loop_delta().eval(point))
    proj = tl.jones_wenzl(a, point)
    n_str = a * b.strands

    # one projector per closure component = per cycle of the permutation
    perm = b.permutation()
    seen: set[int] = set()
    element = tl.tl_identity(n_str, numeric=True)
    for start in range(1, b.strands + 1):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        nxt = perm[start - 1]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt - 1]
        cable = min(cycle)
        element = tl.tl_mul(element, tl.tl_embed(proj, n_str, (cable - 1) * a), delta)

    cabled = cable_braid_word(b, a)
    var = point
    inv = 1 / point
    for x in cabled.letters:
        gen = tl.tl_generator(n_str, abs(x), numeric=True)
        ident = tl.tl_identity(n_str, numeric=True)
        factor = ident.scale(var) + gen.scale(inv) if x > 0 else ident.scale(inv) + gen.scale(var)
        element = tl.tl_mul(element, factor, delta)
    return tl.tl_closure_numeric(element, delta, normalized=False)


def _cut_point(e: int, boundary_point: int, a: int):
    """Map a TL diagram boundary point to the matching cut sub-edge id.

    Bottom points 0..a-1 read left to right and attach to the low cut side;
    top points a..2a-1 read right to left (point 2a-1 is leftmost) and attach
    to the high side with the same flow-relative lane index.
    """
    if boundary_point < a:
        return ("cutL", e, boundary_point)
    return ("cutH", e, 2 * a - 1 - boundary_point)


def _diagram_pairs(diagram) -> list[tuple[int, int]]:
    pairing = diagram.pairing
    return [(i, pairing[i]) for i in range(len(pairing)) if i < pairing[i]]


def _numeric_state_sum(records: list[tuple], extra_joins: list[tuple], point: complex, delta: complex) -> complex:
    """Raw numeric bracket (every loop a delta) of cabled records plus fixed joins."""
    ids: dict = {}

    def idx(x) -> int:
        if x not in ids:
            ids[x] = len(ids)
        return ids[x]

    a_joins = []
    b_joins = []
    for rec in records:
        a_, b_, c_, d_ = (idx(e) for e in rec)
        a_joins.append((a_, b_, c_, d_))
        b_joins.append((a_, d_, b_, c_))
    fixed = [(idx(u), idx(v)) for u, v in extra_joins]

    m = len(ids)
    n = len(records)
    total = 0j
    base = list(range(m))
    for state in range(1 << n):
        parent = base[:]

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in fixed:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        a_count = 0
        s = state
        for i in range(n):
            if s & 1:
                p, q, r, t = b_joins[i]
            else:
                p, q, r, t = a_joins[i]
                a_count += 1
            s >>= 1
            rp, rq = find(p), find(q)
            if rp != rq:
                parent[rp] = rq
            rr, rt = find(r), find(t)
            if rr != rt:
                parent[rr] = rt
        loops = sum(1 for x in range(m) if find(x) == x)
        total += point ** (2 * a_count - n) * delta ** loops
    return total
