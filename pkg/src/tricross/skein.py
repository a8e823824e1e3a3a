"""Kauffman bracket state sums for double and triple crossing diagrams.

Each crossing contributes a list of local smoothings ``(exponent, pairing)``:
the smoothing joins the listed slot pairs and multiplies the state by
``A**exponent``.  A state's term is the product of its factors times
``delta**(loops - 1)`` with ``delta = -A**2 - A**-2``.

Two evaluators share these rules.  ``enumerate`` walks every state with a
fresh union-find; ``frontier`` sweeps the crossings once, keeping only the
connectivity of the edges that cross the sweep line.  They agree exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .diagram import (
    Diagram,
    check,
    classify_triple,
    orient,
    writhe_double,
)
from .errors import CapExceededError, InvalidDiagramError
from .polynomial import LaurentPolynomial, delta_power, span

__all__ = [
    "DOUBLE_CAP",
    "TRIPLE_CAP",
    "double_smoothings",
    "triple_smoothings",
    "bracket",
    "bracket_double",
    "bracket_triple",
    "normalized_polynomial",
    "StateExtremes",
    "state_extremes",
    "state_loops",
    "split_pairing",
    "c3_lower_from_span",
    "span",
    "writhe",
]

DOUBLE_CAP = 20
TRIPLE_CAP = 9

U1 = ((0, 1), (2, 3), (4, 5))
U2 = ((1, 2), (3, 4), (5, 0))


def double_smoothings():
    """A-smoothing joins slots (0,1),(2,3); B-smoothing joins (1,2),(3,0)."""
    return [(1, ((0, 1), (2, 3))), (-1, ((1, 2), (3, 0)))]


def split_pairing(strand: int) -> tuple[tuple[int, int], ...]:
    """The smoothing in which strand ``strand`` runs straight and the rest U-turn."""
    i = strand
    return ((i, i + 3), ((i + 1) % 6, (i + 2) % 6), ((i + 4) % 6, (i + 5) % 6))


def triple_smoothings(crossing) -> list[tuple[int, tuple, str]]:
    """Five smoothings ``(exponent, pairing, kind)`` of a triple crossing."""
    sign = 1 if classify_triple(crossing) == "BMT" else -1
    strand = {r: p for p, r in enumerate(crossing.roles)}
    return [
        (3 * sign, split_pairing(strand[2]), "M"),
        (sign, U1, "U1"),
        (sign, U2, "U2"),
        (-sign, split_pairing(strand[3]), "B"),
        (-sign, split_pairing(strand[1]), "T"),
    ]


def _rules(d: Diagram, mode: str):
    rules = []
    for c in d.crossings:
        if c.n == 2:
            rules.append(double_smoothings())
        elif c.n == 3 and mode in ("triple", "mixed"):
            rules.append([(e, p) for e, p, _ in triple_smoothings(c)])
        else:
            raise InvalidDiagramError(f"no skein rule for a {c.n}-crossing; resolve first", "E_STRAND")
    return rules


def state_loops(d: Diagram, pairings) -> int:
    """Number of circles in the state choosing ``pairings[c]`` at crossing ``c``."""
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c, pairing in zip(d.crossings, pairings):
        for a, b in pairing:
            ra, rb = find(c.slots[a]), find(c.slots[b])
            if ra != rb:
                parent[ra] = rb
    roots = {find(e) for e in d.edge_ends}
    return len(roots) + d.loops


def _combine(by_loops: dict[int, dict[int, int]]) -> LaurentPolynomial:
    total = LaurentPolynomial()
    for loops, terms in by_loops.items():
        total = total + LaurentPolynomial(terms) * delta_power(loops - 1)
    return total


def _enumerate(d: Diagram, rules) -> LaurentPolynomial:
    by_loops: dict[int, dict[int, int]] = {}
    for choice in itertools.product(*rules):
        exp = sum(e for e, _ in choice)
        loops = state_loops(d, [p for _, p in choice])
        bucket = by_loops.setdefault(loops, {})
        bucket[exp] = bucket.get(exp, 0) + 1
    return _combine(by_loops)


def _sweep_order(d: Diagram) -> list[int]:
    """Greedy order keeping few edges open: next is the crossing sharing most
    edges with the processed set (ties by id)."""
    k = len(d.crossings)
    done: list[int] = []
    seen_edges: set[int] = set()
    remaining = set(range(k))
    while remaining:
        best = min(
            remaining,
            key=lambda c: (-sum(1 for e in d.crossings[c].slots if e in seen_edges), c),
        )
        remaining.remove(best)
        done.append(best)
        seen_edges.update(d.crossings[best].slots)
    return done


def _frontier(d: Diagram, rules) -> LaurentPolynomial:
    order = _sweep_order(d)
    position = {c: i for i, c in enumerate(order)}
    last_step = {}
    for e, ends in d.edge_ends.items():
        last_step[e] = max(position[c] for c, _ in ends)

    # state: (sorted tuple of matched open-edge pairs, loops) -> {exp: coeff}
    states: dict[tuple, dict[int, int]] = {((), 0): {0: 1}}
    for step, ci in enumerate(order):
        crossing = d.crossings[ci]
        edges_here = set(crossing.slots)
        new_states: dict[tuple, dict[int, int]] = {}
        for (matching, loops), terms in states.items():
            touched = []
            kept = []
            for pair in matching:
                (touched if pair[0] in edges_here or pair[1] in edges_here else kept).append(pair)
            for exp, pairing in rules[ci]:
                links = list(touched)
                links += [(crossing.slots[a], crossing.slots[b]) for a, b in pairing]
                new_pairs, closed = _contract(links, lambda e: last_step[e] > step)
                key = (tuple(sorted(kept + new_pairs)), loops + closed)
                bucket = new_states.setdefault(key, {})
                for e0, c0 in terms.items():
                    bucket[e0 + exp] = bucket.get(e0 + exp, 0) + c0
        states = new_states
    by_loops: dict[int, dict[int, int]] = {}
    for (matching, loops), terms in states.items():
        assert not matching
        bucket = by_loops.setdefault(loops + d.loops, {})
        for e, c in terms.items():
            bucket[e] = bucket.get(e, 0) + c
    return _combine(by_loops)


def _contract(links: list[tuple[int, int]], is_open) -> tuple[list[tuple[int, int]], int]:
    """Collapse links (each node of degree <= 2) into open-to-open paths and cycles."""
    at: dict[int, list[int]] = {}
    for i, (a, b) in enumerate(links):
        at.setdefault(a, []).append(i)
        at.setdefault(b, []).append(i)
    used = [False] * len(links)

    def run(node, lid):
        while True:
            used[lid] = True
            a, b = links[lid]
            node = b if a == node else a
            if is_open(node):
                return node
            rest = [x for x in at[node] if not used[x]]
            if not rest:
                return None
            lid = rest[0]

    pairs = []
    for node in sorted(at):
        if is_open(node) and not used[at[node][0]]:
            end = run(node, at[node][0])
            pairs.append((min(node, end), max(node, end)))
    cycles = 0
    for lid, (a, _) in enumerate(links):
        if not used[lid]:
            run(a, lid)
            cycles += 1
    return pairs, cycles


def _check_cap(d: Diagram, cap: int | None, what: str):
    if cap is not None and len(d.crossings) > cap:
        raise CapExceededError(f"{what} has {len(d.crossings)} crossings, cap is {cap}")


def bracket(d: Diagram, method: str = "frontier", mode: str = "mixed", allow_split: bool = False):
    """Bracket of a diagram whose crossings are doubles or triples."""
    check(d, allow_split=allow_split)
    if not d.crossings:
        if d.loops == 0:
            raise InvalidDiagramError("the empty diagram has no bracket", "E_EMPTY")
        return delta_power(d.loops - 1)
    rules = _rules(d, mode)
    if method == "enumerate":
        return _enumerate(d, rules)
    if method == "frontier":
        return _frontier(d, rules)
    raise ValueError(f"unknown method {method!r}")


def bracket_double(d: Diagram, cap: int | None = DOUBLE_CAP, method: str = "frontier", allow_split=False):
    if not d.is_double:
        raise InvalidDiagramError("bracket_double needs double crossings only", "E_STRAND")
    _check_cap(d, cap, "diagram")
    return bracket(d, method=method, mode="double", allow_split=allow_split)


def bracket_triple(d: Diagram, cap: int | None = TRIPLE_CAP, method: str = "enumerate", allow_split=False):
    """Five-term state sum over the triple crossings of ``d``."""
    if any(c.n != 3 for c in d.crossings):
        raise InvalidDiagramError("bracket_triple needs triple crossings only", "E_STRAND")
    _check_cap(d, cap, "triple diagram")
    return bracket(d, method=method, mode="triple", allow_split=allow_split)


def normalized_polynomial(od, cap: int | None = None) -> LaurentPolynomial:
    """``(-A**3)**(-w)`` times the bracket of the (resolved) diagram."""
    from .resolve import resolve_multi

    if isinstance(od, Diagram):
        od = orient(od)
    res = resolve_multi(od)
    _check_cap(res.diagram, cap, "resolution")
    w = writhe_double(res)
    factor = LaurentPolynomial({-3 * w: -1 if w % 2 else 1})
    return factor * bracket(res.diagram, mode="double")


@dataclass
class StateExtremes:
    s_max: tuple[str, ...]
    s_min: tuple[str, ...]
    loops_max: int
    loops_min: int
    bmt: int
    tmb: int
    M_P: int
    m_P: int

    @property
    def t(self) -> int:
        return self.bmt + self.tmb


def _best_state(d: Diagram, fixed_kind: dict[int, str], free: list[int]):
    smoothing = [{k: p for _, p, k in triple_smoothings(c)} for c in d.crossings]
    best = None
    # itertools.product yields B before T at each position: lexicographic tie-break
    for combo in itertools.product("BT", repeat=len(free)):
        kinds = dict(fixed_kind)
        kinds.update(zip(free, combo))
        state = tuple(kinds[i] for i in range(len(d.crossings)))
        loops = state_loops(d, [smoothing[i][state[i]] for i in range(len(state))])
        if best is None or loops > best[1]:
            best = (state, loops)
    return best


def state_extremes(d: Diagram) -> StateExtremes:
    check(d)
    if any(c.n != 3 for c in d.crossings):
        raise InvalidDiagramError("state_extremes needs triple crossings only", "E_STRAND")
    classes = [classify_triple(c) for c in d.crossings]
    bmt = [i for i, k in enumerate(classes) if k == "BMT"]
    tmb = [i for i, k in enumerate(classes) if k == "TMB"]
    s_max, loops_max = _best_state(d, {i: "M" for i in bmt}, tmb)
    s_min, loops_min = _best_state(d, {i: "M" for i in tmb}, bmt)
    M_P = 3 * len(bmt) + len(tmb) + 2 * loops_max - 2
    m_P = -len(bmt) - 3 * len(tmb) - (2 * loops_min - 2)
    return StateExtremes(s_max, s_min, loops_max, loops_min, len(bmt), len(tmb), M_P, m_P)


def c3_lower_from_span(p: LaurentPolynomial) -> int:
    """Smallest triple count compatible with ``span <= 8 t``."""
    return -(-span(p) // 8)


def writhe(od) -> int:
    """Writhe of an oriented diagram; multi-crossings are resolved first."""
    from .resolve import resolve_multi

    if isinstance(od, Diagram):
        od = orient(od)
    return writhe_double(resolve_multi(od))
