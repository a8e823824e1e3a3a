"""Bigon chains, the twist number, and merging crossing pairs across bigons."""

from __future__ import annotations

from dataclasses import dataclass

from ._rewrite import Rewriter
from .covering import CoveringCollection, _fold_circle, find_partial_circle
from .diagram import Diagram, OrientedDiagram, check, faces, is_alternating, is_reduced
from .errors import NoCollectionError, PreconditionError

__all__ = [
    "Bigon",
    "BigonChain",
    "bigons",
    "bigon_chains",
    "twist_number",
    "even_bigon_condition",
    "twist_bigon_chains",
    "cor36_construction",
]


@dataclass(frozen=True)
class Bigon:
    """A bigon face between crossings ``x`` and ``y``.

    Corner ``(x, gx)`` and ``(y, gy)`` bound it, with edge ``x.gx -- y.(gy+1)``
    and edge ``x.(gx+1) -- y.gy``.
    """

    face: int
    x: int
    gx: int
    y: int
    gy: int


@dataclass(frozen=True)
class BigonChain:
    crossings: tuple[int, ...]
    cyclic: bool
    bigons: tuple[int, ...]  # face ids

    @property
    def length(self) -> int:
        return len(self.crossings)


def bigons(d: Diagram) -> list[Bigon]:
    check(d)
    partner = d.partner
    out = []
    for fi, f in enumerate(faces(d)):
        if not f.is_bigon:
            continue
        (x, gx), (y, gy) = f.corners
        k = d.slot_count(y)
        if partner[(x, gx)] != (y, (gy + 1) % k):
            (x, gx), (y, gy) = (y, gy), (x, gx)
        out.append(Bigon(fi, x, gx, y, gy))
    return out


def bigon_chains(d: Diagram, among=None) -> list[BigonChain]:
    """Maximal bigon chains; with ``among`` only those crossings and the bigons
    between them count."""
    check(d)
    nodes = sorted(range(len(d.crossings)) if among is None else among)
    keep = set(nodes)
    adj: dict[int, list[Bigon]] = {c: [] for c in nodes}
    for b in bigons(d):
        if b.x in keep and b.y in keep:
            adj[b.x].append(b)
            adj[b.y].append(b)
    seen = set()
    chains = []
    for start in nodes:
        if start in seen:
            continue
        comp, edges = [], set()
        stack = [start]
        while stack:
            c = stack.pop()
            if c in seen:
                continue
            seen.add(c)
            comp.append(c)
            for b in adj[c]:
                edges.add(b.face)
                stack.append(b.y if b.x == c else b.x)
        cyclic = len(comp) > 1 and len(edges) >= len(comp)
        chains.append(BigonChain(_chain_order(comp, adj), cyclic, tuple(sorted(edges))))
    return chains


def _chain_order(comp, adj):
    """Crossings along the chain from an end (or the lowest id when cyclic)."""
    ends = [c for c in comp if len(adj[c]) == 1]
    start = min(ends) if ends else min(comp)
    order, prev_faces = [start], set()
    cur = start
    while True:
        step = [b for b in adj[cur] if b.face not in prev_faces]
        nxt = None
        for b in sorted(step, key=lambda b: b.face):
            other = b.y if b.x == cur else b.x
            prev_faces.add(b.face)
            if other not in order:
                nxt = other
                break
        if nxt is None:
            break
        order.append(nxt)
        cur = nxt
    order += sorted(set(comp) - set(order))
    return tuple(order)


def twist_number(d: Diagram) -> int:
    return len(bigon_chains(d))


def even_bigon_condition(d: Diagram, among=None) -> bool:
    return all(ch.length % 2 == 0 for ch in bigon_chains(d, among))


def _bigon_matching(d: Diagram, among) -> list[Bigon]:
    """Bigons pairing up every crossing of ``among``, lowest face ids first."""
    keep = set(among)
    cands = sorted((b for b in bigons(d) if b.x in keep and b.y in keep), key=lambda b: b.face)

    def solve(free):
        if not free:
            return []
        c = min(free)
        for b in cands:
            if c in (b.x, b.y) and b.x in free and b.y in free and b.x != b.y:
                rest = solve(free - {b.x, b.y})
                if rest is not None:
                    return [b] + rest
        return None

    found = solve(frozenset(keep))
    if found is None:
        raise PreconditionError("the bigons do not pair up all crossings", "E_PRECONDITION")
    return found


def _twist_into(rw: Rewriter, b: Bigon):
    d = rw.diagram
    x, gx, y, gy = b.x, b.gx, b.y, b.gy
    cx, cy = d.crossings[x], d.crossings[y]
    if cx.n != 2 or cy.n != 2:
        raise PreconditionError("only bigons between double crossings can be twisted")
    # strand P runs x.(gx+2) -> x.gx -> y.(gy+1) -> y.(gy+3); Q is the other one
    p_at_x = cx.height((gx + 2) % 4)
    p_at_y = cy.height((gy + 3) % 4)
    if p_at_x == p_at_y:
        raise PreconditionError(f"bigon {b.face} is not alternating; it cancels instead of twisting")
    role_a = 1 if p_at_y == 1 else 3
    ports = rw.add(6, (role_a, 4 - role_a, 2))
    rw.drop_edge_at(x, gx)
    rw.drop_edge_at(x, (gx + 1) % 4)
    rw.link(rw.port(y, (gy + 3) % 4), ports[0])
    rw.link(rw.port(x, (gx + 2) % 4), ports[1])
    rw.link(rw.port(x, (gx + 3) % 4), ports[2])
    rw.link(ports[3], ports[4])  # the kink left by the twist
    rw.link(rw.port(y, (gy + 2) % 4), ports[5])


def twist_bigon_chains(d):
    """Merge crossings in pairs across alternate bigons: ``c/2`` triple crossings."""
    diagram = d.diagram if isinstance(d, OrientedDiagram) else d
    check(diagram)
    if not diagram.is_double:
        raise PreconditionError("twisting needs a double-crossing diagram", "E_STRAND")
    if not even_bigon_condition(diagram):
        raise PreconditionError("some maximal bigon chain has odd length")
    matching = _bigon_matching(diagram, range(len(diagram.crossings)))
    rw = Rewriter(d)
    for b in matching:
        _twist_into(rw, b)
    out, _ = rw.build()
    check(out.diagram if isinstance(out, OrientedDiagram) else out)
    return out


def _remainder_pairs(d: Diagram, coll: CoveringCollection):
    rest = sorted(set(range(len(d.crossings))) - set(coll.covered))
    if not even_bigon_condition(d, rest):
        return None
    try:
        return _bigon_matching(d, rest)
    except PreconditionError:
        return None


def three_crossing_circle(d: Diagram, cap=None):
    """A circle through three crossings whose remainder twists into pairs."""
    kwargs = {} if cap is None else {"cap": cap}
    return find_partial_circle(d, 3, accept=lambda coll: _remainder_pairs(d, coll) is not None, **kwargs)


def cor36_construction(d, cap=None):
    """Fold a circle through three crossings and twist the rest.

    For a reduced alternating diagram with an odd number ``c`` of crossings
    this yields ``(c+1)/2`` triple crossings, or raises ``NoCollectionError``
    when no circle qualifies.
    """
    diagram = d.diagram if isinstance(d, OrientedDiagram) else d
    check(diagram)
    if not diagram.is_double:
        raise PreconditionError("needs a double-crossing diagram", "E_STRAND")
    if len(diagram.crossings) % 2 == 0:
        raise PreconditionError("needs an odd number of crossings")
    if not (is_alternating(diagram) and is_reduced(diagram)):
        raise PreconditionError("needs a reduced alternating diagram")
    try:
        coll = three_crossing_circle(diagram, cap)
    except NoCollectionError:
        raise NoCollectionError("no circle through three crossings leaves an even remainder") from None
    pairs = _remainder_pairs(diagram, coll)
    rw = Rewriter(d)
    _fold_circle(rw, coll.circles[0], eliminate=True)
    for b in pairs:
        _twist_into(rw, b)
    out, _ = rw.build()
    check(out.diagram if isinstance(out, OrientedDiagram) else out)
    return out
