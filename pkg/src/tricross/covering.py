"""Crossing covering collections and folding along them.

A covering circle crosses the diagram only at crossings, each time entering
through one corner and leaving through the opposite corner.  Between two
crossings it runs inside one face.  A collection is a set of disjoint such
circles meeting every crossing exactly once.

Folding drags a strand of one crossing around its circle on top of everything
else.  Every other crossing on the circle gains that strand as a new top
strand; the start crossing is then untwisted (for double diagrams) or kept
with a small kink (for higher multi-crossings).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ._rewrite import Rewriter
from .diagram import Diagram, OrientedDiagram, check, faces
from .errors import CollectionError, NoCollectionError, PreconditionError, SearchExhaustedError

__all__ = [
    "Pass",
    "CoveringCollection",
    "collection_problems",
    "check_collection",
    "find_covering_collections",
    "find_partial_circle",
    "fold_along",
    "fold_multi",
    "NODE_CAP",
]

NODE_CAP = 10**7


@dataclass(frozen=True, order=True)
class Pass:
    """The circle enters ``crossing`` through corner ``gap`` and leaves opposite."""

    crossing: int
    gap: int

    @property
    def diagonal(self) -> int:
        # 0: corners 1 and 3, 1: corners 0 and 2
        return (self.gap + 1) % 2

    def exit_gap(self, slots: int = 4) -> int:
        return (self.gap + slots // 2) % slots


@dataclass(frozen=True)
class CoveringCollection:
    circles: tuple[tuple[Pass, ...], ...]

    def __len__(self):
        return len(self.circles)

    @property
    def covered(self) -> list[int]:
        return sorted(p.crossing for circle in self.circles for p in circle)

    def to_json(self):
        return [[[p.crossing, p.gap] for p in circle] for circle in self.circles]

    @classmethod
    def from_json(cls, data) -> CoveringCollection:
        return cls(tuple(tuple(Pass(int(c), int(g)) for c, g in circle) for circle in data))


def _face_index(d: Diagram):
    fs = faces(d)
    where = {}
    for fi, f in enumerate(fs):
        for pos, corner in enumerate(f.corners):
            where[corner] = (fi, pos)
    return fs, where


def _chords_cross(a: tuple[int, int], b: tuple[int, int]) -> bool:
    i, j = sorted(a)
    k, m = sorted(b)
    return (i < k < j) != (i < m < j)


def collection_problems(d: Diagram, coll: CoveringCollection, partial: bool = False) -> list[str]:
    """Independent check of a collection; empty list when valid.

    With ``partial`` the collection need not cover every crossing.
    """
    problems = []
    if not d.is_double:
        return ["collections are defined on double-crossing diagrams"]
    count: dict[int, int] = {}
    for circle in coll.circles:
        if not circle:
            problems.append("a circle covers no crossing")
        for p in circle:
            if not 0 <= p.crossing < len(d.crossings) or not 0 <= p.gap < 4:
                problems.append(f"pass {p} out of range")
                return problems
            count[p.crossing] = count.get(p.crossing, 0) + 1
    for c in range(len(d.crossings)):
        k = count.get(c, 0)
        if k > 1 or (k == 0 and not partial):
            problems.append(f"crossing {c} covered {k} times")
    fs, where = _face_index(d)
    chords: dict[int, list[tuple[int, int]]] = {}
    for circle in coll.circles:
        for p, q in zip(circle, circle[1:] + circle[:1]):
            a = (p.crossing, p.exit_gap())
            b = (q.crossing, q.gap)
            fa, pa = where[a]
            fb, pb = where[b]
            if fa != fb:
                problems.append(f"arc from {a} to {b} leaves its face")
                continue
            chords.setdefault(fa, []).append((pa, pb))
    for fi, cs in chords.items():
        for x, y in itertools.combinations(cs, 2):
            if _chords_cross(x, y) or set(x) & set(y):
                problems.append(f"arcs {x} and {y} meet in face {fi}")
    return problems


def check_collection(d: Diagram, coll: CoveringCollection, partial: bool = False) -> CoveringCollection:
    problems = collection_problems(d, coll, partial)
    if problems:
        raise CollectionError("; ".join(problems))
    return coll


def _matchings(items: list[int]):
    """Non-crossing perfect matchings of cyclically ordered items, lexicographic."""
    if not items:
        yield []
        return
    first = items[0]
    for j in range(1, len(items), 2):
        for inner in _matchings(items[1:j]):
            for outer in _matchings(items[j + 1 :]):
                yield [(first, items[j])] + inner + outer


class _Counter:
    def __init__(self, cap):
        self.cap = cap
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.cap is not None and self.nodes > self.cap:
            raise SearchExhaustedError(f"search exceeded {self.cap} nodes")


def _diag_gaps(diag: int) -> tuple[int, int]:
    return (1, 3) if diag == 0 else (0, 2)


def _circles(d, fs, diagonals: dict[int, int], chords) -> list[tuple[Pass, ...]]:
    """Assemble circles from per-crossing diagonals and per-face corner chords."""
    link = {}
    for a, b in chords:
        link[a] = b
        link[b] = a
    seen = set()
    circles = []
    for c in sorted(diagonals):
        if c in seen:
            continue
        g = _diag_gaps(diagonals[c])[0]
        circle = []
        cur = Pass(c, g)
        while cur.crossing not in seen:
            seen.add(cur.crossing)
            circle.append(cur)
            nxt = link[(cur.crossing, cur.exit_gap())]
            cur = Pass(nxt[0], nxt[1])
        circles.append(tuple(circle))
    return circles


def _iter_collections(d: Diagram, crossings: list[int], counter: _Counter):
    """Every collection of circles through exactly ``crossings``, in search order."""
    fs, _ = _face_index(d)
    closing: dict[int, list[int]] = {}
    chosen = set(crossings)
    for fi, f in enumerate(fs):
        members = [c for c, _ in f.corners if c in chosen]
        if members:
            closing.setdefault(max(members), []).append(fi)
    faces_used = sorted({fi for fis in closing.values() for fi in fis})

    diagonals: dict[int, int] = {}

    def used_positions(fi):
        return sorted(
            pos for pos, (c, g) in enumerate(fs[fi].corners) if c in diagonals and g in _diag_gaps(diagonals[c])
        )

    def assign(k):
        if k == len(crossings):
            yield from combine()
            return
        c = crossings[k]
        for diag in (0, 1):
            counter.tick()
            diagonals[c] = diag
            if all(len(used_positions(fi)) % 2 == 0 for fi in closing.get(c, [])):
                yield from assign(k + 1)
            del diagonals[c]

    def combine():
        per_face = []
        for fi in faces_used:
            positions = used_positions(fi)
            corners = fs[fi].corners
            per_face.append([[(corners[i], corners[j]) for i, j in m] for m in _matchings(positions)])
        for combo in itertools.product(*per_face):
            counter.tick()
            chords = [pair for m in combo for pair in m]
            yield CoveringCollection(tuple(_circles(d, fs, diagonals, chords)))

    yield from assign(0)


def find_covering_collections(d: Diagram, mode: str = "first", cap: int | None = NODE_CAP):
    """Search for a covering collection; ``mode`` is ``first`` or ``maximum``."""
    check(d)
    if not d.is_double:
        raise PreconditionError("covering collections need a double-crossing diagram", "E_STRAND")
    if not d.crossings:
        raise NoCollectionError("a diagram without crossings has no covering collection")
    if mode not in ("first", "maximum"):
        raise ValueError(f"unknown mode {mode!r}")
    counter = _Counter(cap)
    best = None
    for coll in _iter_collections(d, list(range(len(d.crossings))), counter):
        if mode == "first":
            return coll
        if best is None or len(coll) > len(best):
            best = coll
            if len(best) == len(d.crossings):
                break
    if best is None:
        raise NoCollectionError("no covering collection found")
    return best


def find_partial_circle(d: Diagram, size: int, accept=None, cap: int | None = NODE_CAP):
    """First single circle through exactly ``size`` crossings accepted by ``accept``."""
    check(d)
    counter = _Counter(cap)
    for subset in itertools.combinations(range(len(d.crossings)), size):
        for coll in _iter_collections(d, list(subset), counter):
            if len(coll) != 1:
                continue
            if accept is None or accept(coll):
                return coll
    raise NoCollectionError(f"no circle through {size} crossings qualifies")


# folding ------------------------------------------------------------------


def _insert_top(rw: Rewriter, c: int, gap_a: int, gap_b: int, detach=None):
    """Replace crossing ``c`` by one with a new top strand through the
    opposite corners ``gap_a`` and ``gap_b``.

    Returns ``(ports, new_at, order)``: ``new_at[gap]`` is the port of the new
    strand at that corner and ``order[pos]`` the old slot at each position.
    Old slot ``detach`` is left unlinked for the caller."""
    crossing = rw.diagram.crossings[c]
    k = len(crossing.slots)
    half = k // 2
    g = min(gap_a, gap_b)
    if (max(gap_a, gap_b) - g) != half:
        raise CollectionError(f"corners {gap_a} and {gap_b} are not opposite at crossing {c}")
    order = list(range(g + 1)) + ["a"] + list(range(g + 1, g + half + 1)) + ["b"]
    order += list(range(g + half + 1, k))
    n_new = half + 1
    roles = [0] * n_new
    for pos, item in enumerate(order[:n_new]):
        roles[pos] = 1 if isinstance(item, str) else crossing.height(item) + 1
    ports = rw.add(2 * n_new, tuple(roles))
    new_at = {}
    for pos, item in enumerate(order):
        if item == "a":
            new_at[g] = ports[pos]
        elif item == "b":
            new_at[g + half] = ports[pos]
        elif item != detach:
            rw.link(rw.port(c, item), ports[pos])
    return ports, new_at, order


def _start_first(circle):
    i = min(range(len(circle)), key=lambda j: circle[j].crossing)
    return circle[i:] + circle[:i]


def _fold_circle(rw: Rewriter, circle, eliminate: bool):
    d = rw.diagram
    circle = _start_first(circle)
    first = circle[0]
    c1 = first.crossing
    k1 = len(d.crossings[c1].slots)
    chain = []
    for p in circle[1:]:
        k = len(d.crossings[p.crossing].slots)
        _, new_at, _ = _insert_top(rw, p.crossing, p.gap, p.exit_gap(k))
        chain.append((new_at[p.gap], new_at[p.exit_gap(k)]))
    go, gi = first.exit_gap(k1), first.gap
    top = [s for s in range(k1) if d.crossings[c1].height(s) == 1]
    exit_top = [s for s in top if s in (go, (go + 1) % k1)]
    if not exit_top:
        raise CollectionError(f"the top strand of crossing {c1} does not border the circle")
    a2 = exit_top[0]
    if eliminate:
        if k1 != 4:
            raise PreconditionError("start-crossing elimination needs a double crossing")
        under = [s for s in range(4) if d.crossings[c1].height(s) == 2]
        rw.link(rw.port(c1, under[0]), rw.port(c1, under[1]))
        a1 = (a2 + 2) % 4
        head = rw.port(c1, a2)
        tail = rw.port(c1, a1)
    else:
        # the old top strand leaves through a kink into the new strand
        ports, new_at, order = _insert_top(rw, c1, gi, go, detach=a2)
        rw.link(ports[order.index(a2)], new_at[go])
        head = rw.port(c1, a2)
        tail = new_at[gi]
    ends = [head]
    for entry, exit_ in chain:
        ends.append(entry)
        ends.append(exit_)
    ends.append(tail)
    for x, y in zip(ends[::2], ends[1::2]):
        rw.link(x, y)


def _fold(source, coll: CoveringCollection, eliminate: bool):
    diagram = source.diagram if isinstance(source, OrientedDiagram) else source
    rw = Rewriter(source)
    covered = {p.crossing for circle in coll.circles for p in circle}
    for ci in range(len(diagram.crossings)):
        if ci not in covered:
            rw.keep(ci)
    for circle in coll.circles:
        _fold_circle(rw, circle, eliminate)
    out, _ = rw.build()
    check(out.diagram if isinstance(out, OrientedDiagram) else out)
    return out


def fold_along(d, coll: CoveringCollection):
    """Fold a double diagram along a covering collection.

    The result has ``c - len(coll)`` triple crossings.  Oriented input gives
    oriented output.
    """
    diagram = d.diagram if isinstance(d, OrientedDiagram) else d
    check(diagram)
    if not diagram.is_double:
        raise PreconditionError("fold_along needs a double-crossing diagram", "E_STRAND")
    check_collection(diagram, coll)
    return _fold(d, coll, eliminate=True)


def fold_multi(md, coll: CoveringCollection):
    """Raise every crossing of an even multi-crossing diagram by one strand.

    ``md`` is a double diagram (then this is ``fold_along``) or the output of
    ``double_to_even_n``; ``coll`` is a collection on the double diagram it
    came from.  No crossing is eliminated, so the result has as many
    ``(n+1)``-crossings as ``md`` has crossings.
    """
    from .ncross import collapse_even_n, gadget_corner

    diagram = md.diagram if isinstance(md, OrientedDiagram) else md
    check(diagram)
    if diagram.is_double:
        return fold_along(md, coll)
    n = diagram.n
    if n is None or n % 2:
        raise PreconditionError("fold_multi needs a diagram of even n-crossings", "E_PARITY")
    base = collapse_even_n(diagram)
    check_collection(base, coll)
    mapped = CoveringCollection(
        tuple(tuple(Pass(p.crossing, gadget_corner(n, p.gap)) for p in circle) for circle in coll.circles)
    )
    return _fold(md, mapped, eliminate=False)
