"""Planar multi-crossing diagrams as combinatorial maps.

A crossing is a tuple of edge labels read counterclockwise around the
crossing point.  A crossing with ``2n`` slots carries ``n`` strands; strand
``p`` enters at slot ``p`` and leaves at slot ``p + n``.  ``roles[p]`` is the
height of strand ``p`` (1 is the top).

Double crossings are stored normalized so that slots 0 and 2 carry the
understrand, which is the usual PD convention.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property

from .errors import InvalidDiagramError

__all__ = [
    "Crossing",
    "Diagram",
    "Face",
    "OrientedDiagram",
    "ValidationReport",
    "Components",
    "validate",
    "check",
    "faces",
    "components",
    "orient",
    "orientation_signs",
    "writhe_double",
    "mirror",
    "reflect",
    "classify_triple",
    "ROLE_LETTERS",
]

ROLE_LETTERS = {1: "T", 2: "M", 3: "B"}


def normalize_double(items, roles):
    """Rotate a 4-slot sequence so the understrand sits at slots 0 and 2."""
    items = tuple(items)
    roles = tuple(roles)
    if len(items) == 4 and roles == (1, 2):
        return items[1:] + items[:1], (2, 1)
    return items, roles


@dataclass(frozen=True, eq=False)
class Crossing:
    """Slot labels in counter-clockwise order and the height of each strand.

    A half turn of the slot list maps every strand to itself, so two
    crossings that differ by one compare equal.
    """

    slots: tuple[int, ...]
    roles: tuple[int, ...]

    def half_turn(self) -> int:
        """0 or ``n``: the rotation that brings the slots to their canonical form."""
        n = len(self.roles)
        return n if self.slots[n:] + self.slots[:n] < self.slots else 0

    def key(self):
        r = self.half_turn()
        return self.slots[r:] + self.slots[:r], self.roles

    def __eq__(self, other):
        if not isinstance(other, Crossing):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __post_init__(self):
        slots, roles = tuple(self.slots), tuple(self.roles)
        if len(slots) < 4 or len(slots) % 2:
            raise InvalidDiagramError(f"crossing needs an even number >= 4 of slots, got {len(slots)}", "E_STRAND")
        if sorted(roles) != list(range(1, len(slots) // 2 + 1)):
            raise InvalidDiagramError(f"roles {roles} are not a permutation", "E_ROLES")
        slots, roles = normalize_double(slots, roles)
        object.__setattr__(self, "slots", slots)
        object.__setattr__(self, "roles", roles)

    @property
    def n(self) -> int:
        return len(self.roles)

    def strand_of(self, slot: int) -> int:
        return slot % self.n

    def opposite(self, slot: int) -> int:
        return (slot + self.n) % (2 * self.n)

    def height(self, slot: int) -> int:
        return self.roles[slot % self.n]


@dataclass(frozen=True)
class Face:
    """A face as the cyclic sequence of its corners.

    Corner ``(c, g)`` is the gap between slots ``g`` and ``g + 1`` of
    crossing ``c``.
    """

    corners: tuple[tuple[int, int], ...]

    def __len__(self):
        return len(self.corners)

    @property
    def is_bigon(self) -> bool:
        return len(self.corners) == 2 and self.corners[0][0] != self.corners[1][0]


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...] = ()
    loops: int = 0  # crossingless circle components

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))

    @property
    def n(self) -> int | None:
        """Common arity of the crossings, or None when empty or mixed."""
        arities = {c.n for c in self.crossings}
        return arities.pop() if len(arities) == 1 else None

    @property
    def is_double(self) -> bool:
        return all(c.n == 2 for c in self.crossings)

    def __len__(self):
        return len(self.crossings)

    @cached_property
    def edge_ends(self) -> dict[int, list[tuple[int, int]]]:
        ends: dict[int, list[tuple[int, int]]] = defaultdict(list)
        for ci, c in enumerate(self.crossings):
            for s, e in enumerate(c.slots):
                ends[e].append((ci, s))
        return dict(ends)

    @cached_property
    def partner(self) -> dict[tuple[int, int], tuple[int, int]]:
        """Map each edge end to the other end of its edge."""
        out = {}
        for e, ends in self.edge_ends.items():
            if len(ends) != 2:
                raise InvalidDiagramError(f"edge {e} occurs {len(ends)} times", "E_EDGE_MULTIPLICITY")
            a, b = ends
            out[a] = b
            out[b] = a
        return out

    def slot_count(self, c: int) -> int:
        return len(self.crossings[c].slots)

    def relabeled(self) -> Diagram:
        """Renumber edges 1, 2, ... keeping their relative order."""
        mapping = {e: i for i, e in enumerate(sorted(self.edge_ends), start=1)}
        new = [Crossing(tuple(mapping[e] for e in c.slots), c.roles) for c in self.crossings]
        return Diagram(tuple(new), self.loops)


@dataclass(frozen=True, eq=False)
class OrientedDiagram:
    """A diagram together with a direction on every strand.

    ``entries`` holds the edge ends ``(crossing, slot)`` at which the
    traversal enters its crossing.
    """

    diagram: Diagram
    entries: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "entries", frozenset(self.entries))

    def key(self):
        cs = self.diagram.crossings
        entries = frozenset((ci, (s - cs[ci].half_turn()) % len(cs[ci].slots)) for ci, s in self.entries)
        return self.diagram, entries

    def __eq__(self, other):
        if not isinstance(other, OrientedDiagram):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


@dataclass
class ValidationReport:
    violations: list[tuple[str, str]]
    face_count: int
    component_count: int
    connected: bool

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass
class Components:
    count: int
    edge_component: dict[int, int]  # edge label -> component index (0-based)
    paths: list[list[tuple[int, int]]]  # per component: entry ends in traversal order


def _trace_faces(d: Diagram) -> list[Face]:
    partner = d.partner
    seen = set()
    out = []
    for ci, c in enumerate(d.crossings):
        for s in range(len(c.slots)):
            if (ci, s) in seen:
                continue
            corners = []
            dart = (ci, s)
            while dart not in seen:
                seen.add(dart)
                corners.append(dart)
                oc, os = partner[dart]
                dart = (oc, (os - 1) % d.slot_count(oc))
            out.append(Face(tuple(corners)))
    return out


def faces(d: Diagram) -> list[Face]:
    """Faces of the map traced from the counterclockwise rotation system.

    Crossingless loops contribute no corners and are ignored.
    """
    check(d, allow_split=True)
    return _trace_faces(d)


def _crossing_groups(d: Diagram) -> list[set[int]]:
    parent = list(range(len(d.crossings)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for ends in d.edge_ends.values():
        if len(ends) == 2:
            a, b = find(ends[0][0]), find(ends[1][0])
            if a != b:
                parent[a] = b
    groups: dict[int, set[int]] = defaultdict(set)
    for i in range(len(d.crossings)):
        groups[find(i)].add(i)
    return list(groups.values())


def is_connected(d: Diagram) -> bool:
    if not d.crossings:
        return d.loops <= 1
    return d.loops == 0 and len(_crossing_groups(d)) == 1


def validate(d: Diagram, allow_split: bool = False) -> ValidationReport:
    """Collect every violated invariant instead of raising."""
    violations = []
    for e, ends in sorted(d.edge_ends.items()):
        if e <= 0:
            violations.append(("E_EDGE_LABEL", f"edge label {e} is not positive"))
        if len(ends) != 2:
            violations.append(("E_EDGE_MULTIPLICITY", f"edge {e} occurs {len(ends)} times"))
    if violations:
        return ValidationReport(violations, 0, 0, False)

    fs = _trace_faces(d)
    face_of = {}
    for fi, f in enumerate(fs):
        for corner in f.corners:
            face_of[corner] = fi
    groups = _crossing_groups(d)
    for g in groups:
        v = len(g)
        e = sum(len(d.crossings[c].slots) for c in g) // 2
        f = len({face_of[(c, s)] for c in g for s in range(len(d.crossings[c].slots))})
        if v - e + f != 2:
            violations.append(("E_NONPLANAR", f"Euler characteristic {v - e + f} != 2"))
            break
    connected = is_connected(d)
    if not connected and not allow_split:
        violations.append(("E_DISCONNECTED", "diagram is split or has several crossingless loops"))
    comps = components(d)
    return ValidationReport(violations, len(fs), comps.count, connected)


def check(d: Diagram, allow_split: bool = False) -> Diagram:
    """Raise InvalidDiagramError on the first violation; return ``d``."""
    report = validate(d, allow_split=allow_split)
    if report.violations:
        code, msg = report.violations[0]
        raise InvalidDiagramError(msg, code)
    return d


def components(d: Diagram) -> Components:
    """Follow strands straight through each crossing.

    Components are numbered by their smallest edge label; crossingless loops
    come last.  Each path lists the ends at which the canonical traversal
    enters a crossing.
    """
    partner = d.partner
    ends_by_edge = d.edge_ends
    edge_component: dict[int, int] = {}
    paths = []
    for e in sorted(ends_by_edge):
        if e in edge_component:
            continue
        start_exit, first_entry = sorted(ends_by_edge[e])
        # canonical direction: leave the lower-indexed incidence
        comp = len(paths)
        path = []
        end = first_entry
        while True:
            c, s = end
            edge_component[d.crossings[c].slots[s]] = comp
            path.append(end)
            out = (c, d.crossings[c].opposite(s))
            edge_component[d.crossings[c].slots[out[1]]] = comp
            end = partner[out]
            if end == first_entry:
                break
        paths.append(path)
    return Components(len(paths) + d.loops, edge_component, paths)


def orient(d: Diagram, signs=None) -> OrientedDiagram:
    """Canonical orientation, optionally reversing components.

    ``signs`` maps 1-based component numbers to ``+1``/``-1``.
    """
    comps = components(d)
    signs = signs or {}
    entries = set()
    for k, path in enumerate(comps.paths, start=1):
        sign = signs.get(k, 1)
        for c, s in path:
            if sign > 0:
                entries.add((c, s))
            else:
                entries.add((c, d.crossings[c].opposite(s)))
    return OrientedDiagram(d, frozenset(entries))


def orientation_signs(od: OrientedDiagram) -> dict[int, int]:
    """Per-component sign of ``od`` relative to the canonical orientation."""
    comps = components(od.diagram)
    return {k: (1 if path[0] in od.entries else -1) for k, path in enumerate(comps.paths, start=1)}


def crossing_sign(crossing: Crossing, ci: int, entries) -> int:
    """Sign of a double crossing: +1 when the overstrand enters one slot
    clockwise of the understrand's entry."""
    under_in = 0 if (ci, 0) in entries else 2
    over_in = 1 if (ci, 1) in entries else 3
    return 1 if over_in == (under_in - 1) % 4 else -1


def writhe_double(od: OrientedDiagram) -> int:
    d = od.diagram
    if not d.is_double:
        raise InvalidDiagramError("writhe_double needs a double diagram; resolve first", "E_STRAND")
    return sum(crossing_sign(c, i, od.entries) for i, c in enumerate(d.crossings))


def mirror(d):
    """Reverse all heights.  Accepts Diagram or OrientedDiagram."""
    if isinstance(d, OrientedDiagram):
        m = mirror(d.diagram)
        entries = set()
        for ci, s in d.entries:
            c = d.diagram.crossings[ci]
            if c.n == 2:
                # normalization rotates mirrored double crossings by one slot
                entries.add((ci, (s - 1) % 4))
            else:
                entries.add((ci, s))
        return OrientedDiagram(m, frozenset(entries))
    out = []
    for c in d.crossings:
        n = c.n
        out.append(Crossing(c.slots, tuple(n + 1 - r for r in c.roles)))
    return Diagram(tuple(out), d.loops)


def reflect(d):
    """Planar reflection: reverse the cyclic slot order, keep heights."""
    if isinstance(d, OrientedDiagram):
        r = reflect(d.diagram)
        entries = set()
        for ci, s in d.entries:
            c = d.diagram.crossings[ci]
            k = len(c.slots)
            entries.add((ci, (-s) % k))
        return OrientedDiagram(r, frozenset(entries))
    out = []
    for c in d.crossings:
        k = len(c.slots)
        slots = tuple(c.slots[(-s) % k] for s in range(k))
        roles = tuple(c.roles[(-p) % c.n] for p in range(c.n))
        out.append(Crossing(slots, roles))
    return Diagram(tuple(out), d.loops)


def classify_triple(c: Crossing) -> str:
    """BMT or TMB: the cyclic order of roles read clockwise around the crossing."""
    if c.n != 3:
        raise InvalidDiagramError("classification needs a triple crossing", "E_STRAND")
    r0, r1, r2 = c.roles
    clockwise = "".join(ROLE_LETTERS[r] for r in (r0, r2, r1))
    return "BMT" if clockwise in ("BMT", "MTB", "TBM") else "TMB"


def is_alternating(d: Diagram) -> bool:
    """Over and under strictly alternate along every component of a double diagram."""
    if not d.is_double:
        raise InvalidDiagramError("alternation is defined for double diagrams", "E_STRAND")
    for path in components(d).paths:
        heights = [d.crossings[c].height(s) for c, s in path]
        if any(h == heights[i - 1] for i, h in enumerate(heights)):
            return False
    return True


def nugatory_crossings(d: Diagram) -> list[int]:
    """Crossings with two opposite corners on the same face."""
    where = {}
    for fi, f in enumerate(faces(d)):
        for corner in f.corners:
            where[corner] = fi
    out = []
    for ci, c in enumerate(d.crossings):
        half = c.n
        if any(where[(ci, g)] == where[(ci, g + half)] for g in range(half)):
            out.append(ci)
    return out


def is_reduced(d: Diagram) -> bool:
    return not nugatory_crossings(d)
