"""Local surgery on diagrams through a port graph.

Every edge end of the input is a port ``("o", crossing, slot)`` joined to its
partner by a link.  A rewrite keeps some crossings, adds new ones with fresh
ports ``("n", k, slot)``, and links ports.  Ports not attached to an output
crossing become pass-through points and must carry exactly two links, so
chains of links collapse into output edges.  Chains that close up without
reaching a crossing become crossingless loops.

Input edges keep their direction inside the chains that contain them, which
is how orientations survive a rewrite.
"""

from __future__ import annotations

from collections import defaultdict

from .diagram import Crossing, Diagram, OrientedDiagram, components, normalize_double
from .errors import TricrossError


class RewriteError(TricrossError):
    code = "E_INTERNAL"


class Rewriter:
    def __init__(self, source):
        if isinstance(source, OrientedDiagram):
            self.diagram = source.diagram
            self.entries = source.entries
        else:
            self.diagram = source
            self.entries = None
        self._links: list[tuple] = []
        self._adj: dict[tuple, list[int]] = defaultdict(list)
        self._dropped: set[int] = set()
        self._heads: dict[int, tuple] = {}
        self._out: list[tuple[list[tuple], tuple[int, ...]]] = []
        self._kept: dict[int, int] = {}
        self._new_count = 0
        self._loops = self.diagram.loops
        self._n_input = len(self.diagram.edge_ends)
        for _, (a, b) in sorted(self.diagram.edge_ends.items()):
            pa, pb = ("o",) + a, ("o",) + b
            lid = self.link(pa, pb)
            if self.entries is not None:
                self._heads[lid] = pb if b in self.entries else pa

    def port(self, c: int, s: int) -> tuple:
        return ("o", c, s)

    def link(self, p, q) -> int:
        lid = len(self._links)
        self._links.append((p, q))
        self._adj[p].append(lid)
        self._adj[q].append(lid)
        return lid

    def drop_edge_at(self, c: int, s: int):
        """Delete the input edge incident to end ``(c, s)``."""
        for lid in self._adj[self.port(c, s)]:
            if lid < self._n_input and lid not in self._dropped:
                self._dropped.add(lid)
                return
        raise RewriteError(f"no input edge at {(c, s)}")

    def keep(self, c: int) -> int:
        """Copy input crossing ``c`` to the output; returns its new index."""
        crossing = self.diagram.crossings[c]
        ports = [self.port(c, s) for s in range(len(crossing.slots))]
        self._kept[c] = len(self._out)
        self._out.append((ports, crossing.roles))
        return self._kept[c]

    def add(self, size: int, roles) -> list[tuple]:
        """Add a crossing with ``size`` fresh ports listed counterclockwise."""
        k = self._new_count
        self._new_count += 1
        ports = [("n", k, s) for s in range(size)]
        ports_n, roles_n = normalize_double(ports, roles)
        self._out.append((list(ports_n), tuple(roles_n)))
        return ports

    def add_loop(self):
        self._loops += 1

    def build(self):
        """Return ``(diagram_or_oriented, kept_index_map)``."""
        real = {}
        for ci, (ports, _) in enumerate(self._out):
            for s, p in enumerate(ports):
                real[p] = (ci, s)

        live = lambda p: [lid for lid in self._adj[p] if lid not in self._dropped]  # noqa: E731
        for p in self._adj:
            n = len(live(p))
            if p in real and n != 1:
                raise RewriteError(f"crossing port {p} has {n} links")
            if p not in real and n not in (0, 2):
                raise RewriteError(f"pass-through port {p} has {n} links")

        labels: dict[tuple, int] = {}
        heads: dict[int, tuple[int, int]] = {}  # edge label -> entry end
        used_links: set[int] = set()
        for ports, _ in self._out:
            for p in ports:
                if p in labels:
                    continue
                label = len(heads) + 1
                end, direction = self._walk(p, real, live, used_links)
                labels[p] = label
                labels[end] = label
                heads[label] = None
                if direction is not None:
                    heads[label] = real[end] if direction > 0 else real[p]
        loops = self._loops
        for lid in range(len(self._links)):
            if lid in used_links or lid in self._dropped:
                continue
            # remaining live links form closed pass-through chains
            a, _ = self._links[lid]
            self._walk_cycle(a, lid, live, used_links)
            loops += 1

        crossings = tuple(Crossing(tuple(labels[p] for p in ports), roles) for ports, roles in self._out)
        out = Diagram(crossings, loops)
        if self.entries is None:
            return out, dict(self._kept)
        return self._orient(out, heads), dict(self._kept)

    def _walk(self, start, real, live, used):
        """Follow links from a crossing port to the next crossing port."""
        direction = None
        p = start
        (lid,) = live(p)
        while True:
            used.add(lid)
            a, b = self._links[lid]
            q = b if a == p else a
            if lid in self._heads:
                forward = self._heads[lid] == q
                d = 1 if forward else -1
                if direction is None:
                    direction = d
                elif direction != d:
                    raise RewriteError("inconsistent orientation along an edge chain")
            if q in real:
                return q, direction
            nxt = [x for x in live(q) if x != lid]
            if len(nxt) != 1:
                # self-link on a pass-through port
                nxt = [x for x in live(q) if x not in used]
            lid = nxt[0]
            p = q

    def _walk_cycle(self, start, lid, live, used):
        p = start
        while lid not in used:
            used.add(lid)
            a, b = self._links[lid]
            q = b if a == p else a
            rest = [x for x in live(q) if x not in used]
            if not rest:
                return
            lid = rest[0]
            p = q

    def _orient(self, d: Diagram, heads) -> OrientedDiagram:
        comps = components(d)
        entries = set()
        for path in comps.paths:
            verdict = None
            for c, s in path:
                label = d.crossings[c].slots[s]
                head = heads.get(label)
                if head is None:
                    continue
                v = 1 if head == (c, s) else -1
                if verdict is None:
                    verdict = v
                elif verdict != v:
                    raise RewriteError("rewrite does not preserve strand directions")
            if verdict is None:
                raise RewriteError("a component lost every input edge; orientation unknown")
            for c, s in path:
                entries.add((c, s) if verdict > 0 else (c, d.crossings[c].opposite(s)))
        return OrientedDiagram(d, frozenset(entries))
