"""Resolving multi-crossings into double crossings.

The ``n`` strands of a crossing are straight lines through the crossing
point; slot ``i`` sits at angle ``pi * i / n``.  Each line is shifted
sideways by a fixed generic offset, which produces ``n(n-1)/2`` distinct
pairwise intersections.  Over/under at each intersection follows the
heights.  Any two generic shifts differ by Reidemeister III moves, so the
choice only fixes a deterministic output.
"""

from __future__ import annotations

import math
from functools import lru_cache

from ._rewrite import Rewriter
from .diagram import Diagram, OrientedDiagram
from .errors import InvalidDiagramError

__all__ = ["resolve_multi", "resolve_triple", "line_offsets"]

_GOLDEN = (math.sqrt(5) - 1) / 2


@lru_cache(maxsize=None)
def line_offsets(n: int) -> tuple[float, ...]:
    """Perpendicular offsets of the strand lines.

    For triple crossings only the strand at slots 1 and 4 (0-based) moves,
    toward the side of slot 0.
    """
    if n == 3:
        return (0.0, -0.2, 0.0)
    return tuple(0.15 * (((p * _GOLDEN) % 1.0) - 0.5) for p in range(n))


@lru_cache(maxsize=None)
def _arrangement(n: int):
    """Combinatorics of the perturbed line arrangement.

    Returns ``(points, chains)``: ``points`` lists ``(p, q, rotation)`` per
    intersection with ``rotation`` the four directions ``(line, sign)``
    counterclockwise; ``chains[p]`` lists intersection indices along line
    ``p`` from the slot ``p + n`` end to the slot ``p`` end.
    """
    angle = [math.pi * p / n for p in range(n)]
    u = [(math.cos(a), math.sin(a)) for a in angle]
    nrm = [(-math.sin(a), math.cos(a)) for a in angle]
    off = line_offsets(n)
    base = [(off[p] * nrm[p][0], off[p] * nrm[p][1]) for p in range(n)]

    points = []
    along: dict[int, list[tuple[float, int]]] = {p: [] for p in range(n)}
    for p in range(n):
        for q in range(p + 1, n):
            # base_p + t u_p = base_q + s u_q
            det = u[p][0] * (-u[q][1]) - u[p][1] * (-u[q][0])
            rx, ry = base[q][0] - base[p][0], base[q][1] - base[p][1]
            t = (rx * (-u[q][1]) - ry * (-u[q][0])) / det
            s = (u[p][0] * ry - u[p][1] * rx) / det
            dirs = [
                (angle[p], (p, 1)),
                (angle[p] + math.pi, (p, -1)),
                (angle[q], (q, 1)),
                (angle[q] + math.pi, (q, -1)),
            ]
            dirs.sort(key=lambda item: item[0] % (2 * math.pi))
            idx = len(points)
            points.append((p, q, tuple(d for _, d in dirs)))
            along[p].append((t, idx))
            along[q].append((s, idx))
    chains = {}
    for p in range(n):
        ts = sorted(along[p])
        for (a, _), (b, _) in zip(ts, ts[1:]):
            if abs(a - b) < 1e-9:
                raise AssertionError("degenerate line arrangement")
        chains[p] = [idx for _, idx in ts]
    return points, chains


def _resolve_into(rw: Rewriter, ci: int):
    crossing = rw.diagram.crossings[ci]
    n = crossing.n
    if n == 2:
        rw.keep(ci)
        return
    points, chains = _arrangement(n)
    ports = []
    for p, q, rotation in points:
        # understrand is the line with the larger height number
        under = p if crossing.roles[p] > crossing.roles[q] else q
        rot = list(rotation)
        k = rot.index((under, 1))
        rot = rot[k:] + rot[:k]
        new = rw.add(4, (2, 1))
        ports.append({d: new[i] for i, d in enumerate(rot)})
    for p in range(n):
        chain = chains[p]
        rw.link(rw.port(ci, p + n), ports[chain[0]][(p, -1)])
        for a, b in zip(chain, chain[1:]):
            rw.link(ports[a][(p, 1)], ports[b][(p, -1)])
        rw.link(ports[chain[-1]][(p, 1)], rw.port(ci, p))


def resolve_multi(d):
    """Replace every n-crossing by n(n-1)/2 double crossings.

    Accepts a Diagram or OrientedDiagram and returns the same kind.  Mixed
    arities are allowed; double crossings are copied unchanged.
    """
    diagram = d.diagram if isinstance(d, OrientedDiagram) else d
    if diagram.is_double:
        return d
    rw = Rewriter(d)
    for ci in range(len(diagram.crossings)):
        _resolve_into(rw, ci)
    out, _ = rw.build()
    return out


def resolve_triple(d):
    diagram = d.diagram if isinstance(d, OrientedDiagram) else d
    if any(c.n != 3 for c in diagram.crossings):
        raise InvalidDiagramError("resolve_triple needs a triple-crossing diagram", "E_STRAND")
    return resolve_multi(d)


def resolved(d) -> Diagram | OrientedDiagram:
    """Resolution when needed; double diagrams pass through."""
    return resolve_multi(d)
