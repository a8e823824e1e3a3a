"""Even multi-crossing gadgets built from double crossings.

A double crossing becomes one ``n``-crossing (``n`` even): the overstrand
passes once on top, and the understrand zigzags through the crossing point
``n - 1`` times, descending at each pass, with U-turns hugging the crossing.
"""

from __future__ import annotations

from ._rewrite import Rewriter
from .diagram import Crossing, Diagram, OrientedDiagram, check
from .errors import InvalidDiagramError, PreconditionError

__all__ = ["double_to_even_n", "collapse_even_n", "gadget_corner", "gadget_uturns"]


def _check_n(n: int):
    if n < 4 or n % 2:
        raise PreconditionError(f"n must be even and at least 4, got {n}", "E_PARITY")


def gadget_uturns(n: int) -> list[tuple[int, int]]:
    """Slot pairs joined by the understrand's U-turns."""
    out = []
    for k in range(1, n - 1):
        out.append((k + n, k + 1 + n) if k % 2 else (k, k + 1))
    return out


def gadget_corner(n: int, gap: int) -> int:
    """Corner of the gadget lying in the face of double-crossing corner ``gap``."""
    return {0: n - 1, 1: n, 2: 2 * n - 1, 3: 0}[gap]


# double slot -> gadget slot for the four outer ends
def _outer(n: int) -> dict[int, int]:
    return {3: 0, 0: 1, 1: n, 2: 2 * n - 1}


def double_to_even_n(d, n: int):
    """Replace every double crossing by one ``n``-crossing; crossing ids are kept."""
    _check_n(n)
    diagram = d.diagram if isinstance(d, OrientedDiagram) else d
    check(diagram)
    if not diagram.is_double:
        raise PreconditionError("double_to_even_n needs a double-crossing diagram", "E_STRAND")
    roles = tuple(range(1, n + 1))
    rw = Rewriter(d)
    outer = _outer(n)
    for ci in range(len(diagram.crossings)):
        ports = rw.add(2 * n, roles)
        for a, b in gadget_uturns(n):
            rw.link(ports[a], ports[b])
        for s, g in outer.items():
            rw.link(rw.port(ci, s), ports[g])
    out, _ = rw.build()
    check(out.diagram if isinstance(out, OrientedDiagram) else out)
    return out


def collapse_even_n(md: Diagram) -> Diagram:
    """Inverse of ``double_to_even_n``; raises when a crossing is not a gadget."""
    if isinstance(md, OrientedDiagram):
        md = md.diagram
    n = md.n
    if n is None or n < 4 or n % 2:
        raise InvalidDiagramError("not an even multi-crossing diagram", "E_MISMATCH")
    outer = _outer(n)
    crossings = []
    for ci, c in enumerate(md.crossings):
        if c.roles != tuple(range(1, n + 1)):
            raise InvalidDiagramError(f"crossing {ci} does not have gadget heights", "E_MISMATCH")
        for a, b in gadget_uturns(n):
            if c.slots[a] != c.slots[b]:
                raise InvalidDiagramError(f"crossing {ci} lacks the U-turn {a}-{b}", "E_MISMATCH")
        slots = [0] * 4
        for s, g in outer.items():
            slots[s] = c.slots[g]
        crossings.append(Crossing(tuple(slots), (2, 1)))
    return check(Diagram(tuple(crossings), md.loops))
