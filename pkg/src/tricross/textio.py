"""Text formats for diagrams.

One statement per line, ``#`` starts a comment::

    x(1,5,2,4)            double crossing, slots counterclockwise, 1 and 3 under
    t(1,1,2,2,3,3|TMB)    triple crossing, roles of strand pairs (1,4),(2,5),(3,6)
    m4(e1,...,e8|1,2,3,4) n-crossing with numeric heights, 1 = top
    loop                  a crossingless circle
    orient c1=+,c2=-      optional orientation relative to the canonical one
"""

from __future__ import annotations

import re

from .diagram import (
    ROLE_LETTERS,
    Crossing,
    Diagram,
    OrientedDiagram,
    check,
    orient,
    orientation_signs,
)
from .errors import InvalidDiagramError, ParseError

__all__ = [
    "parse_diagram",
    "parse_oriented",
    "parse_pd",
    "parse_multi",
    "serialize",
    "serialize_pd",
    "serialize_multi",
    "serialize_oriented",
]

_LETTER_ROLE = {v: k for k, v in ROLE_LETTERS.items()}
_STATEMENT = re.compile(r"^(x|t|m(\d+))\((.*)\)$")
_ORIENT = re.compile(r"^orient(.*)$")


def _ints(text: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",")] if text else []
    except ValueError:
        raise ParseError(f"line {lineno}: bad integer list {text!r}") from None


def _parse_statements(text: str):
    crossings = []
    loops = 0
    signs = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = "".join(raw.split("#", 1)[0].split())
        if not line:
            continue
        if line == "loop":
            loops += 1
            continue
        m = _ORIENT.match(line)
        if m:
            signs = _parse_orient(m.group(1), lineno)
            continue
        m = _STATEMENT.match(line)
        if not m:
            raise ParseError(f"line {lineno}: cannot parse {raw.strip()!r}")
        kind, n_text, body = m.group(1), m.group(2), m.group(3)
        if kind == "x":
            if "|" in body:
                raise ParseError(f"line {lineno}: x(...) takes no roles")
            slots = _ints(body, lineno)
            if len(slots) != 4:
                raise ParseError(f"line {lineno}: x(...) needs 4 edges")
            crossings.append(Crossing(tuple(slots), (2, 1)))
            continue
        if "|" not in body:
            raise ParseError(f"line {lineno}: missing '|roles'")
        edges_text, roles_text = body.split("|", 1)
        slots = _ints(edges_text, lineno)
        if kind == "t":
            n = 3
            if len(roles_text) != 3 or set(roles_text) != set("TMB"):
                raise InvalidDiagramError(
                    f"line {lineno}: roles {roles_text!r} are not a permutation of TMB", "E_ROLES"
                )
            roles = tuple(_LETTER_ROLE[ch] for ch in roles_text)
        else:
            n = int(n_text)
            roles = tuple(_ints(roles_text, lineno))
            if n < 2:
                raise ParseError(f"line {lineno}: m{n} is not a multi-crossing")
        if len(slots) != 2 * n:
            raise ParseError(f"line {lineno}: expected {2 * n} edges, got {len(slots)}")
        if len(roles) != n:
            raise InvalidDiagramError(f"line {lineno}: expected {n} roles", "E_ROLES")
        crossings.append(Crossing(tuple(slots), roles))
    return Diagram(tuple(crossings), loops), signs


def _parse_orient(body: str, lineno: int) -> dict[int, int]:
    signs = {}
    for item in filter(None, body.split(",")):
        m = re.fullmatch(r"c(\d+)=([+-])", item)
        if not m:
            raise ParseError(f"line {lineno}: bad orientation item {item!r}")
        signs[int(m.group(1))] = 1 if m.group(2) == "+" else -1
    return signs


def parse_diagram(text: str, allow_split: bool = False) -> Diagram:
    d, _ = _parse_statements(text)
    return check(d, allow_split=allow_split)


def parse_oriented(text: str) -> OrientedDiagram:
    d, signs = _parse_statements(text)
    check(d)
    return orient(d, signs)


def parse_pd(text: str) -> Diagram:
    d = parse_diagram(text)
    if not d.is_double:
        raise ParseError("PD text may only contain x(...) statements")
    return d


def parse_multi(text: str) -> Diagram:
    return parse_diagram(text)


def _format_crossing(c: Crossing) -> str:
    edges = ",".join(map(str, c.slots))
    if c.n == 2:
        return f"x({edges})"
    if c.n == 3:
        return f"t({edges}|{''.join(ROLE_LETTERS[r] for r in c.roles)})"
    return f"m{c.n}({edges}|{','.join(map(str, c.roles))})"


def serialize(d: Diagram) -> str:
    d = d.relabeled()
    lines = [_format_crossing(c) for c in d.crossings]
    lines += ["loop"] * d.loops
    return "\n".join(lines) + "\n"


def serialize_pd(d: Diagram) -> str:
    if not d.is_double:
        raise InvalidDiagramError("not a double-crossing diagram", "E_STRAND")
    return serialize(d)


serialize_multi = serialize


def serialize_oriented(od: OrientedDiagram) -> str:
    """Serialize with an ``orient`` line when any component is reversed."""
    d = od.diagram
    relabeled = d.relabeled()
    # relabeling preserves slot positions, so entries carry over unchanged
    signs = orientation_signs(OrientedDiagram(relabeled, od.entries))
    text = serialize(relabeled)
    if any(s < 0 for s in signs.values()):
        items = ",".join(f"c{k}={'+' if s > 0 else '-'}" for k, s in sorted(signs.items()))
        text += f"orient {items}\n"
    return text
