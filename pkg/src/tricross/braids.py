"""Braid words, their closures, and the triple-crossing braids built from them.

Strings are numbered ``1..s`` left to right and run upward.  A positive
generator ``i`` crosses strings ``i`` and ``i+1`` with the strand going from
lower left to upper right on top, which is a positive crossing for upward
orientation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .diagram import Crossing, Diagram, OrientedDiagram, check
from .errors import BraidError, ParseError

__all__ = [
    "BraidWord",
    "parse_braid",
    "format_braid",
    "braid_closure",
    "braid_permutation",
    "braid_circle",
    "fold_braid",
    "full_twist_generator",
    "string_parity_preserved",
]

_BRAID = re.compile(r"^\s*braid\s+(\d+)\s*:\s*(.*?)\s*$", re.S)


@dataclass(frozen=True)
class BraidWord:
    strings: int
    word: tuple[int, ...]

    def __post_init__(self):
        if self.strings < 2:
            raise BraidError("a braid needs at least 2 strings")
        for g in self.word:
            if g == 0 or abs(g) >= self.strings:
                raise BraidError(f"generator {g} out of range for {self.strings} strings")

    @property
    def crossings(self) -> int:
        return len(self.word)


def parse_braid(text: str) -> BraidWord:
    """Parse ``braid <s>: g1,g2,...``; an empty list is allowed."""
    m = _BRAID.match(text)
    if not m:
        raise ParseError(f"not a braid: {text.strip()[:40]!r}")
    body = m.group(2).strip()
    body = body.strip("[]")
    try:
        word = tuple(int(tok) for tok in re.split(r"[,\s]+", body) if tok)
    except ValueError:
        raise ParseError(f"bad generator list {body!r}") from None
    return BraidWord(int(m.group(1)), word)


def format_braid(b: BraidWord) -> str:
    return f"braid {b.strings}: {','.join(map(str, b.word))}"


def braid_permutation(b: BraidWord) -> list[int]:
    """``perm[j]`` is the bottom position of the string ending at top position ``j``."""
    pos = list(range(b.strings))  # pos[k]: bottom position of the string now at k
    for g in b.word:
        i = abs(g) - 1
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    return pos


def _closure(b: BraidWord):
    crossings = []
    entries = set()
    label = 0

    def fresh():
        nonlocal label
        label += 1
        return label

    start = [fresh() for _ in range(b.strings)]
    current = list(start)
    for g in b.word:
        i = abs(g) - 1
        bl, br = current[i], current[i + 1]
        tl, tr = fresh(), fresh()
        ci = len(crossings)
        if g > 0:
            crossings.append(Crossing((br, tr, tl, bl), (2, 1)))
            entries.update({(ci, 0), (ci, 3)})
        else:
            crossings.append(Crossing((bl, br, tr, tl), (2, 1)))
            entries.update({(ci, 0), (ci, 1)})
        current[i], current[i + 1] = tl, tr
    rename = {}
    loops = 0
    for top, bottom in zip(current, start):
        if top == bottom:
            loops += 1
        else:
            rename[top] = bottom
    crossings = [Crossing(tuple(rename.get(e, e) for e in c.slots), c.roles) for c in crossings]
    return Diagram(tuple(crossings), loops), entries


def braid_closure(b: BraidWord, oriented: bool = False):
    """Closure diagram with one double crossing per letter.

    With ``oriented=True`` the strings are oriented upward.
    """
    d, entries = _closure(b)
    check(d)
    if oriented:
        return OrientedDiagram(d, frozenset(entries))
    return d


def braid_circle(b: BraidWord, index: int):
    """Covering circle between strings ``index`` and ``index+1`` of the closure.

    It passes each crossing of generator ``±index`` from its lower corner to
    its upper corner and returns around the closure.
    """
    from .covering import Pass

    passes = []
    for ci, g in enumerate(b.word):
        if abs(g) == index:
            # positive: slots (br, tr, tl, bl), lower corner is gap 3
            passes.append(Pass(ci, 3 if g > 0 else 0))
    if not passes:
        raise BraidError(f"generator {index} does not occur; its circle meets no crossing")
    return tuple(passes)


def fold_braid(b: BraidWord, oriented: bool = False):
    """Fold the closure along the circles between adjacent strings.

    Yields ``c - s + 1`` triple crossings when every generator index occurs.
    """
    from .covering import CoveringCollection, fold_along

    for i in range(1, b.strings):
        if not any(abs(g) == i for g in b.word):
            raise BraidError(f"generator {i} does not occur; its circle meets no crossing")
    d = braid_closure(b, oriented=True)
    coll = CoveringCollection(tuple(braid_circle(b, i) for i in range(1, b.strings)))
    out = fold_along(d, coll)
    return out if oriented else out.diagram


def full_twist_generator(m: int, oriented: bool = False):
    """Closed 3-string braid of ``2m`` triple crossings, each a positive half twist.

    Two half twists make one full twist, so the closure is the ``(3m, 3)``
    torus link.
    """
    if m < 1:
        raise BraidError("m must be at least 1")
    crossings = []
    entries = set()
    start = [1, 2, 3]
    label = 3
    current = list(start)
    for _ in range(2 * m):
        b1, b2, b3 = current
        t1, t2, t3 = label + 1, label + 2, label + 3
        label += 3
        ci = len(crossings)
        # ccw from the lower left: bottoms left to right, then tops right to left
        crossings.append(Crossing((b1, b2, b3, t3, t2, t1), (1, 2, 3)))
        entries.update({(ci, 0), (ci, 1), (ci, 2)})
        # the half twist reverses the string order
        current = [t1, t2, t3]
    rename = dict(zip(current, start))
    crossings = [Crossing(tuple(rename.get(e, e) for e in c.slots), c.roles) for c in crossings]
    d = check(Diagram(tuple(crossings)))
    if oriented:
        return OrientedDiagram(d, frozenset(entries))
    return d


def string_parity_preserved(d: Diagram) -> bool:
    """True when no component of a triple braid closure mixes odd and even
    string positions.  Slot ``k < 3`` is string ``k+1`` at the bottom of a
    generator and slot ``5-k`` at its top."""
    from .diagram import components

    comps = components(d)
    parity: dict[int, set[int]] = {}
    for c in d.crossings:
        if c.n != 3:
            raise BraidError("not a triple braid")
        for s, e in enumerate(c.slots):
            position = s if s < 3 else 5 - s
            parity.setdefault(comps.edge_component[e], set()).add(position % 2)
    return all(len(v) == 1 for v in parity.values())
