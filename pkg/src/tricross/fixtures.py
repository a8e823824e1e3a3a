"""Named fixture diagrams shipped with the package."""

from __future__ import annotations

from importlib import resources

from .braids import braid_closure, parse_braid
from .textio import parse_diagram

__all__ = ["FIXTURE_NAMES", "TABLE_KNOTS", "fixture_text", "load_fixture", "fixture_path"]

TABLE_KNOTS = ("3_1", "4_1", "5_1", "5_2", "6_1", "7_2")
BRAIDS = ("sigma1_3", "sigma1_4", "sigma1_5", "sigma1_6", "sigma1sigma2_3m1", "sigma1sigma2_3m2")
FIXTURE_NAMES = ("kink",) + TABLE_KNOTS + BRAIDS + ("D1",)

_SUFFIX = {"kink": ".pd", "D1": ".tri"}


def _file(name: str) -> str:
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}")
    return name + _SUFFIX.get(name, ".braid" if name in BRAIDS else ".pd")


def fixture_path(name: str):
    return resources.files("tricross") / "fixtures" / _file(name)


def fixture_text(name: str) -> str:
    return fixture_path(name).read_text()


def load_fixture(name: str, as_braid: bool = False):
    """The fixture's diagram; braid fixtures load as their closure unless
    ``as_braid`` is set."""
    text = fixture_text(name)
    if name in BRAIDS:
        b = parse_braid(text)
        return b if as_braid else braid_closure(b)
    return parse_diagram(text)
