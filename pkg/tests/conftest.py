import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tricross.braids import BraidWord  # noqa: E402
from tricross.fixtures import load_fixture  # noqa: E402


def random_braid(rng: random.Random, max_strings=4, max_letters=8, max_triples=None, all_generators=True):
    """A random braid word; with ``all_generators`` every index occurs."""
    while True:
        s = rng.randint(2, max_strings)
        c = rng.randint(s - 1, max_letters)
        if max_triples is not None and c - s + 1 > max_triples:
            continue
        word = [rng.choice([1, -1]) * rng.randint(1, s - 1) for _ in range(c)]
        if all_generators and {abs(g) for g in word} != set(range(1, s)):
            continue
        return BraidWord(s, tuple(word))


@pytest.fixture(scope="session")
def fixture():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = load_fixture(name)
        return cache[name]

    return get


def same_up_to_labels(a, b) -> bool:
    """True when some bijection of edge labels maps ``a`` onto ``b`` with the
    crossing order kept."""
    if len(a.crossings) != len(b.crossings) or a.loops != b.loops:
        return False
    fwd, back = {}, {}
    for x, y in zip(a.crossings, b.crossings):
        if x.roles != y.roles or len(x.slots) != len(y.slots):
            return False
        for e, f in zip(x.slots, y.slots):
            if fwd.setdefault(e, f) != f or back.setdefault(f, e) != e:
                return False
    return True
