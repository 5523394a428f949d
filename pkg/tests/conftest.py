from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from posetcodes.poset import Poset

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@st.composite
def dag_posets(draw, max_n: int = 5):
    """Random DAG on a shuffled labelling, closed to a partial order."""
    n = draw(st.integers(1, max_n))
    labels = draw(st.permutations(range(1, n + 1)))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    covers = [(labels[i], labels[j]) for (i, j), k in zip(pairs, keep) if k]
    return Poset.from_covers(n, covers)


@pytest.fixture
def fig1():
    return Poset.from_covers(4, [(2, 1), (4, 3)])


@pytest.fixture
def fig2():
    return Poset.from_covers(4, [(2, 1), (1, 3), (1, 4)])
