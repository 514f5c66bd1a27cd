from __future__ import annotations

from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import strategies as st

from fourcrit.config import Config
from fourcrit.corpus import build_corpus
from fourcrit.graph import Graph

DATA = Path(__file__).parent / "data"


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, density: float | None = None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if density is None:
        chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        chosen = [draw(st.floats(0, 1)) < density for _ in pairs]
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def permutations_of(draw, n: int):
    return draw(st.permutations(list(range(n))))


@pytest.fixture(scope="session")
def corpus():
    """Named constructions, the 4-Ore catalogue to 13 vertices, every 4-critical graph to 9, the girth-5 graph."""
    return build_corpus(named=True, ore_max_n=13, critical_max_n=9, g6_files=[DATA / "girth5_21.g6"], cfg=Config())


from hypothesis import settings as _settings

# fixed example streams keep the suite reproducible run to run
_settings.register_profile("repro", derandomize=True, deadline=None)
_settings.load_profile("repro")
