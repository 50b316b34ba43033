import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import nx_wiener, random_connected
from wienerblocks.compose import CompositeSpec, Part, amalgam, chain, materialize, wiener_chain, wiener_pair
from wienerblocks.families import cycle, path
from wienerblocks.graph import DisconnectedGraphError, GraphError, distance, make_graph, wiener


def random_chain(rng: random.Random, total: int = 20) -> CompositeSpec:
    """Chain of random connected parts with at most ``total`` vertices after gluing."""
    budget = total - 1
    parts = []
    count = rng.randint(1, 5)
    for i in range(count):
        size = rng.randint(1, max(1, min(6, budget + 1)))
        budget -= size - 1
        g = random_connected(rng, size, rng.choice([0.0, 0.2, 0.5]))
        entry = rng.randrange(size) if i > 0 else None
        exit_ = rng.randrange(size) if i < count - 1 else None
        parts.append(Part(g, entry, exit_))
        if budget <= 0:
            break
    if parts[-1].exit is not None:
        parts[-1] = Part(parts[-1].graph, parts[-1].entry, None)
    return CompositeSpec(parts)


@pytest.mark.parametrize(
    "a,b,w", [(4, 4, 40), (6, 2, 42), (6, 4, 82), (8, 2, 88)]
)
def test_two_cycle_constants(a, b, w):
    spec = chain((cycle(a), None, 0), (cycle(b), 0, None))
    assert wiener_chain(spec) == w
    assert wiener_pair(cycle(a), 0, cycle(b), 0) == w


def test_amalgam_labels():
    g = amalgam(path(3), 2, path(3), 0)
    assert g == path(5)
    h = amalgam(cycle(3), 1, path(2), 1)
    assert h.n == 4 and h.has_edge(1, 3)


def test_chain_of_paths_is_a_path():
    spec = chain((path(3), None, 2), (path(4), 0, 3), (path(2), 0, None))
    assert materialize(spec) == path(7)
    assert wiener_chain(spec) == wiener(path(7))


def test_validation():
    with pytest.raises(GraphError):
        CompositeSpec([])
    with pytest.raises(GraphError):
        chain((path(3), None, None), (path(2), 0, None))
    with pytest.raises(GraphError):
        chain((path(3), None, 5), (path(2), 0, None))
    with pytest.raises(DisconnectedGraphError):
        chain((make_graph(2, []), None, 0), (path(2), 0, None))
    with pytest.raises(GraphError):
        wiener_pair(path(3), 3, path(2), 0)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_pair_matches_oracle(seed):
    rng = random.Random(seed)
    g1 = random_connected(rng, rng.randint(1, 10), 0.3)
    g2 = random_connected(rng, rng.randint(1, 10), 0.3)
    v1, v2 = rng.randrange(g1.n), rng.randrange(g2.n)
    glued = amalgam(g1, v1, g2, v2)
    assert wiener_pair(g1, v1, g2, v2) == nx_wiener(glued)
    # distances inside each side are unchanged and cross distances go through v1
    for x in range(g1.n):
        assert distance(glued, x, v1) == distance(g1, x, v1)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_chain_matches_oracle(seed):
    spec = random_chain(random.Random(seed))
    g = materialize(spec)
    assert g.n == sum(p.graph.n for p in spec.parts) - len(spec.parts) + 1
    assert wiener_chain(spec) == nx_wiener(g)


def test_ten_thousand_random_composites():
    rng = random.Random(2024)
    for i in range(10_000):
        if i % 2:
            spec = random_chain(rng)
            assert wiener_chain(spec) == wiener(materialize(spec))
        else:
            g1 = random_connected(rng, rng.randint(1, 10), 0.3)
            g2 = random_connected(rng, rng.randint(1, 10), 0.3)
            v1, v2 = rng.randrange(g1.n), rng.randrange(g2.n)
            assert wiener_pair(g1, v1, g2, v2) == wiener(amalgam(g1, v1, g2, v2))
