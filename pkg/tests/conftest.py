from __future__ import annotations

import random

import pytest

from palette_kit import MultiGraph


@pytest.fixture(scope="session")
def rng() -> random.Random:
    return random.Random(20240811)


def random_simple_graph(r: random.Random, n: int, p: float = 0.5) -> MultiGraph:
    pairs = [
        (u, v) for u in range(n) for v in range(u + 1, n) if r.random() < p
    ]
    return MultiGraph.from_pairs(n, pairs)


def random_multigraph(r: random.Random, n: int, m: int) -> MultiGraph:
    pairs = []
    while len(pairs) < m:
        u, v = r.randrange(n), r.randrange(n)
        if u != v:
            pairs.append((min(u, v), max(u, v)))
    return MultiGraph.from_pairs(n, pairs)


def random_proper_coloring(r: random.Random, graph: MultiGraph, spread: int = 2):
    """Greedy proper coloring over a shuffled edge order with random color
    picks; returns an EdgeColoring."""
    from palette_kit import EdgeColoring

    order = list(graph.edges)
    r.shuffle(order)
    used: dict[int, set[int]] = {v: set() for v in range(graph.n)}
    colors: dict[int, int] = {}
    limit = max(graph.degrees, default=0) + spread
    for eid, u, v in order:
        options = [c for c in range(1, limit + 1) if c not in used[u] | used[v]]
        if not options:
            options = [max(used[u] | used[v], default=0) + 1]
        c = r.choice(options)
        colors[eid] = c
        used[u].add(c)
        used[v].add(c)
    return EdgeColoring(graph, colors)
