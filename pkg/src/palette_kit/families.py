"""Constructors for the named graphs used throughout the test surface."""

from __future__ import annotations

from .multigraph import MultiGraph


def path_graph(n: int) -> MultiGraph:
    return MultiGraph.from_pairs(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> MultiGraph:
    return MultiGraph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> MultiGraph:
    return MultiGraph.from_pairs(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> MultiGraph:
    return MultiGraph.from_pairs(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> MultiGraph:
    return complete_bipartite(1, leaves)


def edgeless(n: int) -> MultiGraph:
    return MultiGraph.from_pairs(n, [])


def petersen_graph() -> MultiGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return MultiGraph.from_pairs(10, outer + spokes + inner)


def disjoint_union(*graphs: MultiGraph) -> MultiGraph:
    pairs = []
    offset = 0
    for g in graphs:
        pairs.extend((u + offset, v + offset) for _, u, v in g.edges)
        offset += g.n
    return MultiGraph.from_pairs(offset, pairs)


def no_perfect_matching_cubic() -> MultiGraph:
    """The 16-vertex cubic graph with no perfect matching.

    A center vertex is joined to the degree-2 vertex of three gadgets, each
    a K4 with one edge subdivided; removing the center leaves three odd
    components, so Tutte's condition fails.
    """
    pairs: list[tuple[int, int]] = []
    center = 0
    for g in range(3):
        base = 1 + 5 * g
        a, b, c, d, s = base, base + 1, base + 2, base + 3, base + 4
        # K4 on {a, b, c, d} with edge (a, b) subdivided through s.
        pairs.extend([(a, c), (a, d), (b, c), (b, d), (c, d), (a, s), (b, s)])
        pairs.append((center, s))
    return MultiGraph.from_pairs(16, pairs)
