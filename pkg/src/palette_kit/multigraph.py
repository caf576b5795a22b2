"""Loopless undirected multigraphs with stable edge identities.

Vertices of a graph are the indices 0..n-1.  Every edge carries an integer
id that survives subgraph extraction: a subgraph view keeps the parent's
edge ids and remembers, through ``vertex_labels``, which parent vertex each
of its local vertices corresponds to.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from .errors import LoopRejected, MalformedInput, ResourceLimit

EVEN_SUBGRAPH_DIMENSION_CAP = 25


@dataclass(frozen=True)
class MultiGraph:
    """An immutable multigraph; parallel edges allowed, loops rejected."""

    n: int
    edges: tuple[tuple[int, int, int], ...]
    vertex_labels: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise MalformedInput("vertex count must be nonnegative")
        seen: set[int] = set()
        norm = []
        for eid, u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise MalformedInput(f"edge {eid}: endpoint out of range 0..{self.n - 1}")
            if u == v:
                raise LoopRejected(f"edge {eid}: loop at vertex {u}")
            if eid in seen:
                raise MalformedInput(f"duplicate edge id {eid}")
            seen.add(eid)
            norm.append((eid, u, v) if u < v else (eid, v, u))
        object.__setattr__(self, "edges", tuple(norm))
        if self.vertex_labels is not None:
            labels = tuple(self.vertex_labels)
            if len(labels) != self.n:
                raise MalformedInput("vertex_labels must have one entry per vertex")
            object.__setattr__(self, "vertex_labels", labels)

    @classmethod
    def from_pairs(cls, n: int, pairs) -> MultiGraph:
        """Build a graph with edge ids 0..m-1 assigned in input order."""
        return cls(n, tuple((i, u, v) for i, (u, v) in enumerate(pairs)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_ids(self) -> frozenset[int]:
        return frozenset(e[0] for e in self.edges)

    @cached_property
    def by_id(self) -> dict[int, tuple[int, int, int]]:
        return {e[0]: e for e in self.edges}

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for _, u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the (edge id, other endpoint) pairs of incident edges."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, u, v in self.edges:
            inc[u].append((eid, v))
            inc[v].append((eid, u))
        return tuple(tuple(entries) for entries in inc)

    @cached_property
    def max_multiplicity(self) -> int:
        if not self.edges:
            return 0
        return max(Counter((u, v) for _, u, v in self.edges).values())

    def label_of(self, v: int) -> int:
        return v if self.vertex_labels is None else self.vertex_labels[v]

    def labels(self, vertices) -> frozenset[int]:
        return frozenset(self.label_of(v) for v in vertices)


@dataclass(frozen=True)
class EdgeSubset:
    """A set of edge ids interpreted against a parent graph."""

    parent: MultiGraph
    members: frozenset[int]

    def __post_init__(self):
        members = frozenset(self.members)
        object.__setattr__(self, "members", members)
        if not members <= self.parent.edge_ids:
            bad = sorted(members - self.parent.edge_ids)
            raise MalformedInput(f"edge ids {bad} not present in parent graph")

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class VertexPartition:
    """An ordered list of pairwise disjoint vertex sets."""

    parts: tuple[frozenset[int], ...]

    def __post_init__(self):
        parts = tuple(frozenset(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        union: set[int] = set()
        for p in parts:
            if union & p:
                raise MalformedInput("partition parts must be pairwise disjoint")
            union |= p

    @property
    def union(self) -> frozenset[int]:
        out: set[int] = set()
        for p in self.parts:
            out |= p
        return frozenset(out)


def degree_profile(graph: MultiGraph) -> tuple[int, int, tuple[int, ...]]:
    """Return (max degree, min degree, per-vertex degrees)."""
    deg = graph.degrees
    if not deg:
        return 0, 0, ()
    return max(deg), min(deg), deg


def is_regular(graph: MultiGraph) -> int | None:
    """Return the common degree if every vertex has it, else None.

    An edgeless graph with at least one vertex is 0-regular.
    """
    deg = graph.degrees
    if not deg:
        return 0
    r = deg[0]
    return r if all(d == r for d in deg) else None


def induced_edge_subgraph(graph: MultiGraph, subset: EdgeSubset) -> MultiGraph:
    """The subgraph induced by an edge subset; isolated vertices are dropped.

    Edge ids are preserved; ``vertex_labels`` maps the view's local vertices
    back to the parent's (recursively, to the root graph's labels).
    """
    if subset.parent is not graph and subset.parent != graph:
        raise MalformedInput("edge subset belongs to a different graph")
    if not subset.members:
        raise MalformedInput("empty edge subsets do not induce a subgraph")
    touched: set[int] = set()
    kept = []
    for eid, u, v in graph.edges:
        if eid in subset.members:
            kept.append((eid, u, v))
            touched.add(u)
            touched.add(v)
    verts = sorted(touched)
    local = {v: i for i, v in enumerate(verts)}
    edges = tuple((eid, local[u], local[v]) for eid, u, v in kept)
    labels = tuple(graph.label_of(v) for v in verts)
    return MultiGraph(len(verts), edges, vertex_labels=labels)


def connected_components(graph: MultiGraph) -> tuple[frozenset[int], ...]:
    seen = [False] * graph.n
    comps = []
    for start in range(graph.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = [start]
        while stack:
            x = stack.pop()
            for _, y in graph.incidence[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comps.append(frozenset(comp))
    return tuple(comps)


def is_connected(graph: MultiGraph) -> bool:
    return len(connected_components(graph)) <= 1


def has_perfect_matching(graph: MultiGraph) -> tuple[bool, tuple[int, ...] | None]:
    """Decide whether a perfect matching exists; return a verified witness.

    The witness is a tuple of edge ids, pairwise vertex-disjoint and covering
    every vertex.  Parallel edges are interchangeable for matchings, so one
    representative id per vertex pair is considered.
    """
    if graph.n == 0:
        return True, ()
    if graph.n % 2 == 1:
        return False, None
    if min(graph.degrees) == 0:
        return False, None
    representative: dict[tuple[int, int], int] = {}
    for eid, u, v in graph.edges:
        key = (u, v)
        if key not in representative or eid < representative[key]:
            representative[key] = eid
    simple = nx.Graph()
    simple.add_nodes_from(range(graph.n))
    simple.add_edges_from(representative)
    matching = nx.max_weight_matching(simple, maxcardinality=True)
    if 2 * len(matching) != graph.n:
        return False, None
    witness = tuple(
        sorted(representative[(u, v) if u < v else (v, u)] for u, v in matching)
    )
    _check_matching_witness(graph, witness)
    return True, witness


def _check_matching_witness(graph: MultiGraph, witness: tuple[int, ...]) -> None:
    covered: set[int] = set()
    for eid in witness:
        _, u, v = graph.by_id[eid]
        if u in covered or v in covered:
            raise AssertionError("matching witness is not vertex-disjoint")
        covered.add(u)
        covered.add(v)
    if len(covered) != graph.n:
        raise AssertionError("matching witness does not cover all vertices")


def has_spanning_even_subgraph_no_isolated(
    graph: MultiGraph, max_dimension: int = EVEN_SUBGRAPH_DIMENSION_CAP
) -> tuple[bool, tuple[int, ...] | None]:
    """Search the cycle space for an edge set with all degrees even and >= 2.

    Every even subgraph is a GF(2) combination of fundamental cycles, so the
    search is exact.  Raises ResourceLimit when the cycle-space dimension
    m - n + #components exceeds ``max_dimension``.
    """
    if graph.n == 0:
        return True, ()
    if min(graph.degrees) < 2:
        # A vertex of degree < 2 can never reach even degree >= 2.
        return False, None
    comps = connected_components(graph)
    dim = graph.m - graph.n + len(comps)
    if dim > max_dimension:
        raise ResourceLimit("cycle-space dimension", dim, max_dimension)
    if dim <= 0:
        return False, None

    # Edge bit positions follow graph.edges order.
    pos = {e[0]: i for i, e in enumerate(graph.edges)}
    vertex_mask = [0] * graph.n
    for i, (_, u, v) in enumerate(graph.edges):
        vertex_mask[u] |= 1 << i
        vertex_mask[v] |= 1 << i

    parent_edge: dict[int, tuple[int, int]] = {}  # vertex -> (parent vertex, edge pos)
    depth: dict[int, int] = {}
    tree_positions: set[int] = set()
    for comp in comps:
        root = min(comp)
        depth[root] = 0
        stack = [root]
        visited = {root}
        while stack:
            x = stack.pop()
            for eid, y in graph.incidence[x]:
                if y not in visited:
                    visited.add(y)
                    parent_edge[y] = (x, pos[eid])
                    depth[y] = depth[x] + 1
                    tree_positions.add(pos[eid])
                    stack.append(y)

    def tree_path_mask(a: int, b: int) -> int:
        mask = 0
        while depth[a] > depth[b]:
            p, ep = parent_edge[a]
            mask ^= 1 << ep
            a = p
        while depth[b] > depth[a]:
            p, ep = parent_edge[b]
            mask ^= 1 << ep
            b = p
        while a != b:
            pa, ea = parent_edge[a]
            pb, eb = parent_edge[b]
            mask ^= (1 << ea) | (1 << eb)
            a, b = pa, pb
        return mask

    basis = []
    for i, (_, u, v) in enumerate(graph.edges):
        if i not in tree_positions:
            basis.append((1 << i) | tree_path_mask(u, v))
    assert len(basis) == dim

    full_cover = range(graph.n)
    current = 0
    for step in range(1, 1 << dim):
        # Gray-code walk: flip the basis element at the lowest set bit.
        current ^= basis[(step & -step).bit_length() - 1]
        if all(current & vertex_mask[v] for v in full_cover):
            witness = tuple(
                sorted(e[0] for i, e in enumerate(graph.edges) if current >> i & 1)
            )
            return True, witness
    return False, None
