"""Proper edge colorings, exact chromatic index and palette extraction."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from functools import cached_property

from .errors import ImproperColoring, MalformedInput, ResourceLimit
from .multigraph import MultiGraph, is_regular

CHROMATIC_INDEX_EDGE_CAP = 40


class ClassLabel(enum.Enum):
    CLASS1 = 1
    CLASS2 = 2


@dataclass(frozen=True)
class EdgeColoring:
    """A proper assignment of positive integer colors to every edge.

    Properness (incident edges get distinct colors) is validated at
    construction, so instances are proper by invariant.
    """

    graph: MultiGraph
    colors: dict[int, int]

    def __post_init__(self):
        object.__setattr__(self, "colors", dict(self.colors))
        missing = self.graph.edge_ids - self.colors.keys()
        if missing or self.colors.keys() - self.graph.edge_ids:
            raise ImproperColoring("assignment must be total on the edge set")
        for eid, c in self.colors.items():
            if not isinstance(c, int) or isinstance(c, bool) or c < 1:
                raise ImproperColoring(f"edge {eid}: color must be a positive integer")
        for v in range(self.graph.n):
            seen: set[int] = set()
            for eid, _ in self.graph.incidence[v]:
                c = self.colors[eid]
                if c in seen:
                    raise ImproperColoring(
                        f"vertex {v}: incident edges share color {c}"
                    )
                seen.add(c)

    @cached_property
    def colorset(self) -> frozenset[int]:
        return frozenset(self.colors.values())

    def palette(self, v: int) -> frozenset[int]:
        return frozenset(self.colors[eid] for eid, _ in self.graph.incidence[v])

    def to_json(self) -> str:
        ids = sorted(self.graph.edge_ids)
        if ids != list(range(len(ids))):
            raise MalformedInput("JSON colorings require edge ids 0..m-1")
        return json.dumps({"colors": [self.colors[i] for i in ids]})

    @classmethod
    def from_json(cls, graph: MultiGraph, payload: str | dict) -> EdgeColoring:
        obj = json.loads(payload) if isinstance(payload, str) else payload
        if not isinstance(obj, dict) or "colors" not in obj:
            raise MalformedInput('coloring JSON must be {"colors": [...]}')
        values = obj["colors"]
        if not isinstance(values, list) or len(values) != graph.m:
            raise MalformedInput("colors array must have one entry per edge")
        return cls(graph, {i: c for i, c in enumerate(values)})


@dataclass(frozen=True)
class PaletteSystem:
    """Distinct palettes of a coloring and the vertex classes they induce.

    Palettes are ordered lexicographically by sorted color list, with the
    empty palette (isolated vertices) first.
    """

    palettes: tuple[frozenset[int], ...]
    vertex_class: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.palettes)

    def classes(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in self.palettes]
        for v, j in enumerate(self.vertex_class):
            out[j].add(v)
        return tuple(frozenset(s) for s in out)


def palettes_of(coloring: EdgeColoring) -> PaletteSystem:
    graph = coloring.graph
    raw = [coloring.palette(v) for v in range(graph.n)]
    distinct = sorted(set(raw), key=sorted)
    index = {p: i for i, p in enumerate(distinct)}
    return PaletteSystem(tuple(distinct), tuple(index[p] for p in raw))


def _search_order(graph: MultiGraph) -> tuple[tuple[int, int, int], ...]:
    # Completing low vertices early keeps palette bookkeeping tight.
    return tuple(sorted(graph.edges, key=lambda e: (e[1], e[2], e[0])))


def exists_proper_k_coloring(graph: MultiGraph, k: int) -> dict[int, int] | None:
    """Find a proper coloring with colors from {1..k}, or None.

    Backtracking with color-symmetry breaking: a fresh color may only be
    introduced if it equals the largest color used so far plus one.
    """
    if graph.m == 0:
        return {}
    if k < 1:
        return None
    order = _search_order(graph)
    masks = [0] * graph.n
    rem = list(graph.degrees)
    m = len(order)
    assignment: dict[int, int] = {}

    def rec(i: int, maxused: int) -> bool:
        if i == m:
            return True
        eid, u, v = order[i]
        taken = masks[u] | masks[v]
        limit = min(maxused + 1, k)
        for c in range(1, limit + 1):
            bit = 1 << (c - 1)
            if taken & bit:
                continue
            mu = masks[u] | bit
            mv = masks[v] | bit
            if k - mu.bit_count() < rem[u] - 1:
                continue
            if k - mv.bit_count() < rem[v] - 1:
                continue
            masks[u], masks[v] = mu, mv
            rem[u] -= 1
            rem[v] -= 1
            assignment[eid] = c
            if rec(i + 1, max(maxused, c)):
                return True
            del assignment[eid]
            rem[u] += 1
            rem[v] += 1
            masks[u] &= ~bit
            masks[v] &= ~bit
        return False

    return dict(assignment) if rec(0, 0) else None


@dataclass(frozen=True)
class ChromaticIndexResult:
    chi_prime: int
    witness: EdgeColoring
    label: ClassLabel


def chromatic_index(
    graph: MultiGraph, max_edges: int = CHROMATIC_INDEX_EDGE_CAP
) -> ChromaticIndexResult:
    """Exact chromatic index with a proper witness using that many colors.

    Searches upward from the maximum degree; Vizing's bound for multigraphs
    (max degree + max multiplicity) guarantees termination.
    """
    if graph.m > max_edges:
        raise ResourceLimit("edge count", graph.m, max_edges)
    delta = max(graph.degrees, default=0)
    if graph.m == 0:
        witness = EdgeColoring(graph, {})
        return ChromaticIndexResult(0, witness, ClassLabel.CLASS1)
    upper = delta + graph.max_multiplicity
    for k in range(delta, upper + 1):
        assignment = exists_proper_k_coloring(graph, k)
        if assignment is not None:
            label = ClassLabel.CLASS1 if k == delta else ClassLabel.CLASS2
            return ChromaticIndexResult(k, EdgeColoring(graph, assignment), label)
    raise AssertionError("chromatic index exceeded the Vizing bound")


def is_class1_regular(
    graph: MultiGraph, max_edges: int = CHROMATIC_INDEX_EDGE_CAP
) -> bool:
    """True iff the graph is r-regular and admits an r-edge-coloring."""
    r = is_regular(graph)
    if r is None:
        return False
    if graph.m == 0:
        return True
    return chromatic_index(graph, max_edges=max_edges).chi_prime == r
