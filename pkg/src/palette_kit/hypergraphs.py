"""The hypergraph associated to a coloring, and H-coloring verification.

The associated hypergraph has one vertex per distinct palette and one
hyperedge per used color collecting the palettes containing it.  Loops
(size-1 hyperedges) and parallel hyperedges are permitted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .coloring import EdgeColoring, palettes_of
from .errors import MalformedInput
from .multigraph import MultiGraph
from .solver import PALETTE_INDEX_EDGE_CAP, palette_index


@dataclass(frozen=True)
class Hypergraph:
    """Vertices carry labels (palettes, for associated hypergraphs);
    hyperedges are (id, set of vertex indices) with positive integer ids."""

    vertices: tuple
    hyperedges: tuple[tuple[int, frozenset[int]], ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise MalformedInput("hypergraph vertex labels must be distinct")
        norm = []
        seen_ids: set[int] = set()
        for hid, members in self.hyperedges:
            members = frozenset(members)
            if not isinstance(hid, int) or isinstance(hid, bool) or hid < 1:
                raise MalformedInput("hyperedge ids must be positive integers")
            if hid in seen_ids:
                raise MalformedInput(f"duplicate hyperedge id {hid}")
            seen_ids.add(hid)
            if not members:
                raise MalformedInput(f"hyperedge {hid} is empty")
            if not all(0 <= x < len(self.vertices) for x in members):
                raise MalformedInput(f"hyperedge {hid} references unknown vertices")
            norm.append((hid, members))
        object.__setattr__(self, "hyperedges", tuple(norm))

    @property
    def order(self) -> int:
        return len(self.vertices)

    def star(self, vertex_index: int) -> frozenset[int]:
        """The set of hyperedge ids incident with a vertex."""
        return frozenset(h for h, members in self.hyperedges if vertex_index in members)

    def to_json(self) -> str:
        def label(x):
            return sorted(x) if isinstance(x, frozenset) else x

        return json.dumps(
            {
                "vertices": [label(v) for v in self.vertices],
                "hyperedges": [sorted(members) for _, members in self.hyperedges],
            }
        )

    def render_text(self) -> str:
        """Plain-text adjacency view: size-2 hyperedges as edges, size-1 as loops."""
        def name(i: int) -> str:
            v = self.vertices[i]
            return "{" + ",".join(map(str, sorted(v))) + "}" if isinstance(v, frozenset) else str(v)

        lines = [f"vertices: {', '.join(name(i) for i in range(self.order))}"]
        for hid, members in self.hyperedges:
            ms = sorted(members)
            if len(ms) == 1:
                lines.append(f"h{hid}: loop at {name(ms[0])}")
            elif len(ms) == 2:
                lines.append(f"h{hid}: {name(ms[0])} -- {name(ms[1])}")
            else:
                lines.append(f"h{hid}: {{{', '.join(name(x) for x in ms)}}}")
        return "\n".join(lines)


@dataclass(frozen=True)
class HColoring:
    """A map from edge ids of G to hyperedge ids of H."""

    assignment: dict[int, int]

    def __post_init__(self):
        object.__setattr__(self, "assignment", dict(self.assignment))


def associated_hypergraph(coloring: EdgeColoring) -> Hypergraph:
    system = palettes_of(coloring)
    vertices = system.palettes
    index = {p: i for i, p in enumerate(vertices)}
    hyperedges = []
    for color in sorted(coloring.colorset):
        members = frozenset(index[p] for p in vertices if color in p)
        hyperedges.append((color, members))
    return Hypergraph(vertices, tuple(hyperedges))


def pairwise_intersecting(hypergraph: Hypergraph) -> bool:
    edges = hypergraph.hyperedges
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if not edges[i][1] & edges[j][1]:
                return False
    return True


@dataclass(frozen=True)
class HColoringReport:
    ok: bool
    violations: tuple[tuple[int, str], ...]


def verify_h_coloring(
    graph: MultiGraph, hypergraph: Hypergraph, f: HColoring
) -> HColoringReport:
    """Check the defining condition of an H-coloring at every vertex.

    At each vertex u the incident edges must map injectively (an improper f
    cannot be an edge-coloring) and their image must equal the full star of
    some hypergraph vertex.
    """
    assignment = f.assignment
    if assignment.keys() != set(graph.edge_ids):
        raise MalformedInput("H-coloring must be total on the edge set")
    valid_ids = {hid for hid, _ in hypergraph.hyperedges}
    if not set(assignment.values()) <= valid_ids:
        raise MalformedInput("H-coloring uses unknown hyperedge ids")
    stars = {hypergraph.star(i) for i in range(hypergraph.order)}
    violations: list[tuple[int, str]] = []
    for u in range(graph.n):
        incident = [assignment[eid] for eid, _ in graph.incidence[u]]
        image = frozenset(incident)
        if len(image) != len(incident):
            violations.append((u, "incident edges map to a repeated hyperedge"))
            continue
        if image not in stars:
            violations.append((u, "image is not the star of any hypergraph vertex"))
    return HColoringReport(not violations, tuple(violations))


def induced_coloring(graph: MultiGraph, f: HColoring) -> EdgeColoring:
    """Read an H-coloring back as an edge coloring (colors = hyperedge ids)."""
    return EdgeColoring(graph, dict(f.assignment))


def canonical_h_coloring(coloring: EdgeColoring) -> tuple[Hypergraph, HColoring]:
    """The pair (associated hypergraph, e -> h_{c(e)}); always verifies."""
    hypergraph = associated_hypergraph(coloring)
    f = HColoring(dict(coloring.colors))
    return hypergraph, f


@dataclass(frozen=True)
class OrderBoundCertificate:
    order: int
    hypergraph: Hypergraph
    h_coloring: HColoring


def hypergraph_order_bounds(
    graph: MultiGraph, max_edges: int = PALETTE_INDEX_EDGE_CAP
) -> OrderBoundCertificate:
    """Certify the palette index as a smallest-hypergraph order, per instance.

    The upper bound is constructive: the associated hypergraph of a minimal
    coloring has exactly s_check vertices and the canonical map is a valid
    H-coloring.  The lower bound direction (any valid H-coloring induces at
    most |V(H)| distinct palettes) is checked on arbitrary certificates by
    induced_coloring plus palette counting.
    """
    result = palette_index(graph, max_edges=max_edges)
    hypergraph, f = canonical_h_coloring(result.coloring)
    report = verify_h_coloring(graph, hypergraph, f)
    if not report.ok:
        raise AssertionError("canonical H-coloring failed verification")
    if hypergraph.order != result.s_check:
        raise AssertionError("associated hypergraph order differs from palette count")
    return OrderBoundCertificate(hypergraph.order, hypergraph, f)
