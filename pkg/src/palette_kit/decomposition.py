"""Decompositions into Class 1 regular subgraphs: extraction from minimal
colorings, synthesis of colorings from certificates, and verification.

A two-palette minimal coloring has nested palettes; the smaller one spans a
regular Class 1 subgraph and the leftover colors span another.  With at most
three palettes the color set splits into Venn regions of the palettes, and
the subgraphs induced by those regions form the certificate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .coloring import EdgeColoring, chromatic_index, is_class1_regular, palettes_of
from .errors import (
    InvalidCertificate,
    MalformedInput,
    NonMinimalColoring,
    NotConnected,
    NotCubic,
    NotRegular,
    NotTwoPalettes,
    TooManyPalettes,
)
from .multigraph import (
    EdgeSubset,
    MultiGraph,
    VertexPartition,
    has_perfect_matching,
    induced_edge_subgraph,
    is_connected,
    is_regular,
)
from .solver import PALETTE_INDEX_EDGE_CAP, palette_index

SHAPE_A3 = "A3"
SHAPE_A1A2 = "A1A2"


@dataclass(frozen=True)
class Decomposition2:
    h0: EdgeSubset | None
    h1: EdgeSubset | None


@dataclass(frozen=True)
class Decomposition3:
    h0: EdgeSubset | None
    h1: EdgeSubset | None
    h2: EdgeSubset | None
    h3: EdgeSubset | None
    partition: VertexPartition
    shape: str | None

    def parts(self) -> tuple[tuple[str, EdgeSubset], ...]:
        named = (("H0", self.h0), ("H1", self.h1), ("H2", self.h2), ("H3", self.h3))
        return tuple((name, s) for name, s in named if s is not None)


@dataclass(frozen=True)
class RegularDecomposition3:
    """Corollary-shaped certificate for a k-regular graph: an optional
    r-regular spanning part plus three (k-r)/2-regular Class 1 parts."""

    r: int
    spanning_part: EdgeSubset | None
    parts: tuple[EdgeSubset, EdgeSubset, EdgeSubset]
    decomposition: Decomposition3


@dataclass(frozen=True)
class ClauseReport:
    ok: bool
    clauses: tuple[tuple[str, bool, str], ...]

    def failures(self) -> tuple[tuple[str, str], ...]:
        return tuple((name, detail) for name, passed, detail in self.clauses if not passed)


def _edge_partition_clauses(
    graph: MultiGraph, parts: tuple[tuple[str, EdgeSubset], ...]
) -> list[tuple[str, bool, str]]:
    clauses: list[tuple[str, bool, str]] = []
    nonempty = all(len(s) > 0 for _, s in parts)
    clauses.append(("parts-nonempty", nonempty, "every present part has an edge"))
    used: set[int] = set()
    disjoint = True
    for _, s in parts:
        if used & s.members:
            disjoint = False
        used |= s.members
    cover = used == set(graph.edge_ids)
    clauses.append(("edge-disjoint", disjoint, "parts share no edge"))
    clauses.append(("edges-cover", cover, "parts cover E(G)"))
    return clauses


def verify_decomposition_2(graph: MultiGraph, dec: Decomposition2) -> ClauseReport:
    deg = graph.degrees
    delta_max = max(deg, default=0)
    delta_min = min(deg, default=0)
    clauses: list[tuple[str, bool, str]] = []
    clauses.append(("delta-gap", delta_max > delta_min, "max degree exceeds min degree"))
    parts = tuple(
        (name, s) for name, s in (("H0", dec.h0), ("H1", dec.h1)) if s is not None
    )
    clauses.append(("parts-present", bool(parts), "at least one part is present"))
    clauses.extend(_edge_partition_clauses(graph, parts))
    if dec.h0 is not None and len(dec.h0) > 0:
        view = induced_edge_subgraph(graph, dec.h0)
        spanning = set(view.vertex_labels or ()) == set(range(graph.n))
        clauses.append(("h0-spanning", spanning, "H0 covers every vertex"))
        clauses.append(
            ("h0-regular", is_regular(view) == delta_min, f"H0 is {delta_min}-regular")
        )
        clauses.append(("h0-class1", is_class1_regular(view), "H0 is Class 1"))
    if dec.h1 is not None and len(dec.h1) > 0:
        view = induced_edge_subgraph(graph, dec.h1)
        want = delta_max - delta_min
        clauses.append(
            ("h1-regular", is_regular(view) == want, f"H1 is {want}-regular")
        )
        clauses.append(("h1-class1", is_class1_regular(view), "H1 is Class 1"))
    return ClauseReport(all(ok for _, ok, _ in clauses), tuple(clauses))


def verify_decomposition_3(graph: MultiGraph, dec: Decomposition3) -> ClauseReport:
    clauses: list[tuple[str, bool, str]] = []
    all_vertices = frozenset(range(graph.n))
    parts = dec.parts()
    clauses.append(
        ("partition-covers", dec.partition.union == all_vertices, "A-sets cover V(G)")
    )
    clauses.append(
        (
            "partition-width",
            len(dec.partition.parts) == 3,
            "exactly three (possibly empty) A-sets",
        )
    )
    clauses.append(
        ("parts-present", bool(parts) or graph.m == 0, "a nonempty graph has parts")
    )
    clauses.extend(_edge_partition_clauses(graph, parts))
    shape_ok = (dec.h3 is None) == (dec.shape is None) and dec.shape in (
        None,
        SHAPE_A3,
        SHAPE_A1A2,
    )
    clauses.append(("shape-consistent", shape_ok, "shape flag matches H3 presence"))
    views: dict[str, MultiGraph] = {}
    for name, subset in parts:
        if len(subset) == 0:
            continue
        view = induced_edge_subgraph(graph, subset)
        views[name] = view
        key = name.lower()
        clauses.append(
            (f"{key}-regular", is_regular(view) is not None, f"{name} is regular")
        )
        clauses.append((f"{key}-class1", is_class1_regular(view), f"{name} is Class 1"))
    if "H0" in views:
        spanning = set(views["H0"].vertex_labels or ()) == set(range(graph.n))
        clauses.append(("h0-spanning", spanning, "H0 covers every vertex"))
    if len(dec.partition.parts) == 3:
        a1, a2, a3 = dec.partition.parts
        if "H1" in views:
            got = frozenset(views["H1"].vertex_labels or ())
            clauses.append(("h1-vertices", got == a2 | a3, "V(H1) = A2 u A3"))
        if "H2" in views:
            got = frozenset(views["H2"].vertex_labels or ())
            clauses.append(("h2-vertices", got == a1 | a3, "V(H2) = A1 u A3"))
        if "H3" in views and dec.shape in (SHAPE_A3, SHAPE_A1A2):
            want = a3 if dec.shape == SHAPE_A3 else a1 | a2
            got = frozenset(views["H3"].vertex_labels or ())
            clauses.append(
                ("h3-vertices", got == want, "V(H3) matches the shape flag")
            )
    return ClauseReport(all(ok for _, ok, _ in clauses), tuple(clauses))


def _edges_with_colors(coloring: EdgeColoring, colors: frozenset[int]) -> EdgeSubset:
    members = frozenset(
        eid for eid, c in coloring.colors.items() if c in colors
    )
    return EdgeSubset(coloring.graph, members)


def extract_decomposition_2(coloring: EdgeColoring) -> Decomposition2:
    """Read the two-palette decomposition off a minimal coloring.

    Requires exactly two distinct palettes, nested (equivalently: the
    associated hypergraph is pairwise intersecting); otherwise the coloring
    is not minimal and reduce_colors should be applied first.
    """
    graph = coloring.graph
    system = palettes_of(coloring)
    if len(system) != 2:
        raise NotTwoPalettes(f"coloring induces {len(system)} palettes, need 2")
    small, big = sorted(system.palettes, key=len)
    if not small < big:
        raise NonMinimalColoring(
            "palettes are not nested (the associated hypergraph is not pairwise "
            "intersecting); run reduce_colors first"
        )
    h0 = _edges_with_colors(coloring, small) if small else None
    h1 = _edges_with_colors(coloring, big - small)
    dec = Decomposition2(h0, h1)
    report = verify_decomposition_2(graph, dec)
    if not report.ok:
        raise AssertionError(f"extraction broke invariants: {report.failures()}")
    return dec


def synthesize_coloring_2(graph: MultiGraph, dec: Decomposition2) -> EdgeColoring:
    """Color H0 with 1..delta_min and H1 with the next delta_max - delta_min
    colors; the result has exactly two palettes."""
    report = verify_decomposition_2(graph, dec)
    if not report.ok:
        name, detail = report.failures()[0]
        raise InvalidCertificate(name, detail)
    delta_min = min(graph.degrees, default=0)
    mapping: dict[int, int] = {}
    if dec.h0 is not None:
        view = induced_edge_subgraph(graph, dec.h0)
        witness = chromatic_index(view).witness
        mapping.update(witness.colors)
    if dec.h1 is not None:
        view = induced_edge_subgraph(graph, dec.h1)
        witness = chromatic_index(view).witness
        mapping.update({eid: c + delta_min for eid, c in witness.colors.items()})
    coloring = EdgeColoring(graph, mapping)
    if len(palettes_of(coloring)) != 2:
        raise AssertionError("synthesized coloring does not have two palettes")
    return coloring


def _venn_regions(palettes: list[frozenset[int]]):
    p0, p1, p2 = palettes
    triple = p0 & p1 & p2
    private = [p0 - (p1 | p2), p1 - (p0 | p2), p2 - (p0 | p1)]
    pairwise = [(p1 & p2) - p0, (p0 & p2) - p1, (p0 & p1) - p2]
    return triple, private, pairwise


def extract_decomposition_3(coloring: EdgeColoring) -> Decomposition3:
    """Read the at-most-three-palette decomposition off a minimal coloring.

    The A-sets are the vertex classes of the palettes.  With three palettes
    the color regions of the palette Venn diagram must be compatible with
    minimality: at most one private region is nonempty, and a private region
    excludes the complementary pairwise region.
    """
    graph = coloring.graph
    system = palettes_of(coloring)
    t = len(system)
    if t > 3:
        raise TooManyPalettes(f"coloring induces {t} palettes, need at most 3")
    empty = frozenset()

    if t <= 1:
        everything = (
            EdgeSubset(graph, frozenset(graph.edge_ids)) if graph.m else None
        )
        partition = VertexPartition((frozenset(range(graph.n)), empty, empty))
        dec = Decomposition3(everything, None, None, None, partition, None)
    elif t == 2:
        two = extract_decomposition_2(coloring)
        small_index = min(
            range(2), key=lambda i: (len(system.palettes[i]), sorted(system.palettes[i]))
        )
        classes = system.classes()
        a1 = classes[small_index]
        a2 = classes[1 - small_index]
        partition = VertexPartition((a1, a2, empty))
        dec = Decomposition3(two.h0, two.h1, None, None, partition, None)
    else:
        palettes = list(system.palettes)
        classes = list(system.classes())
        triple, private, pairwise = _venn_regions(palettes)
        nonempty_private = [k for k in range(3) if private[k]]
        if len(nonempty_private) > 1:
            raise NonMinimalColoring(
                "two private color regions are nonempty; run reduce_colors first"
            )
        if nonempty_private:
            k = nonempty_private[0]
            if pairwise[k]:
                raise NonMinimalColoring(
                    "a private region and its complementary pairwise region are "
                    "both nonempty; run reduce_colors first"
                )
            order = [i for i in range(3) if i != k] + [k]
            palettes = [palettes[i] for i in order]
            classes = [classes[i] for i in order]
            triple, private, pairwise = _venn_regions(palettes)
            h3 = _edges_with_colors(coloring, private[2])
            shape = SHAPE_A3
        else:
            h3 = (
                _edges_with_colors(coloring, pairwise[2]) if pairwise[2] else None
            )
            shape = SHAPE_A1A2 if h3 is not None else None
        h0 = _edges_with_colors(coloring, triple) if triple else None
        h1 = _edges_with_colors(coloring, pairwise[0]) if pairwise[0] else None
        h2 = _edges_with_colors(coloring, pairwise[1]) if pairwise[1] else None
        partition = VertexPartition(tuple(classes))
        dec = Decomposition3(h0, h1, h2, h3, partition, shape)

    report = verify_decomposition_3(graph, dec)
    if not report.ok:
        raise AssertionError(f"extraction broke invariants: {report.failures()}")
    return dec


def synthesize_coloring_3(graph: MultiGraph, dec: Decomposition3) -> EdgeColoring:
    """Color each present part in exactly its degree on a disjoint color
    interval; vertices in the same A-set end with equal palettes."""
    report = verify_decomposition_3(graph, dec)
    if not report.ok:
        name, detail = report.failures()[0]
        raise InvalidCertificate(name, detail)
    mapping: dict[int, int] = {}
    offset = 0
    for _, subset in dec.parts():
        view = induced_edge_subgraph(graph, subset)
        witness = chromatic_index(view).witness
        mapping.update({eid: c + offset for eid, c in witness.colors.items()})
        offset += is_regular(view)
    coloring = EdgeColoring(graph, mapping)
    system = palettes_of(coloring)
    if len(system) > 3:
        raise AssertionError("synthesized coloring exceeds three palettes")
    for part in dec.partition.parts:
        if len({coloring.palette(v) for v in part}) > 1:
            raise AssertionError("an A-set received two distinct palettes")
    return coloring


def regular_corollary_check(
    graph: MultiGraph, max_edges: int = PALETTE_INDEX_EDGE_CAP
) -> tuple[bool, RegularDecomposition3 | None]:
    """For a k-regular graph, decide palette index 3 and produce the
    corollary certificate: three equal-degree Class 1 parts plus an optional
    regular spanning part."""
    k = is_regular(graph)
    if k is None:
        raise NotRegular("regular_corollary_check requires a regular graph")
    result = palette_index(graph, max_edges=max_edges)
    if result.s_check != 3:
        return False, None
    dec = extract_decomposition_3(result.coloring)
    return True, regular_certificate_from_decomposition(graph, k, dec)


def regular_certificate_from_decomposition(
    graph: MultiGraph, k: int, dec: Decomposition3
) -> RegularDecomposition3:
    report = verify_decomposition_3(graph, dec)
    if not report.ok:
        name, detail = report.failures()[0]
        raise InvalidCertificate(name, detail)
    if dec.shape == SHAPE_A3:
        raise InvalidCertificate(
            "shape-a1a2", "V(H3)=A3 cannot occur for a regular graph"
        )
    if dec.h1 is None or dec.h2 is None or dec.h3 is None:
        raise InvalidCertificate("three-parts", "H1, H2, H3 must all be present")
    if dec.h0 is not None:
        r = is_regular(induced_edge_subgraph(graph, dec.h0))
        assert r is not None
    else:
        r = 0
    if not 0 <= r < k or (k - r) % 2 != 0:
        raise InvalidCertificate("degree-parity", f"k - r = {k - r} must be even and positive")
    want = (k - r) // 2
    for name, subset in (("H1", dec.h1), ("H2", dec.h2), ("H3", dec.h3)):
        got = is_regular(induced_edge_subgraph(graph, subset))
        if got != want:
            raise InvalidCertificate(
                "equal-degrees", f"{name} is {got}-regular, expected {want}"
            )
    return RegularDecomposition3(r, dec.h0, (dec.h1, dec.h2, dec.h3), dec)


def classify_cubic(graph: MultiGraph) -> int:
    """Palette index of a connected cubic graph without a palette search:
    1 when Class 1, else 3 exactly when a perfect matching exists, else 4."""
    if is_regular(graph) != 3:
        raise NotCubic("classify_cubic requires a 3-regular graph")
    if not is_connected(graph):
        raise NotConnected("classify_cubic requires a connected graph")
    if chromatic_index(graph).chi_prime == 3:
        return 1
    found, _ = has_perfect_matching(graph)
    return 3 if found else 4


def decomposition2_to_json(dec: Decomposition2) -> str:
    def ids(subset: EdgeSubset | None):
        return sorted(subset.members) if subset is not None else None

    return json.dumps({"H0": ids(dec.h0), "H1": ids(dec.h1)})


def decomposition3_to_json(dec: Decomposition3) -> str:
    def ids(subset: EdgeSubset | None):
        return sorted(subset.members) if subset is not None else None

    return json.dumps(
        {
            "H0": ids(dec.h0),
            "H1": ids(dec.h1),
            "H2": ids(dec.h2),
            "H3": ids(dec.h3),
            "A": [sorted(p) for p in dec.partition.parts],
            "shape": dec.shape,
        }
    )


def _subset_from_json(graph: MultiGraph, value) -> EdgeSubset | None:
    if value is None:
        return None
    if not isinstance(value, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in value
    ):
        raise MalformedInput("part must be null or a list of edge ids")
    return EdgeSubset(graph, frozenset(value))


def decomposition_from_json(graph: MultiGraph, payload: str | dict):
    """Parse a certificate; the presence of "A" selects Decomposition3."""
    obj = json.loads(payload) if isinstance(payload, str) else payload
    if not isinstance(obj, dict):
        raise MalformedInput("certificate must be a JSON object")
    if "A" in obj:
        a_sets = obj.get("A")
        if (
            not isinstance(a_sets, list)
            or len(a_sets) != 3
            or not all(isinstance(p, list) for p in a_sets)
        ):
            raise MalformedInput('"A" must be a list of three vertex lists')
        shape = obj.get("shape")
        if shape not in (None, SHAPE_A3, SHAPE_A1A2):
            raise MalformedInput('"shape" must be "A3", "A1A2" or null')
        return Decomposition3(
            _subset_from_json(graph, obj.get("H0")),
            _subset_from_json(graph, obj.get("H1")),
            _subset_from_json(graph, obj.get("H2")),
            _subset_from_json(graph, obj.get("H3")),
            VertexPartition(tuple(frozenset(p) for p in a_sets)),
            shape,
        )
    return Decomposition2(
        _subset_from_json(graph, obj.get("H0")),
        _subset_from_json(graph, obj.get("H1")),
    )
