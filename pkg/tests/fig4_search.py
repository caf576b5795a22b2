"""One-off search for the fragile-matching 4-regular witness on 16 vertices.

Every 16-vertex no-perfect-matching cubic graph is the center-plus-three-
gadgets graph T, so any 16-vertex witness is T plus a perfect matching of
T's complement.  Enumerate those, reject candidates with two edge-disjoint
perfect matchings via a greedy probe, then run the full fragility check and
the exact palette index on survivors.
"""

from __future__ import annotations

import json
import sys
from multiprocessing import Pool

import networkx as nx

import palette_kit as pk
from palette_kit import families as fam

T = fam.no_perfect_matching_cubic()
T_PAIRS = sorted((u, v) for _, u, v in T.edges)
T_SET = set(T_PAIRS)
COMP_ADJ: list[list[int]] = [[] for _ in range(16)]
for u in range(16):
    for v in range(u + 1, 16):
        if (u, v) not in T_SET:
            COMP_ADJ[u].append(v)
            COMP_ADJ[v].append(u)


def all_m0() -> list[tuple[tuple[int, int], ...]]:
    out: list[tuple[tuple[int, int], ...]] = []
    acc: list[tuple[int, int]] = []
    cov: set[int] = set()

    def rec() -> None:
        if len(cov) == 16:
            out.append(tuple(acc))
            return
        v = min(x for x in range(16) if x not in cov)
        for w in COMP_ADJ[v]:
            if w not in cov:
                cov.add(v)
                cov.add(w)
                acc.append((v, w))
                rec()
                acc.pop()
                cov.discard(v)
                cov.discard(w)

    rec()
    return out


def probe(m0) -> tuple[tuple[int, int], ...] | None:
    pairs = T_PAIRS + [(min(u, v), max(u, v)) for u, v in m0]
    g = nx.Graph(pairs)
    p1 = nx.max_weight_matching(g, maxcardinality=True)
    if 2 * len(p1) != 16:
        return None
    g2 = g.copy()
    g2.remove_edges_from(p1)
    p2 = nx.max_weight_matching(g2, maxcardinality=True)
    if 2 * len(p2) == 16:
        return None  # two disjoint perfect matchings: not fragile
    return tuple(sorted(pairs))


def full_check(pairs) -> dict | None:
    graph = pk.MultiGraph.from_pairs(16, pairs)
    if pk.is_regular(graph) != 4 or not pk.is_connected(graph):
        return None
    matchings = []
    inc = graph.incidence

    def rec(cov: set[int], acc: list[int]) -> None:
        if len(cov) == 16:
            matchings.append(frozenset(acc))
            return
        v = min(x for x in range(16) if x not in cov)
        for eid, w in inc[v]:
            if w not in cov:
                cov.add(v)
                cov.add(w)
                acc.append(eid)
                rec(cov, acc)
                acc.pop()
                cov.discard(v)
                cov.discard(w)

    rec(set(), [])
    if not matchings:
        return None
    for pm in matchings:
        rest = pk.EdgeSubset(graph, graph.edge_ids - pm)
        view = pk.induced_edge_subgraph(graph, rest)
        if view.n == graph.n and pk.has_perfect_matching(view)[0]:
            return None
    s = pk.palette_index(graph, max_edges=32).s_check
    return {
        "graph6": pk.encode_graph6(graph),
        "perfect_matchings": len(matchings),
        "s_check": s,
    }


def main() -> None:
    cands = all_m0()
    print(f"candidates: {len(cands)}", flush=True)
    with Pool(8) as pool:
        survivors = [
            p for p in pool.imap_unordered(probe, cands, chunksize=512) if p is not None
        ]
    survivors = sorted(set(survivors))
    print(f"fragility survivors: {len(survivors)}", flush=True)
    hits = []
    for i, pairs in enumerate(survivors):
        res = full_check(pairs)
        if res is not None:
            print(f"[{i}] {json.dumps(res)}", flush=True)
            if res["s_check"] == 3:
                hits.append(res)
    print("WITNESSES:", json.dumps(hits), flush=True)


if __name__ == "__main__":
    sys.exit(main())
