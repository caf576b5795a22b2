"""Command-line front end and the exhaustive-corpus verification pipeline.

Every corpus check is a falsifiable statement from the underlying theory;
a failure prints the offending graph and certificate in full and the run
exits with status 2.  Reports are byte-identical across runs and across
--jobs settings.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .coloring import ClassLabel, chromatic_index
from .decomposition import (
    SHAPE_A3,
    Decomposition2,
    Decomposition3,
    classify_cubic,
    decomposition2_to_json,
    decomposition3_to_json,
    decomposition_from_json,
    extract_decomposition_2,
    extract_decomposition_3,
    regular_corollary_check,
    synthesize_coloring_2,
    synthesize_coloring_3,
    verify_decomposition_2,
    verify_decomposition_3,
)
from .errors import (
    MalformedInput,
    NonMinimalColoring,
    NotConnected,
    NotCubic,
    NotRegular,
    NotTwoPalettes,
    PaletteKitError,
    ResourceLimit,
    TooManyPalettes,
)
from .hypergraphs import associated_hypergraph, pairwise_intersecting
from .multigraph import (
    EdgeSubset,
    MultiGraph,
    degree_profile,
    has_perfect_matching,
    induced_edge_subgraph,
    is_connected,
    is_regular,
)
from .formats import read_graph_file
from .solver import (
    PALETTE_INDEX_EDGE_CAP,
    check_lower_bound_theorem,
    palette_index,
    palettes_of,
    reduce_colors,
)

ENV_MAX_EDGES = "PALETTE_KIT_MAX_EDGES"

CHECK_NAMES = (
    "lemma-not2",
    "thm-cubic",
    "thm-lower",
    "thm-s2",
    "thm-s3",
    "cor-regular3",
)

CSV_HEADER = (
    "index,input,n,m,max_degree,min_degree,chi_prime,class,s_check,k_min"
)


def _default_cap() -> int:
    env = os.environ.get(ENV_MAX_EDGES)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise MalformedInput(f"{ENV_MAX_EDGES} must be an integer, got {env!r}")
    return PALETTE_INDEX_EDGE_CAP


def _check_lemma_not2(graph, ctx):
    if ctx["regular"] is None:
        return "skip", None
    if ctx["s_check"] != 2:
        return "pass", None
    return "fail", {"s_check": ctx["s_check"], "coloring": ctx["colors"]}


def _check_thm_cubic(graph, ctx):
    if ctx["regular"] != 3 or not ctx["connected"]:
        return "skip", None
    got = classify_cubic(graph)
    if got == ctx["s_check"]:
        return "pass", None
    return "fail", {"classify_cubic": got, "palette_index": ctx["s_check"]}


def _check_thm_lower(graph, ctx):
    outcome = check_lower_bound_theorem(graph, max_edges=ctx["max_edges"])
    if not outcome.applicable:
        return "pass", None
    if outcome.satisfied:
        return "pass", None
    return "fail", {"s_check": ctx["s_check"], "min_degree": ctx["min_degree"]}


def _check_thm_s2(graph, ctx):
    coloring = ctx["result"].coloring
    if ctx["s_check"] == 2:
        dec = extract_decomposition_2(coloring)
        report = verify_decomposition_2(graph, dec)
        if not report.ok:
            return "fail", {"clauses": report.failures(), "certificate": decomposition2_to_json(dec)}
        synth = synthesize_coloring_2(graph, dec)
        if len(palettes_of(synth)) != 2:
            return "fail", {"certificate": decomposition2_to_json(dec)}
        return "pass", None
    try:
        extract_decomposition_2(coloring)
    except (NotTwoPalettes, NonMinimalColoring):
        return "pass", None
    return "fail", {"reason": "extraction succeeded although s_check != 2"}


def _check_thm_s3(graph, ctx):
    coloring = ctx["result"].coloring
    if ctx["s_check"] <= 3:
        dec = extract_decomposition_3(coloring)
        report = verify_decomposition_3(graph, dec)
        if not report.ok:
            return "fail", {"clauses": report.failures(), "certificate": decomposition3_to_json(dec)}
        synth = synthesize_coloring_3(graph, dec)
        system = palettes_of(synth)
        if len(system) > 3:
            return "fail", {"certificate": decomposition3_to_json(dec)}
        return "pass", None
    try:
        extract_decomposition_3(coloring)
    except (TooManyPalettes, NonMinimalColoring):
        return "pass", None
    return "fail", {"reason": "extraction succeeded although s_check > 3"}


def _check_cor_regular3(graph, ctx):
    k = ctx["regular"]
    if k is None:
        return "skip", None
    s3, cert = regular_corollary_check(graph, max_edges=ctx["max_edges"])
    if s3 != (ctx["s_check"] == 3):
        return "fail", {"s_check": ctx["s_check"], "corollary_s3": s3}
    if not s3:
        return "pass", None
    synth = synthesize_coloring_3(graph, cert.decomposition)
    if len(palettes_of(synth)) != 3:
        return "fail", {"certificate": decomposition3_to_json(cert.decomposition)}
    return "pass", None


CHECKS = {
    "lemma-not2": _check_lemma_not2,
    "thm-cubic": _check_thm_cubic,
    "thm-lower": _check_thm_lower,
    "thm-s2": _check_thm_s2,
    "thm-s3": _check_thm_s3,
    "cor-regular3": _check_cor_regular3,
}


def _corpus_record(task) -> dict:
    index, text, graph_n, graph_edges, checks, max_edges = task
    graph = MultiGraph(graph_n, tuple(graph_edges))
    record = {
        "index": index,
        "input": text,
        "n": graph.n,
        "m": graph.m,
        "error": None,
        "checks": {},
    }
    dmax, dmin, _ = degree_profile(graph)
    record["max_degree"] = dmax
    record["min_degree"] = dmin
    if graph.m > max_edges:
        record["error"] = f"skipped: {graph.m} edges exceed cap {max_edges}"
        record["checks"] = {name: "capped" for name in checks}
        return record
    try:
        chi = chromatic_index(graph, max_edges=max(max_edges, graph.m))
        result = palette_index(graph, max_edges=max_edges)
    except ResourceLimit as exc:
        record["error"] = f"resource limit: {exc}"
        record["checks"] = {name: "capped" for name in checks}
        return record
    record["chi_prime"] = chi.chi_prime
    record["class"] = 1 if chi.label is ClassLabel.CLASS1 else 2
    record["s_check"] = result.s_check
    record["k_min"] = result.k_min
    ctx = {
        "result": result,
        "s_check": result.s_check,
        "regular": is_regular(graph),
        "connected": is_connected(graph),
        "min_degree": dmin,
        "max_edges": max_edges,
        "colors": json.loads(result.to_json())["colors"],
    }
    for name in checks:
        try:
            outcome, detail = CHECKS[name](graph, ctx)
        except ResourceLimit as exc:
            outcome, detail = "capped", {"reason": str(exc)}
        record["checks"][name] = outcome
        if outcome == "fail":
            record.setdefault("counterexamples", {})[name] = detail
    return record


def _emit(out, text: str) -> None:
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def cmd_corpus(args, out) -> int:
    checks = args.checks.split(",") if args.checks else list(CHECK_NAMES)
    for name in checks:
        if name not in CHECKS:
            raise MalformedInput(f"unknown check {name!r}; choose from {','.join(CHECK_NAMES)}")
    graphs = read_graph_file(args.file)
    tasks = [
        (i, text, g.n, tuple(g.edges), tuple(checks), args.max_edges)
        for i, (text, g) in enumerate(graphs)
    ]
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_corpus_record, tasks, chunksize=8))
    else:
        records = [_corpus_record(t) for t in tasks]
    records.sort(key=lambda r: r["index"])
    tallies = {
        name: {"pass": 0, "fail": 0, "skip": 0, "capped": 0} for name in checks
    }
    failed = False
    for record in records:
        for name, outcome in record["checks"].items():
            tallies[name][outcome] += 1
            if outcome == "fail":
                failed = True
    report = {
        "checks": checks,
        "max_edges": args.max_edges,
        "records": records,
        "tallies": tallies,
    }
    if args.format == "json":
        _emit(out, json.dumps(report, sort_keys=True, separators=(",", ":")))
    else:
        lines = [CSV_HEADER + "," + ",".join(checks) + ",error"]
        for r in records:
            row = [
                str(r["index"]),
                '"' + r["input"].replace('"', '""') + '"',
                str(r["n"]),
                str(r["m"]),
                str(r.get("max_degree", "")),
                str(r.get("min_degree", "")),
                str(r.get("chi_prime", "")),
                str(r.get("class", "")),
                str(r.get("s_check", "")),
                str(r.get("k_min", "")),
            ]
            row.extend(r["checks"].get(name, "") for name in checks)
            row.append('"' + (r["error"] or "").replace('"', '""') + '"')
            lines.append(",".join(row))
        _emit(out, "\n".join(lines))
    if failed:
        for record in records:
            for name, detail in record.get("counterexamples", {}).items():
                sys.stderr.write(
                    f"FALSIFIED {name} on graph {record['index']} "
                    f"({record['input']}): {json.dumps(detail, sort_keys=True)}\n"
                )
        return 2
    return 0


def _load_single(path: str) -> MultiGraph:
    graphs = read_graph_file(path)
    if not graphs:
        raise MalformedInput(f"{path} contains no graphs")
    return graphs[0][1]


def cmd_palette_index(args, out) -> int:
    for _, graph in read_graph_file(args.file):
        result = palette_index(graph, max_edges=args.max_edges)
        _emit(out, result.to_json())
    return 0


def cmd_chromatic_index(args, out) -> int:
    for _, graph in read_graph_file(args.file):
        res = chromatic_index(graph, max_edges=max(args.max_edges, PALETTE_INDEX_EDGE_CAP))
        payload = {
            "chi_prime": res.chi_prime,
            "class": 1 if res.label is ClassLabel.CLASS1 else 2,
            "colors": json.loads(res.witness.to_json())["colors"],
        }
        _emit(out, json.dumps(payload))
    return 0


def cmd_decompose(args, out) -> int:
    graph = _load_single(args.file)
    result = palette_index(graph, max_edges=args.max_edges)
    if args.target == 2:
        dec = extract_decomposition_2(result.coloring)
        _emit(out, decomposition2_to_json(dec))
    else:
        dec = extract_decomposition_3(result.coloring)
        _emit(out, decomposition3_to_json(dec))
    return 0


def cmd_verify(args, out) -> int:
    graph = _load_single(args.file)
    with open(args.certificate, "r", encoding="utf-8") as fh:
        payload = fh.read()
    try:
        dec = decomposition_from_json(graph, payload)
    except MalformedInput as exc:
        _emit(out, json.dumps({"ok": False, "clauses": [["certificate-malformed", False, str(exc)]]}))
        return 2
    if isinstance(dec, Decomposition3):
        report = verify_decomposition_3(graph, dec)
    else:
        report = verify_decomposition_2(graph, dec)
    _emit(
        out,
        json.dumps(
            {"ok": report.ok, "clauses": [list(c) for c in report.clauses]},
            sort_keys=True,
        ),
    )
    return 0 if report.ok else 2


def cmd_hypergraph(args, out) -> int:
    graph = _load_single(args.file)
    result = palette_index(graph, max_edges=args.max_edges)
    hyper = associated_hypergraph(result.coloring)
    _emit(out, hyper.to_json())
    if args.render:
        _emit(out, hyper.render_text())
    return 0


def cmd_cubic_classify(args, out) -> int:
    graph = _load_single(args.file)
    _emit(out, json.dumps({"s_check": classify_cubic(graph)}))
    return 0


def _all_perfect_matchings(graph: MultiGraph) -> list[frozenset[int]]:
    out: list[frozenset[int]] = []
    if graph.n % 2:
        return out
    incidence = graph.incidence

    def rec(covered: set[int], acc: list[int]) -> None:
        if len(covered) == graph.n:
            out.append(frozenset(acc))
            return
        v = min(x for x in range(graph.n) if x not in covered)
        for eid, w in incidence[v]:
            if w not in covered:
                covered.add(v)
                covered.add(w)
                acc.append(eid)
                rec(covered, acc)
                acc.pop()
                covered.discard(v)
                covered.discard(w)

    rec(set(), [])
    return out


def cmd_fig4_witness(args, out) -> int:
    """Scan a 4-regular census for a graph with palette index 3, a perfect
    matching, and no two edge-disjoint perfect matchings."""
    graphs = read_graph_file(args.file)
    searched = 0
    sizes: set[int] = set()
    for index, (text, graph) in enumerate(graphs):
        if is_regular(graph) != 4 or not is_connected(graph):
            continue
        searched += 1
        sizes.add(graph.n)
        matchings = _all_perfect_matchings(graph)
        if not matchings:
            continue
        fragile = True
        for pm in matchings:
            rest = EdgeSubset(graph, graph.edge_ids - pm)
            view = induced_edge_subgraph(graph, rest)
            if view.n == graph.n and has_perfect_matching(view)[0]:
                fragile = False
                break
        if not fragile:
            continue
        result = palette_index(graph, max_edges=max(args.max_edges, graph.m))
        if result.s_check != 3:
            continue
        s3, cert = regular_corollary_check(graph, max_edges=max(args.max_edges, graph.m))
        synth = synthesize_coloring_3(graph, cert.decomposition)
        payload = {
            "found": True,
            "index": index,
            "input": text,
            "n": graph.n,
            "perfect_matchings": len(matchings),
            "s_check": result.s_check,
            "r": cert.r,
            "certificate": json.loads(decomposition3_to_json(cert.decomposition)),
            "synthesis_palettes": len(palettes_of(synth)),
        }
        _emit(out, json.dumps(payload, sort_keys=True))
        return 0
    payload = {
        "found": False,
        "searched": searched,
        "vertex_counts": sorted(sizes),
    }
    _emit(out, json.dumps(payload, sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="palette-kit",
        description="Exact palette index, minimal colorings and decomposition certificates",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("file", help="graph6/sparse6 lines or edge-list JSON")
        p.add_argument(
            "--max-edges",
            type=int,
            default=None,
            help=f"search cap (default {PALETTE_INDEX_EDGE_CAP}; env {ENV_MAX_EDGES})",
        )
        p.set_defaults(run=fn)
        return p

    add("palette-index", cmd_palette_index, help="exact palette index per graph")
    add("chromatic-index", cmd_chromatic_index, help="exact chromatic index per graph")
    p = add("decompose", cmd_decompose, help="extract a decomposition certificate")
    p.add_argument("--target", type=int, choices=(2, 3), default=3)
    p = add("verify", cmd_verify, help="verify a decomposition certificate")
    p.add_argument("--certificate", required=True, help="certificate JSON file")
    p = add("hypergraph", cmd_hypergraph, help="associated hypergraph of a minimal coloring")
    p.add_argument("--render", action="store_true", help="also print plain-text adjacency")
    add("cubic-classify", cmd_cubic_classify, help="palette index of a connected cubic graph")
    p = add("corpus", cmd_corpus, help="run falsifiable checks over a census file")
    p.add_argument("--checks", default=None, help=f"comma list from: {','.join(CHECK_NAMES)}")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    add("fig4-witness", cmd_fig4_witness, help="search a 4-regular census for a fragile-matching witness")
    return parser


def cli_main(argv: list[str] | None = None, out: io.TextIOBase | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.max_edges is None:
            args.max_edges = _default_cap()
        return args.run(args, out)
    except (MalformedInput, FileNotFoundError) as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return 1
    except (NotRegular, NotCubic, NotConnected, NotTwoPalettes, TooManyPalettes,
            NonMinimalColoring, ResourceLimit) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except PaletteKitError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def main() -> None:
    raise SystemExit(cli_main())
