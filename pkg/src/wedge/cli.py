"""Command-line front end: ``wedge check|recognize|gen|family|enumerate|verify``."""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import graph as gr
from . import matching as mt
from . import structures as st
from . import verify as vf
from .corpus import CorpusSpec, enumerate_graphs
from .graph import Graph, GraphError
from .recognizer import classify_one_triangle

PROPERTIES = ("wed", "equimatchable", "gamma-e", "alpha", "randomly-matchable", "girth", "outerplanar")
DEFAULT_PROPS = "wed,equimatchable,gamma-e"


class UsageError(Exception):
    pass


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None


def read_graphs(source: str, fmt: str) -> list[Graph]:
    text = _read_text(source)
    if fmt == "edgelist":
        return [gr.parse_edge_list(text)]
    graphs = [gr.parse_graph6(line) for line in text.splitlines() if line.strip()]
    if not graphs:
        raise UsageError("no graph in input")
    return graphs


def write_graph(g: Graph, fmt: str) -> str:
    if fmt == "edgelist":
        return gr.format_edge_list(g)
    return gr.to_graph6(g) + "\n"


def _bool(b: bool) -> str:
    return "true" if b else "false"


def property_value(g: Graph, prop: str) -> str:
    if prop == "wed":
        return _bool(mt.is_well_edge_dominated(g))
    if prop == "equimatchable":
        return _bool(mt.is_equimatchable(g))
    if prop == "gamma-e":
        return str(mt.edge_domination_number(g))
    if prop == "alpha":
        return str(mt.matching_number(g))
    if prop == "randomly-matchable":
        return _bool(mt.is_randomly_matchable(g))
    if prop == "girth":
        girth = gr.girth(g)
        return "inf" if girth == gr.INFINITY else str(int(girth))
    if prop == "outerplanar":
        return _bool(gr.is_outerplanar(g))
    raise UsageError(f"unknown property {prop!r}")


def _check_lines(args: tuple[Graph, tuple[str, ...]]) -> list[str] | str:
    g, props = args
    try:
        return [f"{p}: {property_value(g, p)}" for p in props]
    except GraphError as exc:
        return str(exc)


def cmd_check(ns: argparse.Namespace) -> int:
    props = tuple(p.strip() for p in ns.props.split(",") if p.strip())
    for p in props:
        if p not in PROPERTIES:
            raise UsageError(f"unknown property {p!r}; choose from {', '.join(PROPERTIES)}")
    graphs = read_graphs(ns.input, ns.format)
    work = [(g, props) for g in graphs]
    if ns.jobs > 1 and len(graphs) > 1:
        with ProcessPoolExecutor(max_workers=ns.jobs) as pool:
            results = list(pool.map(_check_lines, work))
    else:
        results = [_check_lines(w) for w in work]
    status = 0
    for g, lines in zip(graphs, results):
        prefix = f"{gr.to_graph6(g)} " if len(graphs) > 1 else ""
        if isinstance(lines, str):
            print(f"{prefix}error: {lines}", file=sys.stderr)
            status = 2
            continue
        for line in lines:
            print(prefix + line)
    return status


def cmd_recognize(ns: argparse.Namespace) -> int:
    graphs = read_graphs(ns.input, ns.format)
    for g in graphs:
        prefix = f"{gr.to_graph6(g)} " if len(graphs) > 1 else ""
        c = classify_one_triangle(g)
        print(f"{prefix}verdict: {c.verdict}")
        print(f"{prefix}triangle: {' '.join(map(str, c.triangle))}")
        if c.witness is not None:
            print(f"{prefix}family: {c.witness.family}")
            print(f"{prefix}base: {gr.to_graph6(c.witness.base)}")
            print(f"{prefix}w: {c.witness.w}")
        if c.reason:
            print(f"{prefix}reason: {c.reason}")
    return 0


def cmd_gen(ns: argparse.Namespace) -> int:
    sys.stdout.write(write_graph(st.make_named(ns.name), ns.out))
    return 0


def cmd_family(ns: argparse.Namespace) -> int:
    graphs = read_graphs(ns.base, ns.format)
    if len(graphs) != 1:
        raise UsageError("--base must hold exactly one graph")
    base = graphs[0]
    bip = gr.bipartition(base)
    if bip is None:
        raise UsageError("base graph is not bipartite")
    if not 0 <= ns.vertex < base.n:
        raise UsageError(f"vertex {ns.vertex} out of range")
    build = st.build_family_t if ns.family == "t" else st.build_family_f
    sys.stdout.write(write_graph(build(base, bip, ns.vertex), ns.out))
    return 0


def cmd_enumerate(ns: argparse.Namespace) -> int:
    filters = set()
    for flag, name in (
        ("connected", "connected"),
        ("biconnected", "biconnected"),
        ("one_triangle", "exactly-one-triangle"),
        ("outerplanar", "outerplanar"),
        ("triangle_free", "triangle-free"),
        ("bipartite", "bipartite"),
    ):
        if getattr(ns, flag):
            filters.add(name)
    if ns.corpus:
        spec = CorpusSpec(ns.n, "graph6-file", frozenset(filters), ns.corpus)
    else:
        spec = CorpusSpec(ns.n, "native", frozenset(filters))
    for g in enumerate_graphs(spec):
        sys.stdout.write(gr.to_graph6(g) + "\n")
    return 0


def cmd_verify(ns: argparse.Namespace) -> int:
    n = ns.n
    if ns.harness == "theorem1":
        rep = vf.verify_theorem1(n, corpus_file=ns.corpus, jobs=ns.jobs)
    elif ns.harness == "outerplanar":
        rep = vf.verify_outerplanar(n, ns.interpretation, corpus_file=ns.corpus, jobs=ns.jobs)
    elif ns.harness == "theorem8":
        orders = [k for k in (6, 8, 9, 10) if k <= n]
        if not orders:
            raise UsageError("theorem8 needs -n 6 or more")
        rep = vf.verify_theorem8(orders, ns.interpretation, corpus_file=ns.corpus, jobs=ns.jobs)
    elif ns.harness == "lemmas":
        rep = vf.verify_lemma_suite(n, weaken=ns.weaken or (), jobs=ns.jobs)
    else:
        rep = vf.verify_proposition1(n)
    sys.stdout.write(rep.render())
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wedge", description="Edge domination and equimatchability of small graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="print graph properties")
    c.add_argument("input", help="graph file, '-' for stdin")
    c.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    c.add_argument("--props", default=DEFAULT_PROPS, help=f"comma list from {','.join(PROPERTIES)}")
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_check)

    r = sub.add_parser("recognize", help="classify a connected one-triangle graph")
    r.add_argument("input")
    r.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    r.set_defaults(func=cmd_recognize)

    g = sub.add_parser("gen", help="emit a named graph")
    g.add_argument("name", help="house|dreamhouse|crystal|c7star|k3|cycle:N|fan:N|path:N|kbip:R,S|...")
    g.add_argument("--out", choices=("graph6", "edgelist"), default="graph6")
    g.set_defaults(func=cmd_gen)

    f = sub.add_parser("family", help="glue a triangle (t) or house (f) onto a bipartite base")
    f.add_argument("family", choices=("t", "f"))
    f.add_argument("--base", required=True)
    f.add_argument("--vertex", type=int, required=True)
    f.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    f.add_argument("--out", choices=("graph6", "edgelist"), default="graph6")
    f.set_defaults(func=cmd_family)

    e = sub.add_parser("enumerate", help="stream one graph per isomorphism class")
    e.add_argument("-n", type=int, required=True)
    e.add_argument("--connected", action="store_true")
    e.add_argument("--biconnected", action="store_true")
    e.add_argument("--one-triangle", action="store_true")
    e.add_argument("--outerplanar", action="store_true")
    e.add_argument("--triangle-free", action="store_true")
    e.add_argument("--bipartite", action="store_true")
    e.add_argument("--corpus", help="graph6 file to read instead of generating")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="run an exhaustive harness")
    v.add_argument("harness", choices=("theorem1", "outerplanar", "theorem8", "lemmas", "proposition1"))
    v.add_argument("-n", type=int, required=True)
    v.add_argument("--corpus")
    v.add_argument("--interpretation", choices=vf.INTERPRETATIONS, default="biconnected")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--weaken", action="append", choices=vf.WEAKENINGS, help="negative control")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(ns, "jobs", 1) < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return 2
    try:
        return ns.func(ns)
    except (UsageError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


run = main

if __name__ == "__main__":
    sys.exit(main())
