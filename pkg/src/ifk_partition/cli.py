"""Command-line entry point.

Exit codes: 0 success or feasible, 1 infeasible / not critical / verification
failed, 2 usage or parse error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Optional, Sequence

from . import constructions, density, discharging, graph, solver
from .graph import GraphError, PrecoloredGraph, VertexState

OK, NO, USAGE, BUDGET = 0, 1, 2, 3

# girth lower bound -> the k whose threshold exceeds 2g/(g-2)
GIRTH_TO_K = ((9, 3), (8, 4), (7, 6))


class UsageError(Exception):
    pass


def frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _load(path: str) -> PrecoloredGraph:
    return graph.parse_graph(_read(path))


def _ids(vs) -> str:
    return " ".join(map(str, sorted(vs)))


def cmd_coeffs(args, out) -> int:
    t = density.coefficients(args.k)
    out.write(f"k\t{t.k}\nC_E\t{t.C_E}\nC_I\t{t.C_I}\n")
    for j, c in enumerate(t.C_U):
        out.write(f"C_U\t{j}\t{c}\n")
    for j, c in enumerate(t.C_F, start=1):
        out.write(f"C_F\t{j}\t{c}\n")
    return OK


def cmd_threshold(args, out) -> int:
    out.write(frac(density.f_threshold(args.k)) + "\n")
    return OK


def cmd_mad(args, out) -> int:
    G = _load(args.file)
    value, witness = density.mad(G)
    out.write(f"{frac(value)}\nwitness {_ids(witness)}\n")
    return OK


def cmd_girth(args, out) -> int:
    g = graph.girth(_load(args.file))
    out.write(("inf" if g == math.inf else str(g)) + "\n")
    return OK


def cmd_potential(args, out) -> int:
    G = _load(args.file)
    if args.subset is not None:
        try:
            R = [int(x) for x in args.subset.split(",") if x.strip()]
        except ValueError:
            raise UsageError(f"bad --subset list {args.subset!r}") from None
        out.write(f"{density.potential(G, R)}\n")
        return OK
    value, witness = density.min_potential_subset(G, args.min)
    out.write(f"{value}\nwitness {_ids(witness)}\n")
    return OK


def _color_one(path: str, max_nodes: Optional[int]):
    G = _load(path)
    try:
        c = solver.solve(G, max_nodes=max_nodes)
    except solver.BudgetExceeded:
        return BUDGET, "budget exceeded\n", G, None
    if c is None:
        return NO, "infeasible\n", G, None
    return OK, solver.format_coloring(c), G, c


def _color_job(job):
    path, max_nodes = job
    try:
        code, text, _, _ = _color_one(path, max_nodes)
    except (GraphError, OSError) as exc:
        return USAGE, f"error: {exc}\n"
    return code, text


def cmd_color(args, out) -> int:
    if len(args.files) == 1:
        code, text, G, c = _color_one(args.files[0], args.max_nodes)
        out.write(text)
        if args.dot and c is not None:
            with open(args.dot, "w") as fh:
                fh.write(solver.to_dot(G, c))
        return code
    if args.dot:
        raise UsageError("--dot needs a single input file")
    jobs = [(p, args.max_nodes) for p in args.files]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_color_job, jobs))
    else:
        results = [_color_job(j) for j in jobs]
    worst = OK
    for path, (code, text) in zip(args.files, results):
        out.write(f"# {path}\n{text}")
        worst = max(worst, code)
    return worst


def cmd_verify(args, out) -> int:
    G = _load(args.file)
    try:
        labels = solver.parse_coloring(_read(args.coloring), G.n)
        problems = solver.verify(G, labels)
    except solver.ColoringError as exc:
        raise UsageError(str(exc)) from None
    if not problems:
        out.write("ok\n")
        return OK
    for p in problems:
        out.write(f"{p}\n")
    return NO


def cmd_critical(args, out) -> int:
    G = _load(args.file)
    try:
        verdict = solver.is_critical(G, max_nodes=args.max_nodes)
    except solver.BudgetExceeded:
        out.write("budget exceeded\n")
        return BUDGET
    out.write(f"{verdict}\n")
    if verdict.coloring is not None:
        out.write(solver.format_coloring(verdict.coloring))
    for cert in verdict.certificates:
        out.write(f"# {cert.kind} {' '.join(map(str, cert.target))}: colorable\n")
    return OK if verdict.is_critical else NO


def _state(kind: str, j: int) -> VertexState:
    if kind == "I":
        if j != 0:
            raise UsageError("the I gadget takes J = 0")
        return VertexState.I()
    return VertexState(kind, j)


def cmd_gen(args, out) -> int:
    if args.what == "sharpness":
        G = constructions.sharpness_graph(args.k, args.t)
        names = constructions.sharpness_layout(args.k, args.t)
        header = [f"G_{{{args.k},{args.t}}}: sharpness graph", "vertex roles:"]
        header += [f"  {v} {name}" for v, name in enumerate(names)]
        out.write(graph.serialize_graph(G, header))
        return OK
    rg = constructions.gadget(_state(args.kind, args.j), args.k)
    G = PrecoloredGraph(rg.graph, args.k)
    label = "I" if args.kind == "I" else f"{args.kind}{args.j}"
    out.write(graph.serialize_graph(G, [f"gadget {label} for k={args.k}", f"root {rg.root}"]))
    return OK


def cmd_expand(args, out) -> int:
    G = _load(args.file)
    H, emb = constructions.expand_precoloring(G)
    header = [f"gadget expansion; original vertices keep ids 0..{len(emb) - 1}"]
    out.write(graph.serialize_graph(H, header))
    return OK


def cmd_discharge(args, out) -> int:
    G = _load(args.file)
    report = discharging.discharge(G)
    out.write(discharging.report_tsv(report))
    return OK if report.identity_holds and report.conserved else NO


def cmd_girth_corollary(args, out) -> int:
    raw = _read(args.file)
    if "planar" not in graph.comment_lines(raw):
        raise UsageError("input must assert planarity with a '# planar' comment line")
    G = graph.parse_graph(raw)
    if not G.is_trivial:
        raise UsageError("the girth corollary applies to graphs without precoloring")
    g = graph.girth(G)
    k = next((k for bound, k in GIRTH_TO_K if g >= bound), None)
    if k is None:
        raise UsageError(f"girth {g} is below 7; no corollary applies")
    H = PrecoloredGraph(G.graph, k)
    out.write(f"# girth {'inf' if g == math.inf else g}\n# k {k}\n")
    if g != math.inf:
        out.write(f"# mad < {frac(Fraction(2 * g, g - 2))} <= f({k}) = {frac(density.f_threshold(k))}\n")
    try:
        c = solver.solve(H, max_nodes=args.max_nodes)
    except solver.BudgetExceeded:
        out.write("budget exceeded\n")
        return BUDGET
    if c is None:
        out.write("infeasible\n")
        return NO
    out.write(solver.format_coloring(c))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ifk", description="(I,F_k)-partitions of sparse graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("coeffs", help="print the potential coefficients as TSV")
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_coeffs)

    s = sub.add_parser("threshold", help="print f(k) as num/den")
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_threshold)

    s = sub.add_parser("mad", help="exact maximum average degree")
    s.add_argument("file")
    s.set_defaults(func=cmd_mad)

    s = sub.add_parser("girth", help="length of a shortest cycle")
    s.add_argument("file")
    s.set_defaults(func=cmd_girth)

    s = sub.add_parser("potential", help="potential of a set, or a minimum-potential set")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--subset", help="comma-separated vertex ids")
    g.add_argument("--min", choices=["all", "nonempty", "proper"])
    s.set_defaults(func=cmd_potential)

    s = sub.add_parser("color", help="find an (I,F_k)-coloring")
    s.add_argument("files", nargs="+", metavar="FILE")
    s.add_argument("--max-nodes", type=int, default=None)
    s.add_argument("--dot", metavar="PATH", help="also write a DOT drawing of the coloring")
    s.add_argument("--jobs", type=int, default=1, help="worker processes for several files")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("verify", help="check a coloring file")
    s.add_argument("file")
    s.add_argument("coloring")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("critical", help="decide (I,F_k)-criticality")
    s.add_argument("file")
    s.add_argument("--max-nodes", type=int, default=None)
    s.set_defaults(func=cmd_critical)

    s = sub.add_parser("gen", help="generate constructions")
    gen = s.add_subparsers(dest="what", required=True)
    t = gen.add_parser("sharpness", help="the sharpness graph G_{K,T}")
    t.add_argument("k", type=int, metavar="K")
    t.add_argument("t", type=int, metavar="T")
    t.set_defaults(func=cmd_gen)
    t = gen.add_parser("gadget", help="the gadget simulating state KIND J")
    t.add_argument("kind", choices=["U", "F", "I"], metavar="KIND")
    t.add_argument("j", type=int, metavar="J")
    t.add_argument("k", type=int, metavar="K")
    t.set_defaults(func=cmd_gen)

    s = sub.add_parser("expand", help="replace precolored vertices by gadgets")
    s.add_argument("file")
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("discharge", help="charges before and after discharging")
    s.add_argument("file")
    s.set_defaults(func=cmd_discharge)

    s = sub.add_parser("girth-corollary", help="color a planar graph of girth >= 7")
    s.add_argument("file")
    s.add_argument("--max-nodes", type=int, default=None)
    s.set_defaults(func=cmd_girth_corollary)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args, out)
    except (UsageError, GraphError, ValueError, OSError) as exc:
        err.write(f"ifk: error: {exc}\n")
        return USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
