"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import sys
from typing import Optional

from . import families as fam
from .enumeration import GraphClassSpec, Objective, Universe, extremal_search, universe_graphs
from .errors import SomborError
from .formats import encode_graph6, read_graphs
from .index import sombor_exact, sombor_index
from .verification import (
    THEOREM_IDS,
    check_caps,
    parameter_grid,
    reports_to_csv,
    reports_to_json,
    verify_theorem,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _terms_text(rs) -> str:
    return "{" + ", ".join(f"{r}:{c}" for r, c in rs.terms.items()) + "}"


def parse_range(text: str) -> list[int]:
    """``"5"``, ``"4..8"`` or ``"3,5,7"`` to a list of ints."""
    values: list[int] = []
    try:
        for part in text.split(","):
            if ".." in part:
                lo, hi = part.split("..")
                values.extend(range(int(lo), int(hi) + 1))
            else:
                values.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use N, A..B or A,B,C") from None
    return values


@contextlib.contextmanager
def _output(path: Optional[str]):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def cmd_compute(args) -> int:
    source = sys.stdin if args.input in (None, "-") else open(args.input, encoding="utf-8")
    with source, _output(args.out) as out:
        rows = []
        for i, G in enumerate(read_graphs(source, args.input_format), start=1):
            if not G.is_connected():
                print(f"warning: graph {i} is disconnected; summing over its edges anyway", file=sys.stderr)
            rows.append((i, G, sombor_index(G), sombor_exact(G)))
        if args.format == "json":
            json.dump([{"index": i, "graph6": encode_graph6(G), "n": G.n, "m": G.size,
                        "sombor": value, "radical_terms": exact.to_json()}
                       for i, G, value, exact in rows], out, indent=2)
            out.write("\n")
        elif args.format == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(["index", "graph6", "n", "m", "sombor", "radical"])
            for i, G, value, exact in rows:
                writer.writerow([i, encode_graph6(G), G.n, G.size, _fmt(value), _terms_text(exact)])
        else:
            for i, G, value, exact in rows:
                out.write(f"{i}\t{encode_graph6(G)}\t{_fmt(value)}\t{_terms_text(exact)}\n")
    return EXIT_OK


def _family(args):
    """Return (graph, closed-form exact value) for the requested family."""
    name, n = args.name, args.n
    if name == "path":
        return fam.path(n), fam.path_so_exact(n)
    if name == "cycle":
        return fam.cycle(n), fam.cycle_so_exact(n)
    if name == "starlike":
        if args.lengths:
            lengths = tuple(int(x) for x in args.lengths.split(","))
            spec = fam.StarLikeSpec(n, args.delta, args.k, lengths)
        else:
            spec = fam.default_star_like_spec(n, args.delta, args.k)
        return fam.star_like_tree(spec), fam.star_like_so_exact(n, args.delta, args.k)
    if name == "lollipop":
        return fam.lollipop(n, args.g), fam.lollipop_so_exact(n)
    if name == "cn1":
        return fam.cycle_with_pendant(n), fam.cycle_with_pendant_so_exact(n)
    if name == "ung":
        return fam.u_n_g(n, args.g), fam.max_so_unicyclic_exact(n, args.g)
    if name == "kite":
        return fam.kite_with_pendants(n, args.k), fam.max_so_pendent_exact(n, args.k)
    raise SomborError(f"unknown family {name!r}")


def cmd_family(args) -> int:
    needed = {"starlike": ("delta", "k"), "lollipop": ("g",), "ung": ("g",), "kite": ("k",)}
    for flag in needed.get(args.name, ()):
        if getattr(args, flag) is None:
            raise SomborError(f"family {args.name} needs --{flag}")
    G, closed = _family(args)
    exact = sombor_exact(G)
    record = {"family": args.name, "graph6": encode_graph6(G), "sombor": sombor_index(G),
              "radical_terms": exact.to_json(), "closed_form": float(closed),
              "closed_form_terms": closed.to_json(), "equal": exact == closed}
    with _output(args.out) as out:
        if args.format == "json":
            json.dump(record, out, indent=2)
            out.write("\n")
        elif args.format == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(["family", "graph6", "sombor", "closed_form", "equal"])
            writer.writerow([args.name, record["graph6"], _fmt(record["sombor"]),
                             _fmt(record["closed_form"]), str(record["equal"]).lower()])
        else:
            out.write(f"graph6\t{record['graph6']}\n"
                      f"sombor\t{_fmt(record['sombor'])}\t{_terms_text(exact)}\n"
                      f"closed_form\t{_fmt(record['closed_form'])}\t{_terms_text(closed)}\n"
                      f"equal\t{str(record['equal']).lower()}\n")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    with _output(args.out) as out:
        graphs = universe_graphs(args.n, Universe(args.universe), args.workers)
        if args.format == "json":
            json.dump([encode_graph6(G) for G in graphs], out)
            out.write("\n")
        else:
            for G in graphs:
                out.write(encode_graph6(G) + "\n")
    return EXIT_OK


def _spec_from_args(args) -> GraphClassSpec:
    return GraphClassSpec(
        order=args.n, max_degree=args.max_degree, girth=args.girth,
        pendent_count=args.pendent, cut_edge_count=args.cut_edges,
        unicyclic=True if args.unicyclic else None, tree=True if args.tree else None,
    )


def cmd_search(args) -> int:
    result = extremal_search(_spec_from_args(args), Objective(args.objective), Universe(args.universe),
                             workers=args.workers)
    with _output(args.out) as out:
        if args.format == "json":
            json.dump(result.to_json(), out, indent=2)
            out.write("\n")
        else:
            out.write(f"optimum\t{_fmt(result.optimum_float)}\t{_terms_text(result.optimum)}\n"
                      f"class_size\t{result.class_size}\n")
            for G in result.witnesses:
                out.write(f"witness\t{encode_graph6(G)}\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    orders = args.n
    universe = args.universe
    for n in orders:
        check_caps(args.theorem, n, universe)
    second = args.delta if args.theorem == "min-delta" else args.g if args.theorem in (
        "girth-min", "unicyclic-max") else args.k
    tuples = []
    for n in orders:
        if args.theorem == "girth-min" and args.pooled:
            tuples.append({"n": n, "g": None})
            continue
        for params in parameter_grid(args.theorem, n, second):
            if args.theorem == "girth-min" and universe:
                params["universe"] = universe
            tuples.append(params)
    reports = [verify_theorem(args.theorem, workers=args.workers, **p) for p in tuples]
    with _output(args.out) as out:
        if args.format == "json":
            out.write(reports_to_json(reports) + "\n")
        elif args.format == "csv":
            out.write(reports_to_csv(reports))
        else:
            for r in reports:
                status = "PASS" if r.passed else "FAIL"
                out.write(f"{status}\t{r.theorem}\t{r.params_text()}\tbound={_fmt(float(r.bound_value))}"
                          f"\toptimum={_fmt(float(r.search_value))}\twitnesses={len(r.witnesses)}"
                          f"\tclass={r.class_size}\t{r.elapsed:.2f}s\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sombor", description="Sombor index toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json", "csv")):
        p.add_argument("--format", choices=formats, default="text", help="output format")
        p.add_argument("--out", help="output file (default stdout)")

    p = sub.add_parser("compute", help="Sombor index of every graph in the input")
    p.add_argument("-i", "--input", help="input file (default stdin)")
    p.add_argument("--input-format", choices=("auto", "graph6", "edgelist"), default="auto")
    common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("family", help="build an extremal family member and its closed form")
    p.add_argument("--name", required=True, choices=("path", "cycle", "starlike", "lollipop", "cn1", "ung", "kite"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--lengths", help="star-like branch lengths, comma separated")
    common(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("enumerate", help="one graph6 line per isomorphism class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--universe", choices=[u.value for u in Universe], default="general")
    p.add_argument("--workers", type=int, default=1)
    common(p, ("text", "json"))
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("search", help="exact extremal SO over a graph class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--girth", type=int)
    p.add_argument("--pendent", type=int)
    p.add_argument("--cut-edges", type=int)
    p.add_argument("--unicyclic", action="store_true")
    p.add_argument("--tree", action="store_true")
    p.add_argument("--objective", choices=("min", "max"), default="min")
    p.add_argument("--universe", choices=[u.value for u in Universe], default="general")
    p.add_argument("--workers", type=int, default=1)
    common(p, ("text", "json"))
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="check a bound and its extremal graphs by exhaustive search")
    p.add_argument("--theorem", required=True, choices=THEOREM_IDS)
    p.add_argument("--n", type=parse_range, required=True, help="order(s): N, A..B or A,B,C")
    p.add_argument("--delta", type=parse_range)
    p.add_argument("--g", type=parse_range)
    p.add_argument("--k", type=parse_range, help="pendent vertices or cut edges")
    p.add_argument("--pooled", action="store_true",
                   help="girth-min: one class of all non-cycle unicyclic graphs")
    p.add_argument("--universe", choices=("unicyclic", "general"),
                   help="girth-min: search universe (default unicyclic)")
    p.add_argument("--workers", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be positive")
    try:
        return args.func(args)
    except (SomborError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
