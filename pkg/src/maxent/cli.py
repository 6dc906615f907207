"""``maxent`` command line: generate, rank, transform, verify, orbit.

Reports are line-delimited JSON objects ``{"schema": 1, "tool_version",
"config", "timestamp", "payload"}``.  Exit codes: 0 success, 1 a verification
failure (counterexamples in the payload), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from typing import Any, Iterator, TextIO

import numpy as np

from . import __version__
from . import families as fam
from . import verify as V
from .errors import MaxentError, NonCertifiable, NotBipartite
from .graph import Graph, graph6_decode, graph6_encode, to_dot, two_coloring
from .linalg import gf2_rows, rank_gf2, rank_int
from .parallel import default_workers
from .transforms import jaeger_inverse, lc_orbit, line_graph, local_complement, orbit_partition, switch, switching_class

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def make_report(config: dict, payload: Any) -> dict:
    return {
        "schema": SCHEMA,
        "tool_version": __version__,
        "config": config,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "payload": payload,
    }


def _read_graphs(stream: TextIO) -> Iterator[tuple[int, str]]:
    for lineno, line in enumerate(stream, start=1):
        text = line.strip()
        if text:
            yield lineno, text


def _open_input(path: str | None) -> TextIO:
    return open(path) if path and path != "-" else sys.stdin


# gen -----------------------------------------------------------------


def _candidates(args: argparse.Namespace) -> Iterator[tuple[Graph, dict]]:
    family = args.family
    if family == "perfect-tree":
        if args.n is None:
            raise UsageError("perfect-tree needs --n")
        rng = np.random.default_rng(args.seed)
        while True:
            yield fam.random_perfect_tree(args.n, rng), {"family": family}
    elif family == "cograph":
        if args.n is None:
            raise UsageError("cograph needs --n")
        seeds = np.random.SeedSequence(args.seed)
        while True:
            child = int(seeds.spawn(1)[0].generate_state(1)[0])
            got = fam.gen_cograph_certified(args.n, child)
            if got is None:
                continue
            cograph, trace = got
            double, _ = fam.bipartite_double(cograph.adjacency())
            yield double, {"family": family, "cograph": graph6_encode(cograph), "cotree": trace}
    elif family == "anti-hadamard-double":
        if args.reference:
            mats = [fam.REFERENCE_ANTI_HADAMARD_4]
        else:
            if args.n is None:
                raise UsageError("anti-hadamard-double needs --n or --reference")
            mats = fam.anti_hadamard_search(args.n, args.workers).extra["matrices"]
        for m in mats:
            yield fam.bipartite_double(m)[0], {"family": family, "matrix": m}
    elif family == "unicyclic":
        u = _unicyclic_from_args(args)
        yield u, {"family": family}
    elif family == "join":
        if not args.tree:
            raise UsageError("join needs --tree (graph6 of a perfect tree)")
        t = graph6_decode(args.tree)
        u = _unicyclic_from_args(args)
        yield fam.join_tree_unicyclic(t, u, args.u, args.v), {"family": family}
    else:
        raise UsageError(f"unknown family {family!r}")


def _unicyclic_from_args(args: argparse.Namespace) -> Graph:
    if args.cycle is None:
        raise UsageError("unicyclic graphs need --cycle L")
    selected = [int(x) for x in args.select.split(",")] if args.select else None
    return fam.gen_elementary_unicyclic(args.cycle, selected)


def cmd_gen(args: argparse.Namespace) -> tuple[int, dict]:
    certified, skipped = [], []
    attempts = 0
    limit = max(1, args.count) * 1000
    for g, info in _candidates(args):
        attempts += 1
        try:
            cert = fam.certify_max_schmidt(g)
        except NotBipartite as exc:
            if args.strict:
                raise NonCertifiable(f"{graph6_encode(g)}: {exc}") from exc
            skipped.append({"graph6": graph6_encode(g), "reason": "not bipartite", **info})
            cert = None
        if cert is not None:
            if cert.verdict == fam.MAXIMAL:
                certified.append({**cert.to_dict(), **info})
            elif args.strict:
                raise NonCertifiable(f"{graph6_encode(g)}: verdict {cert.verdict}")
            else:
                skipped.append({"graph6": graph6_encode(g), "reason": cert.verdict, **info})
        if len(certified) >= args.count or attempts >= limit:
            break
    return EXIT_OK, {"family": args.family, "graphs": certified, "skipped": skipped, "attempts": attempts}


# rank ----------------------------------------------------------------


def rank_record(g: Graph) -> dict:
    r = rank_int(g.adjacency()) if g.n else 0
    return {
        "graph6": graph6_encode(g),
        "n": g.n,
        "rank_real": r,
        "rank_gf2": rank_gf2(gf2_rows(g.adjacency())),
        "nullity": g.n - r,
        "bipartite": two_coloring(g) is not None,
    }


def cmd_rank(args: argparse.Namespace) -> tuple[int, list[dict]]:
    out = []
    with _open_input(args.input) as stream:
        for lineno, text in _read_graphs(stream):
            try:
                g = graph6_decode(text)
            except MaxentError as exc:
                raise MaxentError(f"line {lineno}: {exc}") from exc
            out.append(rank_record(g))
    return EXIT_OK, out


# transform -----------------------------------------------------------


def _apply_transform(args: argparse.Namespace, g: Graph) -> Graph:
    op = args.op
    if op == "lc":
        return local_complement(g, _int_arg(args))
    if op == "switch":
        return switch(g, _int_arg(args))
    if op == "line":
        return line_graph(g)
    if op == "inverse":
        return jaeger_inverse(g, "gf2" if args.gf2 else "rational")
    if op == "double":
        return fam.bipartite_double(g.adjacency())[0]
    if op == "pendant":
        return fam.pendant_pair_delete(g, _int_arg(args))
    if op == "path-replace":
        if not args.arg:
            raise UsageError("path-replace needs a comma-separated vertex list")
        return fam.path_replace(g, [int(x) for x in args.arg.split(",")], args.variant)
    raise UsageError(f"unknown transform {op!r}")


def _int_arg(args: argparse.Namespace) -> int:
    try:
        return int(args.arg)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"{args.op} needs an integer vertex argument") from exc


def cmd_transform(args: argparse.Namespace, out: TextIO) -> int:
    errors = open(args.errors, "w") if args.errors else sys.stderr
    status = EXIT_OK
    try:
        with _open_input(args.input) as stream:
            for lineno, text in _read_graphs(stream):
                try:
                    h = _apply_transform(args, graph6_decode(text))
                except MaxentError as exc:
                    errors.write(dumps({"line": lineno, "input": text, "error": type(exc).__name__, "message": str(exc)}) + "\n")
                    status = EXIT_FAIL
                    continue
                out.write(graph6_encode(h) + "\n")
    finally:
        if errors is not sys.stderr:
            errors.close()
    return status


# verify --------------------------------------------------------------


def _n_values(args: argparse.Namespace, default: int) -> list[int]:
    hi = args.n if args.n is not None else default
    lo = args.n_min if args.n_min is not None else hi
    return list(range(lo, hi + 1))


def run_suite(args: argparse.Namespace) -> V.SuiteResult:
    s = args.suite
    n = args.n
    if s == "prop1":
        return V.suite_prop1(n or 8)
    if s == "stabilizer":
        return V.suite_stabilizer(n or 5, samples=args.samples or 0, sample_max=args.sample_max, seed=args.seed)
    if s == "prop2-minedges":
        return V.suite_min_edges(_n_values(args, 5), args.workers)
    if s == "prop-trees":
        return V.suite_trees(n or 10, random_samples=args.samples if args.samples is not None else 10_000, seed=args.seed)
    if s == "prop-unicyclic":
        return V.suite_unicyclic(n or 10)
    if s == "jaeger":
        return V.suite_jaeger(n or 8)
    if s == "tk":
        return V.suite_tk(n or 4)
    if s == "lc-unitary":
        return V.suite_lc_unitary(n or 4)
    if s == "involutions":
        return V.suite_involutions(n or 5)
    if s == "seidel":
        return V.suite_seidel(n or 6)
    if s == "transitivity":
        return V.suite_transitivity(_n_values(args, 4))
    if s == "chromatic":
        return V.suite_chromatic(n or 6)
    if s == "line-graphs":
        return V.suite_line_graphs(n or 10)
    if s == "nullity-ops":
        return V.suite_nullity_ops(n or 5)
    if s == "singular-fraction":
        return V.suite_singular_fraction(_n_values(args, 4), samples=args.samples or 1_000_000, seed=args.seed, workers=args.workers)
    raise UsageError(f"unknown suite {s!r}")


def cmd_verify(args: argparse.Namespace) -> tuple[int, dict]:
    res = run_suite(args)
    return (EXIT_OK if res.passed else EXIT_FAIL), res.to_dict()


# orbit ---------------------------------------------------------------


def cmd_orbit(args: argparse.Namespace) -> tuple[int, Any]:
    if args.all_n is not None:
        rep = orbit_partition(args.all_n, args.kind)
        payload = rep.to_dict()
        if args.members:
            payload["orbits"] = rep.orbits
        return EXIT_OK, payload
    out = []
    fn = {"lc": lc_orbit, "switch": switching_class}.get(args.kind)
    if fn is None:
        raise UsageError("orbit of a single graph supports kinds lc and switch; use --all-n for both")
    with _open_input(args.input) as stream:
        for lineno, text in _read_graphs(stream):
            g = graph6_decode(text)
            members = [graph6_encode(h) for h in fn(g)]
            out.append({"graph6": text, "kind": args.kind, "size": len(members), "members": members})
    return EXIT_OK, out


# plumbing ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="maxent", description=__doc__.split("\n")[0])
    p.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--workers", type=int, default=None, help="default: $MAXENT_WORKERS or 1")
    common.add_argument("--output", "-o", default=None)
    common.add_argument("--format", choices=["json", "graph6", "dot"], default="json")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate certified maximal graphs")
    g.add_argument("family", choices=["perfect-tree", "cograph", "anti-hadamard-double", "unicyclic", "join"])
    g.add_argument("--n", type=int)
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--cycle", type=int)
    g.add_argument("--select", help="comma-separated cycle vertices receiving a pendant")
    g.add_argument("--tree", help="graph6 of a perfect tree (join)")
    g.add_argument("--u", type=int, default=1)
    g.add_argument("--v", type=int, default=1)
    g.add_argument("--reference", action="store_true", help="use the reference 4x4 anti-Hadamard matrix (mu = 16)")
    g.add_argument("--strict", action="store_true")

    r = sub.add_parser("rank", parents=[common], help="ranks of graph6 graphs")
    r.add_argument("--input", "-i", default=None)

    t = sub.add_parser("transform", parents=[common], help="transform graph6 graphs")
    t.add_argument("op", choices=["lc", "switch", "line", "inverse", "double", "pendant", "path-replace"])
    t.add_argument("arg", nargs="?")
    t.add_argument("--input", "-i", default=None)
    t.add_argument("--errors", default=None, help="sidecar file for per-line errors (default stderr)")
    t.add_argument("--variant", choices=sorted(fam.PATH_VARIANTS), default=fam.DEFAULT_PATH_VARIANT)
    t.add_argument("--gf2", action="store_true", help="invert over GF(2) (exploratory)")

    v = sub.add_parser("verify", parents=[common], help="run a property suite")
    v.add_argument("suite", choices=sorted(V.SUITES))
    v.add_argument("--n", type=int)
    v.add_argument("--n-min", type=int)
    v.add_argument("--samples", type=int)
    v.add_argument("--sample-max", type=int, default=8)

    o = sub.add_parser("orbit", parents=[common], help="orbits under lc / switch / both")
    o.add_argument("kind", choices=["lc", "switch", "both"])
    o.add_argument("--all-n", type=int)
    o.add_argument("--members", action="store_true")
    o.add_argument("--input", "-i", default=None)
    return p


def _config(args: argparse.Namespace) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("output",)}


def _graphs_in(payload: Any) -> list[str]:
    if isinstance(payload, dict) and "graphs" in payload:
        return [rec["graph6"] for rec in payload["graphs"]]
    if isinstance(payload, list):
        return [rec["graph6"] for rec in payload if "graph6" in rec]
    return []


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.workers is None:
        args.workers = default_workers()
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        if args.command == "transform":
            return cmd_transform(args, out)
        handler = {"gen": cmd_gen, "rank": cmd_rank, "verify": cmd_verify, "orbit": cmd_orbit}[args.command]
        code, payload = handler(args)
        if args.format == "json":
            out.write(dumps(make_report(_config(args), payload)) + "\n")
        elif args.format == "graph6":
            out.writelines(s + "\n" for s in _graphs_in(payload))
        else:
            out.writelines(to_dot(graph6_decode(s)) for s in _graphs_in(payload))
        return code
    except (MaxentError, UsageError) as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
