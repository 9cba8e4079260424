"""Command-line surface: constructions, formulas, oracle runs, and audits.

Exit codes: 0 success; 2 usage or validation error; 3 budget exhaustion
(partial results are still written when an output path was given; scan rows
that tripped the budget are reported as unknown and also yield exit 3).

Family specs are comma-separated pattern tokens, order significant:
``wN`` wheel, ``kN`` complete, ``cN`` cycle, ``pN`` path, ``g6:<text>`` a
graph6 literal.  Formula specs: ``turan:R``, ``wheel:K``,
``wheels:K1,K2,...`` (descending), ``union-turan:R`` (layered formula over
the given family with Turan inner values).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from .coloring import criticality
from .constructions import (
    ConstructionRecipe,
    InfeasibleConstructionError,
    best_feasible_wheel_graph,
    build_from_recipe,
    union_extremal_graph,
    union_extremal_value,
    union_wheels_value,
    wheel_construction_recipe,
    wheel_extremal_value,
)
from .containment import ForbiddenFamily, is_free
from .graph6 import Graph6ParseError, decode_graph6, encode_graph6, read_graph6_lines
from .graphs import SimpleGraph, complete, cycle, path, turan, turan_edge_count, wheel
from .oracle import (
    BudgetExceededError,
    SearchBudget,
    brute_force_ex,
    maximality_audit,
    threshold_scan,
)
from .stability import min_degree_audit, min_internal_partition, structure_audit


def parse_pattern_token(token: str) -> SimpleGraph:
    """One family token: wN, kN, cN, pN, or g6:<text>."""
    t = token.strip()
    if t.startswith("g6:"):
        return decode_graph6(t[3:])
    if len(t) >= 2 and t[0] in "wkcp" and t[1:].isdigit():
        n = int(t[1:])
        builder = {"w": wheel, "k": complete, "c": cycle, "p": path}[t[0]]
        return builder(n)
    raise ValueError(
        f"unrecognized pattern token {token!r} (use wN, kN, cN, pN, or g6:...)"
    )


def parse_family(spec: str) -> ForbiddenFamily:
    tokens = [t for t in spec.split(",") if t.strip()]
    if not tokens:
        raise ValueError("empty family spec")
    return ForbiddenFamily([parse_pattern_token(t) for t in tokens])


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ValueError(f"{what} must be a comma-separated integer list, got {text!r}")


def build_formula(
    spec: str, family: ForbiddenFamily | None
) -> Callable[[int], int]:
    """Resolve a formula spec to a total function of n."""
    kind, _, arg = spec.partition(":")
    if kind == "turan":
        r = int(arg)
        if r < 1:
            raise ValueError(f"turan formula needs r >= 1, got {r}")
        return lambda n: turan_edge_count(n, r)
    if kind == "wheel":
        k = int(arg)
        return lambda n: wheel_extremal_value(n, k).value
    if kind == "wheels":
        ks = _parse_int_list(arg, "wheels formula ks")
        return lambda n: union_wheels_value(n, ks).value
    if kind == "union-turan":
        r = int(arg)
        if r < 1:
            raise ValueError(f"union-turan formula needs r >= 1, got {r}")
        if family is None:
            raise ValueError("union-turan formula needs a --family")
        provider = lambda m, ell: turan_edge_count(m, r)
        return lambda n: union_extremal_value(n, family, provider).value
    raise ValueError(
        f"unrecognized formula {spec!r} (use turan:R, wheel:K, wheels:K1,..., "
        f"or union-turan:R)"
    )


def build_seeds_provider(
    spec: str, family: ForbiddenFamily
) -> Callable[[int], tuple[SimpleGraph, ...]]:
    """Construction seeds matching a formula spec, filtered to free graphs.

    Seeding only sharpens the oracle's pruning bound; a candidate that is
    not family-free (or not buildable at this order) is silently dropped.
    """

    def candidates(n: int) -> list[SimpleGraph]:
        kind, _, arg = spec.partition(":")
        out: list[SimpleGraph] = []
        if kind == "turan":
            out.append(turan(n, int(arg)))
        elif kind == "wheel":
            try:
                out.append(best_feasible_wheel_graph(n, int(arg)))
            except (ValueError, InfeasibleConstructionError):
                pass
        elif kind == "wheels":
            ks = _parse_int_list(arg, "wheels formula ks")
            for i, k in enumerate(ks, start=1):
                try:
                    out.append(best_feasible_wheel_graph(n, k, ell=i))
                except (ValueError, InfeasibleConstructionError):
                    pass
        elif kind == "union-turan":
            r = int(arg)
            for ell in range(1, len(family) + 1):
                m = n - ell + 1
                if m >= 1:
                    out.append(union_extremal_graph(n, ell, turan(m, r)))
        return out

    def provide(n: int) -> tuple[SimpleGraph, ...]:
        return tuple(
            g for g in candidates(n) if g.n == n and is_free(g, family)
        )

    return provide


def _write(path: str, text: str):
    with open(path, "w") as fh:
        fh.write(text)


def _json_doc(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _read_graph_input(path: str) -> list[SimpleGraph]:
    text = sys.stdin.read() if path == "-" else open(path).read()
    graphs = read_graph6_lines(text)
    if not graphs:
        raise ValueError(f"no graphs found in {path!r}")
    return graphs


def _budget(args) -> SearchBudget | None:
    if args.budget_candidates is None and args.budget_seconds is None:
        return None
    return SearchBudget(args.budget_candidates, args.budget_seconds)


def _check_common(args):
    if args.threads < 1:
        raise ValueError(f"--threads must be >= 1, got {args.threads}")


# === subcommand handlers ===


def _cmd_gen(args) -> int:
    _check_common(args)
    if args.kind == "wheel":
        if args.n is None or args.k is None:
            raise ValueError("gen --kind wheel needs --n and --k")
        if args.k < 3:
            raise ValueError(f"wheel construction needs k >= 3, got {args.k}")
        recipe = wheel_construction_recipe(args.n, args.k, n0=args.n0, ell=args.ell)
        g = build_from_recipe(recipe)
        if args.json:
            _write(args.json, recipe.to_json())
    elif args.kind == "standard":
        if args.spec is None:
            raise ValueError("gen --kind standard needs --spec")
        if args.json:
            raise ValueError("--json recipes exist only for --kind wheel")
        t = args.spec.strip()
        if t.startswith("turan:"):
            nr = _parse_int_list(t[len("turan:"):], "turan spec")
            if len(nr) != 2:
                raise ValueError(f"turan spec needs n,r, got {t!r}")
            g = turan(nr[0], nr[1])
        else:
            g = parse_pattern_token(t)
    else:
        raise ValueError(f"unknown gen kind {args.kind!r}")
    line = encode_graph6(g) + "\n"
    sys.stdout.write(line)
    if args.out:
        _write(args.out, line)
    return 0


def _cmd_ex_formula(args) -> int:
    _check_common(args)
    chosen = [x for x in (args.wheel_k, args.wheels, args.turan_r) if x is not None]
    if len(chosen) != 1:
        raise ValueError("pick exactly one of --wheel-k, --wheels, --turan-r")
    lines: list[str]
    if args.wheel_k is not None:
        fv = wheel_extremal_value(args.n, args.wheel_k)
        lines = [
            f"value {fv.value}",
            "argmax n0: " + ", ".join(str(x) for x in fv.argmax),
        ]
        doc = {
            "schema": "formula-value/1",
            "formula": f"wheel:{args.wheel_k}",
            "n": args.n,
            "value": fv.value,
            "argmax": list(fv.argmax),
        }
    elif args.wheels is not None:
        ks = _parse_int_list(args.wheels, "--wheels")
        uw = union_wheels_value(args.n, ks)
        lines = [
            f"value {uw.value}",
            "argmax (i, n0): " + ", ".join(f"({i}, {n0})" for i, n0 in uw.argmax),
            "per-index argmax l: "
            + ", ".join(str(x) for x in uw.per_index.argmax),
        ]
        if uw.flagged_ks:
            lines.append(
                "note: entries with k < 3 have no closed-form backing: "
                + ", ".join(str(k) for k in uw.flagged_ks)
            )
        doc = {
            "schema": "formula-value/1",
            "formula": f"wheels:{','.join(str(k) for k in ks)}",
            "n": args.n,
            "value": uw.value,
            "argmax": [list(p) for p in uw.argmax],
            "per_index_argmax": list(uw.per_index.argmax),
            "flagged_ks": list(uw.flagged_ks),
        }
    else:
        value = turan_edge_count(args.n, args.turan_r)
        lines = [f"value {value}"]
        doc = {
            "schema": "formula-value/1",
            "formula": f"turan:{args.turan_r}",
            "n": args.n,
            "value": value,
            "argmax": [],
        }
    sys.stdout.write("\n".join(lines) + "\n")
    if args.json:
        _write(args.json, _json_doc(doc))
    return 0


def _result_text(result) -> str:
    lines = [
        f"n {result.n}",
        f"ex {result.ex_value}",
        f"exhaustive {'true' if result.exhaustive else 'false'}",
        f"candidates {result.candidates}",
    ]
    lines += [f"witness {encode_graph6(w)}" for w in result.witnesses]
    return "\n".join(lines) + "\n"


def _cmd_brute_force(args) -> int:
    _check_common(args)
    family = parse_family(args.family)
    seeds = tuple(decode_graph6(s) for s in args.seed_g6 or ())
    try:
        result = brute_force_ex(
            args.n,
            family,
            budget=_budget(args),
            seeds=seeds,
            hard_cap=args.hard_cap,
            allow_large=args.allow_large,
        )
    except BudgetExceededError as err:
        sys.stderr.write(f"budget exceeded: {err}\n")
        if args.json:
            _write(args.json, err.partial.to_json())
        return 3
    sys.stdout.write(_result_text(result))
    if args.json:
        _write(args.json, result.to_json())
    if args.graph6:
        _write(args.graph6, "".join(encode_graph6(w) + "\n" for w in result.witnesses))
    return 0


def _cmd_scan(args) -> int:
    _check_common(args)
    family = parse_family(args.family)
    if args.n_to < args.n_from:
        raise ValueError(f"--n-to {args.n_to} is below --n-from {args.n_from}")
    formula = build_formula(args.formula, family)
    seeds = None if args.no_seeds else build_seeds_provider(args.formula, family)
    report = threshold_scan(
        family,
        range(args.n_from, args.n_to + 1),
        formula,
        budget=_budget(args),
        seeds_provider=seeds,
        hard_cap=args.hard_cap,
        allow_large=args.allow_large,
    )
    sys.stdout.write(report.to_text())
    if args.json:
        _write(args.json, report.to_json())
    return 3 if any(r.match is None for r in report.rows) else 0


def _cmd_verify(args) -> int:
    _check_common(args)
    family = parse_family(args.family)
    graphs = _read_graph_input(args.infile)
    budget = _budget(args)

    def provider(m: int, ell: int) -> int:
        return brute_force_ex(
            m,
            ForbiddenFamily([family[ell - 1]]),
            budget=budget,
            hard_cap=args.hard_cap,
            allow_large=args.allow_large,
        ).ex_value

    records = []
    for idx, g in enumerate(graphs, start=1):
        free = is_free(g, family)
        maximal = None
        audit = None
        audit_error = None
        if free:
            maximal = maximality_audit(g, family).maximal
            try:
                audit = structure_audit(g, family, provider)
            except (ValueError, BudgetExceededError) as err:
                audit_error = str(err)
        if not free:
            parts = ["free no", "maximal -", "structure -"]
        else:
            parts = [
                "free yes",
                f"maximal {'yes' if maximal else 'no'}",
            ]
            if audit is not None:
                verdict = "pass" if audit.passed else "fail"
                parts.append(f"structure {verdict} (q={audit.q}, ell={audit.ell})")
            else:
                parts.append(f"structure unknown ({audit_error})")
        sys.stdout.write(
            f"graph {idx} (n={g.n}, e={g.edge_count}): " + " | ".join(parts) + "\n"
        )
        records.append(
            {
                "index": idx,
                "graph6": encode_graph6(g),
                "n": g.n,
                "edges": g.edge_count,
                "free": free,
                "maximal": maximal,
                "structure": audit.to_json_dict() if audit else None,
                "structure_error": audit_error,
            }
        )
    if args.json:
        doc = {
            "schema": "verify-report/1",
            "family": [encode_graph6(p) for p in family],
            "graphs": records,
        }
        _write(args.json, _json_doc(doc))
    return 0


def _cmd_criticality(args) -> int:
    _check_common(args)
    tokens = [t.strip() for t in args.family.split(",") if t.strip()]
    if not tokens:
        raise ValueError("empty family spec")
    records = []
    lines = []
    for token in tokens:
        g = parse_pattern_token(token)
        rep = criticality(g)
        vw = (
            f"yes (vertex {rep.vertex_witness})" if rep.is_vertex_critical else "no"
        )
        ew = (
            f"yes (edge {rep.edge_witness[0]}-{rep.edge_witness[1]})"
            if rep.is_edge_critical
            else "no"
        )
        lines.append(
            f"{token}: chi {rep.chi}, vertex-critical {vw}, edge-critical {ew}"
        )
        records.append(
            {
                "token": token,
                "chi": rep.chi,
                "vertex_witness": rep.vertex_witness,
                "edge_witness": list(rep.edge_witness) if rep.edge_witness else None,
            }
        )
    sys.stdout.write("\n".join(lines) + "\n")
    if args.json:
        _write(args.json, _json_doc({"schema": "criticality-report/1", "patterns": records}))
    return 0


def _cmd_stability(args) -> int:
    _check_common(args)
    graphs = _read_graph_input(args.infile)
    docs = []
    for idx, g in enumerate(graphs, start=1):
        diag = min_internal_partition(
            g,
            args.r,
            mode=args.mode,
            theta=args.theta,
            cap=args.cap,
            starts=args.starts,
            seed=args.seed,
        )
        audit = min_degree_audit(g, args.r, args.theta) if g.n else False
        sys.stdout.write(
            f"graph {idx} (n={g.n}, e={g.edge_count}): internal edges "
            f"{diag.internal_edges}, mode {diag.mode}\n"
        )
        for i, part in enumerate(diag.parts, start=1):
            members = " ".join(str(v) for v in part) if part else "(empty)"
            sys.stdout.write(f"  part {i}: {members}\n")
        wtxt = " ".join(str(v) for v in diag.w_set) if diag.w_set else "(empty)"
        sys.stdout.write(f"  w-set (theta {diag.theta}): {wtxt}\n")
        sys.stdout.write(
            f"  min-degree audit (r={args.r}, theta {args.theta}): "
            f"{'pass' if audit else 'fail'}\n"
        )
        entry = diag.to_json_dict()
        entry["min_degree_audit"] = audit
        docs.append(entry)
    if args.json:
        _write(args.json, _json_doc({"schema": "stability-report/1", "graphs": docs}))
    return 0


# === parser ===


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--seed", type=int, default=0, help="seed for randomized components (default 0)"
    )
    common.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker cap; execution is single-threaded and output is identical "
        "for any accepted value",
    )

    budgeted = argparse.ArgumentParser(add_help=False)
    budgeted.add_argument(
        "--budget-candidates", type=int, default=None,
        help="abort enumeration after this many admitted graphs",
    )
    budgeted.add_argument(
        "--budget-seconds", type=float, default=None,
        help="abort enumeration after this wall time",
    )
    budgeted.add_argument(
        "--hard-cap", type=int, default=10,
        help="largest n the oracle accepts without --allow-large (default 10)",
    )
    budgeted.add_argument(
        "--allow-large", action="store_true",
        help="acknowledge an oracle run above the hard cap",
    )

    parser = argparse.ArgumentParser(
        prog="turanlab",
        description="extremal constructions, Turan-number formulas, and exact "
        "small-order verification for forbidden disjoint unions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "gen", parents=[common],
        help="emit a construction or standard graph as graph6",
    )
    p.add_argument("--kind", required=True, choices=["wheel", "standard"])
    p.add_argument("--n", type=int, help="order of the wheel construction")
    p.add_argument("--k", type=int, help="wheel parameter (forbids the wheel on 2k+1)")
    p.add_argument("--n0", type=int, default=None, help="bipartition size override")
    p.add_argument("--ell", type=int, default=1, help="clique layer parameter (default 1)")
    p.add_argument("--spec", help="standard graph token (wN/kN/cN/pN/g6:... or turan:N,R)")
    p.add_argument("--out", help="also write the graph6 line to this file")
    p.add_argument("--json", help="write the construction recipe JSON here (wheel only)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser(
        "ex-formula", parents=[common],
        help="evaluate a closed-form extremal edge count",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--wheel-k", type=int, default=None, help="single odd wheel, parameter k")
    p.add_argument("--wheels", default=None, help="descending k list, e.g. 3,3,2")
    p.add_argument("--turan-r", type=int, default=None, help="Turan graph edge count")
    p.add_argument("--json", help="write the value and argmax as JSON here")
    p.set_defaults(func=_cmd_ex_formula)

    p = sub.add_parser(
        "brute-force", parents=[common, budgeted],
        help="exact ex(n, family) with all witnesses up to isomorphism",
    )
    p.add_argument("--family", required=True, help="comma-separated pattern tokens")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--seed-g6", action="append", default=None,
        help="known free graph (graph6) used as a pruning seed; repeatable",
    )
    p.add_argument("--json", help="write the ExtremalResult JSON here")
    p.add_argument("--graph6", help="write witness graph6 lines here")
    p.set_defaults(func=_cmd_brute_force)

    p = sub.add_parser(
        "scan", parents=[common, budgeted],
        help="compare a formula against the oracle over a range of n",
    )
    p.add_argument("--family", required=True)
    p.add_argument("--formula", required=True, help="turan:R | wheel:K | wheels:KS | union-turan:R")
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument(
        "--no-seeds", action="store_true",
        help="disable construction seeding of the oracle",
    )
    p.add_argument("--json", help="write the threshold report JSON here")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser(
        "verify", parents=[common, budgeted],
        help="audit graphs from a graph6 file: freeness, maximality, structure",
    )
    p.add_argument("--in", dest="infile", required=True, help="graph6 file, or - for stdin")
    p.add_argument("--family", required=True)
    p.add_argument("--json", help="write the verify report JSON here")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser(
        "criticality", parents=[common],
        help="chromatic number and criticality of each pattern",
    )
    p.add_argument("--family", required=True)
    p.add_argument("--json", help="write the criticality report JSON here")
    p.set_defaults(func=_cmd_criticality)

    p = sub.add_parser(
        "stability", parents=[common],
        help="minimum-internal-edge partition diagnostics for graphs in a file",
    )
    p.add_argument("--in", dest="infile", required=True, help="graph6 file, or - for stdin")
    p.add_argument("--r", type=int, required=True, help="number of parts")
    p.add_argument("--mode", choices=["exact", "local-search"], default="exact")
    p.add_argument("--theta", type=float, default=0.1)
    p.add_argument("--cap", type=int, default=14, help="exact-mode order cap")
    p.add_argument("--starts", type=int, default=20, help="local-search restarts")
    p.add_argument("--json", help="write the stability report JSON here")
    p.set_defaults(func=_cmd_stability)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        code = err.code
        return int(code) if code is not None else 0
    try:
        return args.func(args)
    except (ValueError, Graph6ParseError, OSError) as err:
        sys.stderr.write(f"error: {err}\n")
        return 2


def run() -> None:
    raise SystemExit(main())
