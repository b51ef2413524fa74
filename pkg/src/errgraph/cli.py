"""errgraph command line: N(G, r), the B_2 intersection table, reconstruction, exact number tables."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import asdict, dataclass, field

from . import classic, counts, graph, perm, reconstruct, symt
from .errors import InconsistentObservations, InfeasibleError, UnreachableError

EXIT_OK, EXIT_MISMATCH, EXIT_INFEASIBLE, EXIT_BAD_INPUT = 0, 1, 2, 3


class BadInput(ValueError):
    pass


@dataclass
class RunReport:
    command: str
    params: dict
    results: dict = field(default_factory=dict)
    method: str = "brute"
    validity: str | None = None
    seconds: float = 0.0
    seed: str | None = None

    def to_json(self) -> str:
        return json.dumps(_stringify(asdict(self)), indent=2)


def _stringify(obj):
    # exact integers travel as decimal strings; bools stay bools
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return round(obj, 6)
    if isinstance(obj, dict):
        return {str(k): _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    return str(obj)


@dataclass
class GraphSpec:
    text: str
    graph: graph.GraphView
    closed: object = None  # r -> (value, validity) or None

    def closed_value(self, r: int):
        return None if self.closed is None else self.closed(r)


def parse_graph_spec(text: str) -> GraphSpec:
    kind, _, rest = text.partition(":")
    args = rest.split(":") if rest else []
    try:
        if kind == "symt":
            (n,) = map(int, args)
            return GraphSpec(text, symt.SymnTView(n), lambda r: symt.n_sym_closed(n, r))
        if kind == "hamming":
            n, q = map(int, args)
            return GraphSpec(text, classic.HammingView(n, q), lambda r: (classic.hamming_closed(n, q, r), "proven"))
        if kind == "johnson":
            n, w = map(int, args)
            return GraphSpec(text, classic.JohnsonView(n, w), lambda r: (classic.johnson_closed(n, w, r), "proven"))
        if kind == "srg":
            fam = classic.parse_family(rest)
            n1 = fam.expected()[4]
            return GraphSpec(text, fam.build(), lambda r: (n1, "proven") if r == 1 and n1 is not None else None)
        if kind == "file":
            with open(rest) as fh:
                return GraphSpec(text, graph.parse_adjacency(fh.read(), name=text))
    except OSError as exc:
        raise BadInput(f"cannot read {rest!r}: {exc}") from None
    except (TypeError, ValueError) as exc:
        raise BadInput(f"bad graph spec {text!r}: {exc}") from None
    raise BadInput(f"unknown graph kind {kind!r}; use symt, hamming, johnson, srg or file")


def _brute(spec: GraphSpec, r: int, budget: int | None, threads: int) -> graph.NResult:
    if isinstance(spec.graph, symt.SymnTView):
        return symt.n_sym_brute(spec.graph.n, r, budget=budget or symt.DEFAULT_BUDGET, workers=threads)
    return graph.n_of_gamma(spec.graph, r, budget=budget or graph.DEFAULT_PAIR_BUDGET)


def cmd_n(args) -> tuple:
    spec = parse_graph_spec(args.graph)
    g, r = spec.graph, args.r
    if r < 1:
        raise BadInput("r must be at least 1")
    mode = "both" if args.both else "closed" if args.closed else "brute"
    rep = RunReport("n", {"graph": args.graph, "r": r, "budget": args.budget}, method=mode)
    t0 = time.perf_counter()
    code = EXIT_OK
    closed = None
    if mode in ("closed", "both"):
        closed = spec.closed_value(r)
        if closed is None:
            raise BadInput(f"no closed form for {args.graph} at r={r}")
        rep.results["closed"] = closed[0]
        rep.validity = closed[1]
    brute = None
    try:
        brute = _brute(spec, r, args.budget, args.threads)
    except InfeasibleError as exc:
        rep.results["infeasible"] = str(exc)
        if mode != "closed":
            rep.seconds = time.perf_counter() - t0
            return rep, EXIT_INFEASIBLE
    if brute is not None:
        rep.results["N"] = brute.value
        rep.results["per_distance"] = brute.per_distance
        if brute.witness is not None:
            rep.results["witness"] = [g.format_vertex(v) for v in brute.witness]
        if brute.witness_classes:
            rep.results["witness_classes"] = [str(ct) for ct in brute.witness_classes]
    if closed is not None and brute is not None:
        rep.results["match"] = closed[0] == brute.value
        if not rep.results["match"] and closed[1] == "proven":
            code = EXIT_MISMATCH
    rep.seconds = time.perf_counter() - t0
    return rep, code


def _table1_rows(t: symt.Table1) -> list:
    out = []
    for e in t.entries:
        corrected = symt.table1_corrected(e.row, e.col, t.n)
        status = "absent" if not e.present else "verified" if e.verified else "mismatch"
        out.append({
            "row": _parts(e.row),
            "col": _parts(e.col),
            "formula": e.formula,
            "direct": "" if e.direct is None else e.direct,
            "corrected": corrected,
            "status": status,
        })
    return out


def _parts(parts: tuple) -> str:
    return "+".join(map(str, parts)) if parts else "e"


def cmd_table1(args) -> tuple:
    if args.n < 2:
        raise BadInput("n must be at least 2")
    t0 = time.perf_counter()
    t = symt.table1(args.n)
    rows = _table1_rows(t)
    rep = RunReport("table1", {"n": args.n}, method="both")
    rep.results = {
        "entries": rows,
        "present": sum(e.present for e in t.entries),
        "mismatches": sum(r["status"] == "mismatch" for r in rows),
        "row_sums": {_parts(k): v for k, v in t.row_sums().items()},
    }
    rep.seconds = time.perf_counter() - t0
    return rep, EXIT_MISMATCH if rep.results["mismatches"] else EXIT_OK


def cmd_reconstruct(args) -> tuple:
    t0 = time.perf_counter()
    if args.obs:
        with open(args.obs) as fh:
            desc, r, lines = reconstruct.read_observation_header(fh.read())
        spec = parse_graph_spec(desc)
        obs = reconstruct.parse_observations(spec.graph, r, lines)
        center = None
    else:
        if args.r is None or args.graph is None:
            raise BadInput("give GRAPH and R, or --obs FILE")
        spec = parse_graph_spec(args.graph)
        r = args.r
        g = spec.graph
        if args.center is not None:
            center = g.parse_vertex(args.center)
        elif args.random:
            import random

            center = random.Random(args.seed).choice(sorted(g.vertices(), key=g.format_vertex))
        else:
            center = g.base_point()
        count = args.count if args.count is not None else graph.ball(g, center, r).__len__()
        obs = reconstruct.sample_observations(reconstruct.ChannelConfig(g, center, r, count, args.seed))
    g = spec.graph
    if args.save_obs:
        with open(args.save_obs, "w") as fh:
            fh.write(reconstruct.format_observations(g, obs, spec.text))
    if args.algo == "majority":
        if not isinstance(g, classic.HammingView):
            raise BadInput("majority needs a hamming graph")
        res = reconstruct.reconstruct_majority_hamming(g, obs)
        cands = res.candidates
    elif args.algo == "threshold":
        if not isinstance(g, classic.JohnsonView):
            raise BadInput("threshold needs a johnson graph")
        res = reconstruct.reconstruct_threshold_johnson(g, obs)
        cands = res.candidates
    else:
        cands = reconstruct.reconstruct_intersection(g, obs)
    record = reconstruct.report_record(g, obs, cands, seed=args.seed, desc=spec.text)
    closed = spec.closed_value(obs.radius) if obs.radius >= 1 else None
    n_value = closed[0] if closed and closed[1] == "proven" else None
    if n_value is None and obs.radius >= 1:
        try:
            n_value = _brute(spec, obs.radius, args.budget, 1).value
        except InfeasibleError:
            pass
    record["N"] = n_value
    record["guaranteed"] = n_value is not None and len(obs) >= n_value + 1
    if center is not None:
        record["center"] = g.format_vertex(center)
        record["recovered"] = record["candidates"] == [g.format_vertex(center)]
    rep = RunReport("reconstruct", {"algo": args.algo, "count": len(obs)}, results=record,
                    method=args.algo, seed=str(args.seed))
    rep.seconds = time.perf_counter() - t0
    code = EXIT_OK
    if record["guaranteed"] and center is not None and not record["recovered"]:
        code = EXIT_MISMATCH
    return rep, code


def _span(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        return range(int(lo), int(hi if sep else lo) + 1)
    except ValueError:
        raise BadInput(f"bad range {text!r}; use A..B") from None


NUMBER_KINDS = ("stirling", "restricted-3cycle", "restricted-2x2", "denes", "poincare", "ballsize", "edgecount")


def cmd_numbers(args) -> tuple:
    kind = args.kind
    ns = _span(args.n)
    rows = []
    if kind == "denes":
        types = [perm.CycleType.parse(t) for t in args.type] if args.type else [
            ct for n in ns for i in range(n) for ct in perm.class_reps(n, i)
        ]
        for ct in types:
            rows.append({"type": str(ct), "n": ct.n, "i": ct.rank, "value": counts.denes_count(ct, ct.rank)})
    elif kind == "poincare":
        for n in ns:
            poly = counts.poincare_polynomial(n)
            for i, c in enumerate(poly.coeffs):
                rows.append({"n": n, "i": i, "value": c})
    else:
        is_ = _span(args.i) if args.i else None
        for n in ns:
            default = range(n + 1) if kind == "stirling" else range(n)
            for i in is_ if is_ is not None else default:
                if kind == "stirling":
                    value = counts.stirling_first_signless(n, i)
                    rows.append({"n": n, "k": i, "value": value})
                    continue
                if kind == "restricted-3cycle":
                    value = counts.restricted_stirling("3", n, i)
                elif kind == "restricted-2x2":
                    value = counts.restricted_stirling("22", n, i)
                elif kind == "ballsize":
                    value = counts.ball_size(n, i)
                elif kind == "edgecount":
                    if not 1 <= i <= n - 1:
                        continue
                    value = symt.labeled_edge_count(n, i)
                else:
                    raise BadInput(f"unknown kind {kind!r}")
                rows.append({"n": n, "i": i, "value": value})
    rep = RunReport("numbers", {"kind": kind, "n": args.n, "i": args.i}, results={"rows": rows}, method="closed")
    return rep, EXIT_OK


def cmd_export(args) -> tuple:
    spec = parse_graph_spec(args.graph)
    if spec.graph.vertices() is None:
        raise BadInput("graph has no vertex enumeration")
    text = f"# graph={spec.text}\n" + graph.format_adjacency(spec.graph)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return None, EXIT_OK


def verification_checks(small: bool = True) -> list:
    """(name, callable returning bool) pairs; the small set finishes in seconds."""
    checks = []

    def add(name):
        def deco(fn):
            checks.append((name, fn))
            return fn
        return deco

    @add("symt r=1 brute equals 3 for n=3..6")
    def _():
        return all(symt.n_sym_brute(n, 1).value == 3 for n in range(3, 7))

    @add("symt r=2 brute equals 3(n+1)(n-2)/2 for n=5..7")
    def _():
        return all(symt.n_sym_brute(n, 2).value == symt.r2_formula(n) for n in range(5, 8))

    @add("symt r=3 targeted intersection equals closed form at n=8")
    def _():
        return symt.targeted_intersection(8, 3, perm.parse_permutation("(1 2 3)", 8)) == symt.r3_formula(8)

    @add("b(n,1) + c3(n,n-2) + c3(n,n-3) = 3(n+1)(n-2)/2 for n=5..30")
    def _():
        return all(symt.general_formula(n, 2) == symt.r2_formula(n) for n in range(5, 31))

    @add("B_2 intersection table agrees with direct counts (corrected entries) n=5..8")
    def _():
        for n in range(5, 9):
            for e in symt.table1(n).entries:
                if e.present and e.direct != symt.table1_corrected(e.row, e.col, n):
                    return False
        return True

    @add("hamming and johnson closed forms equal brute")
    def _():
        ok = all(
            graph.n_of_gamma(classic.HammingView(n, q), r).value == classic.hamming_closed(n, q, r)
            for n in range(1, 5) for q in (2, 3) for r in range(1, n + 1)
        )
        return ok and all(
            graph.n_of_gamma(classic.JohnsonView(n, w), r).value == classic.johnson_closed(n, w, r)
            for n in range(2, 7) for w in range(1, n) for r in range(1, 4)
        )

    @add("denes formula at minimal length for n<=5")
    def _():
        from .checks import factorization_count

        return all(
            counts.denes_count(ct, i) == factorization_count(ct.representative(), i)
            for n in range(1, 6) for i in range(n) for ct in perm.class_reps(n, i)
        )

    @add("labelled edge count equals direct enumeration n<=6")
    def _():
        from .checks import labeled_edges_direct

        return all(
            symt.labeled_edge_count(n, r) == labeled_edges_direct(n, r)
            for n in range(2, 7) for r in range(1, min(4, n - 1) + 1)
        )

    @add("reconstruction from N+1 observations is unique on symt:4, hamming:3:2, johnson:4:2")
    def _():
        spaces = [(symt.SymnTView(4), 3), (classic.HammingView(3, 2), 2), (classic.JohnsonView(4, 2), 4)]
        return all(not reconstruct.guarantee_sweep(g, 1, n + 1)[1] for g, n in spaces)

    @add("strongly regular catalogue parameters")
    def _():
        return all(classic.srg_family(f)[1].matches for f in classic.catalogue() if f.kind != "complement")

    @add("automorphism action at n=3")
    def _():
        return symt.aut_action_check(3)

    if not small:
        @add("symt r=3 class sweep at n=16 equals 19389")
        def _():
            return symt.n_sym_brute(16, 3).value == 19389

    return checks


def cmd_verify(args) -> tuple:
    t0 = time.perf_counter()
    results = {}
    for name, fn in verification_checks(small=args.small or not args.all):
        try:
            ok = bool(fn())
        except Exception as exc:  # a crash is a failed check, not a crashed sweep
            ok = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        results[name] = ok
        if not args.json:
            print(f"{'PASS' if ok else 'FAIL'}  {name}")
    rep = RunReport("verify", {"all": args.all, "small": args.small}, results=results, method="both")
    rep.seconds = time.perf_counter() - t0
    return rep, EXIT_OK if all(results.values()) else EXIT_MISMATCH


def _print_text(rep: RunReport) -> None:
    if rep.command == "verify":
        return
    res = rep.results
    if rep.command == "n":
        if "N" in res:
            print(f"N = {res['N']}")
            for s, v in res["per_distance"].items():
                print(f"  N_{s} = {v}")
            if "witness" in res:
                print(f"  witness: {' , '.join(res['witness'])}")
            if "witness_classes" in res:
                print(f"  argmax classes: {'; '.join(res['witness_classes'])}")
        if "infeasible" in res:
            print(f"brute: infeasible ({res['infeasible']})")
        if "closed" in res:
            print(f"closed = {res['closed']} ({rep.validity})")
        if "match" in res:
            print("match" if res["match"] else "MISMATCH")
    elif rep.command == "reconstruct":
        for k in ("graph", "r", "center", "observations", "candidates", "ambiguous", "N", "guaranteed", "recovered"):
            if k in res:
                print(f"{k}: {res[k]}")
    print(f"({rep.seconds:.2f}s)")


def _print_csv(rows: list) -> None:
    if not rows:
        return
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]))
    w.writeheader()
    for row in rows:
        w.writerow(row)
    sys.stdout.write(buf.getvalue())


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="errgraph", description="Ball intersections and reconstruction in error graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="emit a JSON run report")
        sp.add_argument("--budget", type=int, default=None, help="element budget for brute force")
        sp.add_argument("--threads", type=int, default=1, help="worker cap for class sweeps")
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("n", help="N(G, r) by brute force and/or closed form")
    sp.add_argument("graph", help="symt:N | hamming:N:Q | johnson:N:W | srg:FAMILY:PARAMS | file:PATH")
    sp.add_argument("r", type=int)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--closed", action="store_true", help="closed form, checked against brute when feasible")
    g.add_argument("--brute", action="store_true", help="brute force only (default)")
    g.add_argument("--both", action="store_true", help="closed form and brute force, brute required")
    common(sp)
    sp.set_defaults(func=cmd_n)

    sp = sub.add_parser("table1", help="B_2 intersection counts by class, formula versus direct")
    sp.add_argument("n", type=int)
    sp.add_argument("--csv", action="store_true", help="CSV (the default unless --json)")
    common(sp)
    sp.set_defaults(func=cmd_table1)

    sp = sub.add_parser("reconstruct", help="sample observations and reconstruct the centre")
    sp.add_argument("graph", nargs="?")
    sp.add_argument("r", nargs="?", type=int)
    where = sp.add_mutually_exclusive_group()
    where.add_argument("--center", help="hidden centre in the graph's vertex format")
    where.add_argument("--random", action="store_true", help="draw the hidden centre from --seed")
    where.add_argument("--obs", help="read observations from a file instead of sampling")
    sp.add_argument("--count", type=int, default=None, help="number of observations (default: whole ball)")
    sp.add_argument("--algo", choices=("intersect", "majority", "threshold"), default="intersect")
    sp.add_argument("--save-obs", help="write the sampled observations to a file")
    common(sp)
    sp.set_defaults(func=cmd_reconstruct)

    sp = sub.add_parser("numbers", help="exact number tables as CSV")
    sp.add_argument("kind", choices=NUMBER_KINDS)
    sp.add_argument("--n", default="1..8", help="range A..B")
    sp.add_argument("--i", default=None, help="range A..B (k for stirling)")
    sp.add_argument("--type", action="append", help="cycle type for denes, e.g. '4' or '1^2 3^1'")
    sp.add_argument("--csv", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_numbers)

    sp = sub.add_parser("verify", help="run the verification sweep")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--small", action="store_true", help="skip the slow checks")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("export", help="write a graph as adjacency lines")
    sp.add_argument("graph")
    sp.add_argument("--out")
    common(sp)
    sp.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rep, code = args.func(args)
    except (BadInput, InconsistentObservations, UnreachableError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    if rep is None:
        return code
    if args.json:
        print(rep.to_json())
    elif rep.command in ("table1", "numbers"):
        _print_csv(rep.results["entries"] if rep.command == "table1" else rep.results["rows"])
    else:
        _print_text(rep)
    return code


if __name__ == "__main__":
    sys.exit(main())
