"""Command-line front end: analyze graphs, generate witness families, run
the verification suite, and search for odd K4-subdivisions.

Exit codes: 0 success / no violation, 1 violation, 2 input error,
3 budget exhaustion under --strict. All randomness requires an explicit
--seed; identical inputs, flags and seeds produce byte-identical JSON when
--no-timings is given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import generators
from .budget import Budget
from .coloring import chromatic_number, is_k_vertex_critical
from .cuts import edge_connectivity, k1_cuts, k2_cuts, pi_cuts, two_edge_cuts
from .errors import MalformedInput, OddHolesError, SearchBudgetExceeded
from .formats import iter_graphs, write_graph6
from .generators import CorpusEntry, builtin_corpus
from .graph import Graph, is_connected
from .holes import g_ell_membership, girth
from .lemmas import LEMMA_IDS, SuiteConfig, run_suite
from .subdivisions import find_odd_k4_subdivision

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _default_budget(args):
    if args.budget is not None:
        return args.budget
    env = os.environ.get("ODDHOLE_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise MalformedInput(f"bad ODDHOLE_BUDGET value {env!r}")
    return 5_000_000


def _read_inputs(paths, fmt):
    """Yield (source, index, Graph) over all input files (or stdin)."""
    if not paths:
        paths = ["-"]
    for path in paths:
        text = sys.stdin.read() if path == "-" else open(path).read()
        name = "<stdin>" if path == "-" else path
        for lineno, G in iter_graphs(text, fmt):
            yield name, lineno, G


def _analysis_report(name, lineno, G: Graph, budget_limit, with_timings, k=4):
    t0 = time.perf_counter()
    budget_flags = []
    rep = {
        "schema_version": SCHEMA_VERSION,
        "id": f"{name}:{lineno}",
        "n": G.n,
        "m": G.m,
    }
    g = girth(G)
    rep["girth"] = None if g == float("inf") else int(g)
    try:
        rep["gell"] = g_ell_membership(G, Budget(budget_limit)).to_dict()
    except SearchBudgetExceeded:
        rep["gell"] = None
        budget_flags.append("gell")
    chi, cert = chromatic_number(G)
    rep["chromatic_number"] = chi
    rep["coloring"] = cert
    rep["criticality"] = is_k_vertex_critical(G, k).to_dict()
    if is_connected(G):
        rep["cuts"] = {
            "k1": len(k1_cuts(G)),
            "k2": len(k2_cuts(G)),
            "p3": len(pi_cuts(G, 3)),
            "two_edge": len(two_edge_cuts(G)),
            "edge_connectivity": edge_connectivity(G),
        }
    else:
        rep["cuts"] = None
    try:
        found = find_odd_k4_subdivision(G, Budget(budget_limit))
        rep["odd_k4"] = {"status": "found", "witness": found.to_dict()} if found else {
            "status": "absent-certified"
        }
    except SearchBudgetExceeded:
        rep["odd_k4"] = {"status": "absent-budget"}
        budget_flags.append("odd_k4")
    rep["budget_flags"] = budget_flags
    if with_timings:
        rep["wall_time"] = round(time.perf_counter() - t0, 6)
    return rep


def _print_human_analysis(rep, out):
    gell = rep.get("gell")
    if gell and gell.get("member"):
        member = f"member (ell={gell['ell']})"
    elif gell:
        member = f"non-member ({gell.get('failure_reason')})"
    else:
        member = "undecided (budget)"
    oddk4 = rep["odd_k4"]["status"]
    if oddk4 == "found":
        oddk4 = f"found, faces {rep['odd_k4']['witness']['face_lengths']}"
    print(
        f"{rep['id']}: n={rep['n']} m={rep['m']} girth={rep['girth']} "
        f"{member} chi={rep['chromatic_number']} "
        f"critical4={rep['criticality']['is_critical']} odd-K4: {oddk4}",
        file=out,
    )


def cmd_analyze(args):
    budget = _default_budget(args)
    reports = []
    exit_code = EXIT_OK
    for name, lineno, G in _read_inputs(args.inputs, args.format):
        rep = _analysis_report(name, lineno, G, budget, not args.no_timings)
        if rep["budget_flags"] and args.strict:
            exit_code = EXIT_BUDGET
        reports.append(rep)
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        if args.json:
            json.dump(reports, out, indent=2, sort_keys=True)
            out.write("\n")
        else:
            for rep in reports:
                _print_human_analysis(rep, out)
    finally:
        if args.out:
            out.close()
    return exit_code


_FAMILIES = {
    "cycle": (1, lambda p: generators.cycle(*p)),
    "theta": (3, lambda p: generators.theta(*p)),
    "k4sub": (3, lambda p: generators.k4_subdivision(*p)[0]),
    "gp": (2, lambda p: generators.generalized_petersen(*p)),
    "petersen": (0, lambda p: generators.petersen()),
    "wheel": (1, lambda p: generators.odd_wheel(*p)),
    "grotzsch": (0, lambda p: generators.grotzsch()),
    "mycielski-cycle": (1, lambda p: generators.mycielski(generators.cycle(*p))),
}


def cmd_generate(args):
    if args.family == "random":
        if args.seed is None:
            raise MalformedInput("random generation requires --seed")
        if len(args.params) != 3:
            raise MalformedInput("random needs params: n m girth_min")
        n, m, gm = args.params
        G = generators.random_girth_graph(n, m, gm, seed=args.seed)
        prov = f"random_girth_graph({n},{m},{gm},seed={args.seed})"
        gid = f"random-{n}-{m}-{gm}-{args.seed}"
    else:
        if args.family not in _FAMILIES:
            raise MalformedInput(f"unknown family {args.family!r}")
        nparams, build = _FAMILIES[args.family]
        if len(args.params) != nparams:
            raise MalformedInput(
                f"family {args.family} needs {nparams} parameter(s)"
            )
        G = build(args.params)
        gid = "-".join([args.family] + [str(p) for p in args.params])
        prov = f"{args.family}({','.join(str(p) for p in args.params)})"
    record = write_graph6(G)
    manifest = [{"index": 0, "id": gid, "provenance": prov}]
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(record + "\n")
        with open(args.out + ".manifest.json", "w") as fh:
            json.dump(manifest, fh, indent=2, sort_keys=True)
            fh.write("\n")
    else:
        print(record)
    return EXIT_OK


def cmd_lemmas(args):
    budget = _default_budget(args)
    lemmas = None
    if args.lemma:
        for lid in args.lemma:
            if lid not in LEMMA_IDS:
                raise MalformedInput(
                    f"unknown check {lid!r}; valid: {', '.join(LEMMA_IDS)}"
                )
        lemmas = tuple(args.lemma)
    config = SuiteConfig(k=4, budget=budget, lemmas=lemmas)
    if args.builtin:
        corpus = builtin_corpus()
    else:
        corpus = [
            CorpusEntry(id=f"{name}:{lineno}", graph=G, provenance=name)
            for name, lineno, G in _read_inputs(args.inputs, args.format)
        ]
    report = run_suite(corpus, config, jobs=args.jobs)
    doc = report.to_dict(include_timings=not args.no_timings)
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        if args.json:
            json.dump(doc, out, indent=2, sort_keys=True)
            out.write("\n")
        else:
            _print_human_suite(doc, out)
    finally:
        if args.out:
            out.close()
    if report.violations:
        return EXIT_VIOLATION
    if report.budget_hits and args.strict:
        return EXIT_BUDGET
    return EXIT_OK


def _print_human_suite(doc, out):
    summary = doc["summary"]
    for g in doc["graphs"]:
        statuses = " ".join(f"{v['lemma']}={v['status']}" for v in g["verdicts"])
        print(f"{g['id']}: n={g['n']} m={g['m']} {statuses}", file=out)
    print(
        f"checked {len(doc['graphs'])} graphs; "
        f"violations: {len(summary['violations'])}; "
        f"budget: {len(summary['budget'])}",
        file=out,
    )
    print(f"hypothesis instances: {summary['instances']}", file=out)
    if summary["globally_vacuous"]:
        print(
            "globally vacuous checks (no hypothesis instance in corpus): "
            + ", ".join(summary["globally_vacuous"]),
            file=out,
        )
    for gid, lemma in summary["violations"]:
        print(f"VIOLATED: {lemma} on {gid} (witness in JSON report)", file=out)


def cmd_oddk4(args):
    budget = _default_budget(args)
    findings = []
    saw_budget = False
    for name, lineno, G in _read_inputs(args.inputs, args.format):
        gid = f"{name}:{lineno}"
        try:
            limit = None if args.certify else budget
            found = find_odd_k4_subdivision(G, Budget(limit))
            if found is None:
                findings.append({"id": gid, "status": "absent-certified"})
            else:
                findings.append(
                    {"id": gid, "status": "found", "witness": found.to_dict()}
                )
        except SearchBudgetExceeded:
            findings.append({"id": gid, "status": "absent-budget"})
            saw_budget = True
    doc = {"schema_version": SCHEMA_VERSION, "findings": findings}
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        if args.json:
            json.dump(doc, out, indent=2, sort_keys=True)
            out.write("\n")
        else:
            for f in findings:
                detail = ""
                if f["status"] == "found":
                    detail = f" faces={f['witness']['face_lengths']}"
                print(f"{f['id']}: {f['status']}{detail}", file=out)
    finally:
        if args.out:
            out.close()
    if saw_budget and args.strict:
        return EXIT_BUDGET
    return EXIT_OK


def _add_common(p, inputs=True):
    if inputs:
        p.add_argument("inputs", nargs="*", help="input files ('-' for stdin)")
        p.add_argument(
            "--format", choices=("graph6", "dimacs", "json"), default=None
        )
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--strict", action="store_true", help="exit 3 on budget hits")
    p.add_argument("--budget", type=int, default=None, help="expansion budget")
    p.add_argument("--out", default=None, help="write output to file")
    p.add_argument(
        "--no-timings", action="store_true", help="omit timing fields (stable bytes)"
    )


def build_parser():
    ap = argparse.ArgumentParser(
        prog="oddholes",
        description="odd-hole / K4-subdivision structure analysis for graphs",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="per-graph structural report")
    _add_common(p)

    p = sub.add_parser("generate", help="write a generated graph as graph6")
    p.add_argument("family", help="cycle|theta|k4sub|gp|petersen|wheel|grotzsch|mycielski-cycle|random")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)

    p = sub.add_parser("lemmas", help="run the verification suite")
    _add_common(p)
    p.add_argument("--builtin", action="store_true", help="use the builtin corpus")
    p.add_argument(
        "--lemma", action="append", default=None, help="restrict to a check id (repeatable)"
    )
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")

    p = sub.add_parser("oddk4", help="search for odd K4-subdivisions")
    _add_common(p)
    p.add_argument(
        "--certify", action="store_true", help="exhaustive search with no budget"
    )
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    handler = {
        "analyze": cmd_analyze,
        "generate": cmd_generate,
        "lemmas": cmd_lemmas,
        "oddk4": cmd_oddk4,
    }[args.command]
    try:
        return handler(args)
    except MalformedInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OddHolesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
