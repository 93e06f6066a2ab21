"""Command-line interface.

Exit codes: 0 pass, 1 violation found, 2 usage error, 3 infeasible at the
configured caps.  Reports are deterministic JSON; timing goes to stderr only.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .fields import FieldError, parse_field
from .harness import SUITES, probe_q1, run_suite
from .homology import KoszulComplex
from .rings import ideal_from_dict
from .veronese import (
    InfeasibleError,
    SegreVeroneseSpec,
    green_lazarsfeld_index,
    veronese_betti,
)

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3


def _load_ideal(arg: str):
    if arg.startswith("@"):
        with open(arg[1:]) as fh:
            data = json.load(fh)
    else:
        data = json.loads(arg)
    return ideal_from_dict(data)


def _parse_caps(pairs):
    caps = {}
    for pair in pairs or []:
        key, _, val = pair.partition("=")
        if not val:
            raise ValueError(f"cap {pair!r} is not KEY=VALUE")
        caps[key] = int(val)
    return caps


def _parse_vec(text: str) -> tuple:
    return tuple(int(x) for x in text.split(","))


def _emit(report_dict, fmt, table_lines):
    if fmt == "json":
        print(json.dumps(report_dict, sort_keys=True, indent=2))
    else:
        for line in table_lines:
            print(line)


def _suite_table(report):
    lines = [f"suite {report.suite}: {report.verdict} ({len(report.cases)} cases)"]
    for case in report.cases:
        lines.append(f"  case {case.index}: {case.verdict}")
        if case.verdict not in ("pass",):
            lines.append(f"    params: {case.params}")
            lines.append(f"    details: {case.details}")
    return lines


def _verdict_exit(verdict: str) -> int:
    return {"pass": EXIT_PASS, "violation": EXIT_VIOLATION, "infeasible": EXIT_INFEASIBLE}[
        verdict
    ]


def cmd_verify(args):
    field = parse_field(args.field) if args.field else None
    report = run_suite(
        args.suite, seed=args.seed, size=args.size, caps=_parse_caps(args.cap), field=field
    )
    _emit(report.to_dict(), args.format, _suite_table(report))
    return _verdict_exit(report.verdict)


def cmd_probe_q1(args):
    field = parse_field(args.field) if args.field else None
    report = probe_q1(
        seed=args.seed, size=args.size, caps=_parse_caps(args.cap), field=field
    )
    _emit(report.to_dict(), args.format, _suite_table(report))
    return _verdict_exit(report.verdict)


def cmd_homology(args):
    ideal = _load_ideal(args.ideal)
    field = parse_field(args.field) if args.field else parse_field("rat")
    alpha = _parse_vec(args.degree)
    kz = KoszulComplex(ideal, field)
    t = args.t
    dim_k = len(kz.basis(t, alpha))
    cyc = kz.cycle_space(t, alpha)
    nbound = len(kz.boundary_image(t, alpha))
    out = {
        "ideal": {"blocks": list(ideal.ring.blocks), "generators": [list(g) for g in ideal.gens]},
        "t": t,
        "degree": list(alpha),
        "dim_K": dim_k,
        "dim_Z": len(cyc.vectors),
        "dim_H": kz.homology_dim(t, alpha),
    }
    table = [
        f"K_{t} at degree {alpha}: dim K = {dim_k}, dim Z = {len(cyc.vectors)}, "
        f"boundary spanning vectors = {nbound}, dim H = {out['dim_H']}"
    ]
    _emit(out, args.format, table)
    return EXIT_PASS


def cmd_cycles(args):
    ideal = _load_ideal(args.ideal)
    field = parse_field(args.field) if args.field else parse_field("rat")
    alpha = _parse_vec(args.degree)
    kz = KoszulComplex(ideal, field)
    cyc = kz.cycle_space(args.t, alpha)
    chains = [kz.vector_chain(args.t, alpha, v).render() for v in cyc.vectors]
    out = {"t": args.t, "degree": list(alpha), "dim": len(chains), "cycles": chains}
    _emit(out, args.format, [f"dim Z = {len(chains)}"] + [f"  {c}" for c in chains])
    return EXIT_PASS


def cmd_betti(args):
    spec = SegreVeroneseSpec(_parse_vec(args.blocks), _parse_vec(args.c))
    field = parse_field(args.field) if args.field else parse_field("rat")
    table = veronese_betti(spec, args.imax, field)
    lines = [f"betti table, rows 0..{args.imax} (certified windows)"]
    for (i, j), d in sorted(table.entries.items()):
        lines.append(f"  beta_{{{i},{j}}} = {d}")
    _emit(table.to_dict(), args.format, lines)
    return EXIT_PASS


def cmd_index(args):
    spec = SegreVeroneseSpec(_parse_vec(args.blocks), _parse_vec(args.c))
    field = parse_field(args.field) if args.field else parse_field("rat")
    target = args.target if args.target is not None else spec.min_c + 1
    res = green_lazarsfeld_index(spec, target, field)
    out = {
        "blocks": list(spec.blocks),
        "c": list(spec.c),
        "target": target,
        "exact": res.exact,
        "value": res.value,
        "witness": list(res.witness) if res.witness else None,
        "satisfied": res.satisfies(target),
    }
    _emit(out, args.format, [res.describe(), f"target {target}: "
                             f"{'satisfied' if res.satisfies(target) else 'violated'}"])
    return EXIT_PASS if res.satisfies(target) else EXIT_VIOLATION


def build_parser():
    parser = argparse.ArgumentParser(
        prog="koszul-lab",
        description="Koszul cycles, homology and regularity of monomial ideals",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ideal=False, spec=False):
        p.add_argument("--field", help="rat or p=<prime>")
        p.add_argument("--format", choices=["json", "table"], default="json")
        if ideal:
            p.add_argument("--ideal", required=True, help="inline JSON or @file")
            p.add_argument("-t", type=int, required=True)
            p.add_argument("--degree", required=True, help="comma-separated multidegree")
        if spec:
            p.add_argument("--blocks", required=True, help="comma-separated block sizes")
            p.add_argument("--c", required=True, help="comma-separated power vector")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--size", type=int, default=None)
    p.add_argument("--cap", action="append", help="KEY=VALUE, repeatable")
    common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("probe-q1", help="capped counterexample probe")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--size", type=int, default=20)
    p.add_argument("--cap", action="append")
    common(p)
    p.set_defaults(fn=cmd_probe_q1)

    p = sub.add_parser("homology", help="dimensions of K, Z, H in one degree")
    common(p, ideal=True)
    p.set_defaults(fn=cmd_homology)

    p = sub.add_parser("cycles", help="render a cycle-space basis in one degree")
    common(p, ideal=True)
    p.set_defaults(fn=cmd_cycles)

    p = sub.add_parser("betti", help="graded Betti table of a Segre-Veronese ring")
    p.add_argument("--imax", type=int, default=2)
    common(p, spec=True)
    p.set_defaults(fn=cmd_betti)

    p = sub.add_parser("index", help="Green-Lazarsfeld index / N_p check")
    p.add_argument("--target", type=int, default=None)
    common(p, spec=True)
    p.set_defaults(fn=cmd_index)

    return parser


def main(argv=None) -> int:
    threads = os.environ.get("KOSZUL_THREADS")
    if threads and threads != "1":
        print("note: KOSZUL_THREADS set; execution is sequential", file=sys.stderr)
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.monotonic()
    try:
        code = args.fn(args)
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (FieldError, ValueError, KeyError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"elapsed: {time.monotonic() - start:.2f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
