"""Command-line front end.

Exit codes: 0 success, 1 a verification found violations, 2 usage or parse
error, 3 enumeration cap or precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import lusztig, orders, verify
from .partitions import (
    CapExceededError,
    enumerate_bipartitions,
    enumerate_Xn,
    parse_bipartition,
    parse_partition,
    get_cap,
    set_cap,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


def _partition_arg(text):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _bipartition_arg(text):
    try:
        return parse_bipartition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _nonneg(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _add_globals(parser, suppress):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("text", "json", "dot"), default=default("text"))
    parser.add_argument("--convention", choices=lusztig.CONVENTIONS, default=default(lusztig.T0_SWAP),
                        help="orientation of the image when t = 0")
    parser.add_argument("--cap", type=_nonneg, default=default(get_cap()),
                        help="largest n or m that may be enumerated")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spin-springer",
        description="Lusztig's map from X_n to bipartitions and the dominance orders on both sides.")
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def leaf(parent, name, **kw):
        p = parent.add_parser(name, **kw)
        _add_globals(p, suppress=True)
        return p

    p = leaf(sub, "map", help="image of a partition in X_n")
    p.add_argument("partition", type=_partition_arg)

    p = leaf(sub, "invert", help="preimage of a bipartition in the fiber over t")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("bipartition", type=_bipartition_arg)

    p = leaf(sub, "enum-xn", help="list X_n")
    p.add_argument("n", type=_nonneg)

    p = leaf(sub, "enum-bipartitions", help="list bipartitions of m")
    p.add_argument("m", type=_nonneg)

    p = sub.add_parser("verify", help="run a verification check")
    checks = p.add_subparsers(dest="check", required=True)
    c = leaf(checks, "bijection")
    c.add_argument("--n", type=_nonneg, required=True)
    for name in ("lemma1", "lemma2", "theorem"):
        c = leaf(checks, name)
        c.add_argument("--m", type=_nonneg, required=True)
        c.add_argument("--t", type=int, required=True)

    p = leaf(sub, "scan-threshold", help="violation counts of the order theorem over a range of t")
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--t-min", type=int, required=True)
    p.add_argument("--t-max", type=int, required=True)

    p = leaf(sub, "counterexample", help="the t = m - 1 pair ordered differently on both sides")
    p.add_argument("--t", type=int, required=True)

    p = sub.add_parser("hasse", help="cover relations of a poset")
    kinds = p.add_subparsers(dest="kind", required=True)
    c = leaf(kinds, "xn")
    c.add_argument("--n", type=_nonneg, required=True)
    c = leaf(kinds, "bipartitions")
    c.add_argument("--m", type=_nonneg, required=True)
    c.add_argument("--induced", action="store_true", help="order pulled back from X_n")
    c.add_argument("--t", type=int)
    return parser


def emit_dot(edges: orders.PosetEdges, label=str) -> str:
    lines = ["digraph poset {", "  rankdir=BT;"]
    for i, element in enumerate(edges.elements):
        lines.append(f'  n{i} [label="{label(element)}"];')
    for lo, hi in edges.cover_pairs:
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _report_output(report, fmt) -> tuple[str, int]:
    code = EXIT_OK if report.passed else EXIT_FAILED
    if fmt == "json":
        return report.to_json() + "\n", code
    lines = [f"{report.check} {' '.join(f'{k}={v}' for k, v in sorted(report.params.items()))}: "
             f"{'PASS' if report.passed else 'FAIL'}"]
    for key, value in sorted(report.counters.items()):
        lines.append(f"  {key}: {value}")
    for v in report.violations:
        lines.append(f"  violation: {json.dumps(v, sort_keys=True)}")
    return "\n".join(lines) + "\n", code


def _hasse(args):
    if args.kind == "xn":
        elements = list(enumerate_Xn(args.n))
        leq = orders.dominance_leq
    else:
        elements = list(enumerate_bipartitions(args.m))
        if args.induced:
            if args.t is None:
                raise ValueError("--induced requires --t")
            images = {bp: orders.induced_image(bp, args.t, args.convention) for bp in elements}
            leq = lambda a, b: orders.dominance_leq(images[a], images[b])  # noqa: E731
        else:
            leq = orders.djm_leq
    edges = orders.hasse_edges(elements, leq)
    if args.format == "dot":
        return emit_dot(edges)
    if args.format == "json":
        return _dump({
            "elements": [str(e) for e in edges.elements],
            "covers": [[str(edges.elements[i]), str(edges.elements[j])] for i, j in edges.cover_pairs],
        })
    return "".join(f"{edges.elements[i]} < {edges.elements[j]}\n" for i, j in edges.cover_pairs)


def _execute(args) -> tuple[str, int]:
    fmt = args.format
    cmd = args.command
    if cmd == "map":
        image = lusztig.forward_map(args.partition, args.convention)
        if fmt == "json":
            return _dump({
                "partition": str(args.partition), "t": image.t,
                "bipartition": str(image.bipartition),
                "alpha_raw": list(image.alpha_raw), "beta_raw": list(image.beta_raw),
            }), EXIT_OK
        return f"t={image.t} {image.bipartition}\n", EXIT_OK
    if cmd == "invert":
        bp, t = args.bipartition, args.t
        lam = lusztig.inverse(bp, t, args.convention)
        route = "closed-form" if t >= bp.weight else "scan"
        if lam is None:
            raise orders.PreimageNotFound(f"no preimage of t={t}, {bp}")
        if fmt == "json":
            return _dump({"bipartition": str(bp), "t": t, "partition": str(lam),
                          "n": lam.weight, "route": route}), EXIT_OK
        return f"{lam}\n", EXIT_OK
    if cmd in ("enum-xn", "enum-bipartitions"):
        items = list(enumerate_Xn(args.n) if cmd == "enum-xn" else enumerate_bipartitions(args.m))
        if fmt == "json":
            return _dump([str(x) for x in items]), EXIT_OK
        return "".join(f"{x}\n" for x in items), EXIT_OK
    if cmd == "verify":
        if args.check == "bijection":
            report = verify.verify_bijection(args.n, args.convention)
        else:
            fn = {"lemma1": verify.verify_lemma1, "lemma2": verify.verify_lemma2,
                  "theorem": verify.verify_theorem}[args.check]
            report = fn(args.m, args.t, convention=args.convention)
        return _report_output(report, fmt)
    if cmd == "scan-threshold":
        rows = verify.scan_threshold(args.m, args.t_min, args.t_max, args.convention)
        if fmt == "json":
            return _dump({"m": args.m, "counts": [{"t": t, "violations": c} for t, c in rows]}), EXIT_OK
        return "".join(f"t={t} violations={c}\n" for t, c in rows), EXIT_OK
    if cmd == "counterexample":
        return _report_output(verify.reproduce_counterexample(args.t, args.convention), fmt)
    if cmd == "hasse":
        return _hasse(args), EXIT_OK
    raise AssertionError(cmd)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if args.format == "dot" and args.command != "hasse":
        print(f"{parser.prog}: error: --format dot is only valid for hasse", file=stderr)
        return EXIT_USAGE
    previous = get_cap()
    set_cap(args.cap)
    try:
        text, code = _execute(args)
    except (CapExceededError, ValueError, LookupError) as exc:
        print(f"{parser.prog}: {exc}", file=stderr)
        return EXIT_PRECONDITION
    finally:
        set_cap(previous)
    stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
