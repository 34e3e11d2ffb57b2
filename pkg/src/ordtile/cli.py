"""``ordtile`` command line: analyze / barrier / tile / bottle / crop / probe / verify-suite."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog as catalog_mod
from .barriers import BarrierError, divisibility_barrier, local_barrier, space_barrier
from .bottle import (
    ChiLtNotTwo,
    blowup,
    bottlegraph,
    constructive_blowup_tiling,
    interval_labelings,
)
from .core import GraphFormatError, OrderedGraph, dumps, load
from .crop import crop
from .embed import DEFAULT_BUDGET, Outcome, perfect_tiling, verify_tiling
from .probe import DEFAULT_MAX_REJECTIONS, ProbeError, rows_to_csv, threshold_probe
from .profile import compute_profile
from .suite import EmptyCatalog, Limits, verify_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
# tile reserves 0-3 for its outcomes
EXIT_TILE_IO = 4
MAX_CROP_SETS = 6


class UsageError(Exception):
    pass


def _emit(obj, fmt: str, text: str):
    if fmt == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _load(path: str) -> OrderedGraph:
    try:
        return load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except GraphFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_analyze(args) -> int:
    H = _load(args.pattern)
    prof = compute_profile(H)
    d = prof.as_dict()
    width = max(len(k) for k in d)
    lines = []
    for key, value in d.items():
        if isinstance(value, list):
            value = " ".join(map(str, value))
        lines.append(f"{key:<{width}}  {'-' if value is None else value}")
    _emit(d, args.format, "\n".join(lines))
    return EXIT_OK


def cmd_barrier(args) -> int:
    H = _load(args.pattern)
    try:
        if args.kind == "space":
            cert = space_barrier(H, args.ell, args.n, mirrored=args.mirror)
        elif args.kind == "div":
            cert = divisibility_barrier(H, args.n)
        else:
            cert = local_barrier(H, args.n)
    except BarrierError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        text = json.dumps({"certificate": cert.as_dict(), "graph": json.loads(dumps(cert.graph, "json"))}, indent=2) + "\n"
    else:
        text = "\n".join(cert.header_lines()) + "\n" + dumps(cert.graph)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_tile(args) -> int:
    try:
        G, H = _load(args.host), _load(args.pattern)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TILE_IO
    res = perfect_tiling(G, H, budget=args.budget)
    payload = {"outcome": res.outcome.value, "nodes": res.nodes}
    if res.tiling is not None:
        payload["blocks"] = [list(b.image) for b in res.tiling.blocks]
        payload["verified"] = verify_tiling(G, H, res.tiling)
    text = f"{res.outcome.value} (nodes: {res.nodes})"
    if res.tiling is not None:
        text += "\n" + "\n".join(" ".join(map(str, b.image)) for b in res.tiling.blocks)
    _emit(payload, args.format, text)
    if args.certificate:
        try:
            Path(args.certificate).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
        except OSError as exc:
            print(f"error: cannot write {args.certificate}: {exc.strerror}", file=sys.stderr)
            return EXIT_TILE_IO
    return res.outcome.exit_code


def cmd_bottle(args) -> int:
    H = _load(args.pattern)
    try:
        B = bottlegraph(H)
    except ChiLtNotTwo as exc:
        raise UsageError(str(exc)) from None
    outdir = Path(args.emit_blowup) if args.emit_blowup else None
    if outdir:
        outdir.mkdir(parents=True, exist_ok=True)
    rows = []
    all_ok = True
    for lab in interval_labelings(B, dedup=not args.all_labelings):
        t, tiling = constructive_blowup_tiling(H, B, lab)
        host = blowup(B, lab, t)
        ok = verify_tiling(host, H, tiling)
        all_ok &= ok
        rows.append({"labeling": list(lab.order), "t": t, "n": host.n, "blocks": len(tiling.blocks), "verified": ok})
        if outdir:
            stem = "blowup_" + "-".join(map(str, lab.order))
            (outdir / f"{stem}.txt").write_text(dumps(host), encoding="utf-8")
            (outdir / f"{stem}.tiling.json").write_text(json.dumps(tiling.as_dict()) + "\n", encoding="utf-8")
    summary = B.as_dict()
    lines = [f"bottlegraph: parts {summary['part_sizes']} branch {summary['branch']} "
             f"p={B.p} r={B.r} a={B.a} mirrored={B.mirrored} chi_cr={summary['chi_cr']}"]
    for row in rows:
        lines.append(f"  labeling {row['labeling']}: t={row['t']} n={row['n']} blocks={row['blocks']} "
                     f"{'ok' if row['verified'] else 'REJECTED'}")
    _emit({"bottlegraph": summary, "labelings": rows}, args.format, "\n".join(lines))
    return EXIT_OK if all_ok else EXIT_FAIL


def parse_sets(text: str) -> list[list[int]]:
    try:
        return [[int(x) for x in chunk.split(",") if x.strip()] for chunk in text.split(";")]
    except ValueError:
        raise UsageError(f"cannot parse sets {text!r}; expected e.g. '1,5,9;2,3,4'") from None


def cmd_crop(args) -> int:
    sets = parse_sets(args.sets)
    if len(sets) > MAX_CROP_SETS:
        raise UsageError(f"at most {MAX_CROP_SETS} sets are supported")
    try:
        res = crop(sets)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = [f"S{i} = {{{', '.join(map(str, sorted(s)))}}}" for i, s in enumerate(res.subsets, start=1)]
    lines.append(f"perm = ({', '.join(map(str, res.perm))})")
    _emit(res.as_dict(), args.format, "\n".join(lines))
    return EXIT_OK


def cmd_probe(args) -> int:
    H = _load(args.pattern)
    try:
        rows = threshold_probe(
            H, args.n, args.grid, args.trials, args.seed,
            budget=args.budget, base_p=args.base_p, max_rejections=args.max_rejections, jobs=args.jobs,
        )
    except (ValueError, ProbeError) as exc:
        raise UsageError(str(exc)) from None
    text = rows_to_csv(rows)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    if args.format == "json":
        print(json.dumps([r.__dict__ | {"tiling_rate": r.tiling_rate} for r in rows], indent=2))
    elif not args.out:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify_suite(args) -> int:
    paths = [Path(p) for p in args.patterns]
    if args.catalog_dir:
        folder = Path(args.catalog_dir)
        if not folder.is_dir():
            raise UsageError(f"{folder} is not a directory")
        paths += sorted(folder.glob("*.txt")) + sorted(folder.glob("*.json"))
    if paths:
        entries = [(p.stem, _load(str(p))) for p in paths]
    elif args.catalog_dir:
        entries = []
    else:
        entries = catalog_mod.default_catalog()
    limits = Limits(max_n=args.max_n, naive_hosts=args.naive_hosts, budget=args.budget, seed=args.seed)
    try:
        report = verify_suite(entries, limits)
    except EmptyCatalog as exc:
        raise UsageError(str(exc)) from None
    lines = []
    for c in report.checks:
        params = " ".join(f"{k}={v}" for k, v in c.params.items())
        line = f"{c.outcome.upper():4}  {c.name:<16} {c.pattern:<8} {params:<28} {c.runtime:7.3f}s"
        if c.detail:
            line += f"  ({c.detail})"
        lines.append(line)
    lines.append("OVERALL: " + ("PASS" if report.passed else "FAIL"))
    _emit(report.as_dict(), args.format, "\n".join(lines))
    return EXIT_OK if report.passed else EXIT_FAIL


def _add_global_flags(parser: argparse.ArgumentParser, **defaults):
    parser.add_argument("--format", choices=("text", "json"), default=defaults["format"])
    parser.add_argument("--seed", type=int, default=defaults["seed"])
    parser.add_argument("--budget", type=int, default=defaults["budget"], help="oracle node budget")
    parser.add_argument("--jobs", type=int, default=defaults["jobs"], help="worker processes (probe)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ordtile", description=__doc__)
    _add_global_flags(parser, format="text", seed=0, budget=DEFAULT_BUDGET, jobs=1)
    # subcommands accept the same flags; SUPPRESS keeps them from clobbering earlier values
    common = argparse.ArgumentParser(add_help=False)
    _add_global_flags(common, **dict.fromkeys(("format", "seed", "budget", "jobs"), argparse.SUPPRESS))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="print the pattern profile")
    p.add_argument("pattern")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("barrier", parents=[common], help="build an extremal graph")
    p.add_argument("--kind", choices=("space", "div", "local"), required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, default=1)
    p.add_argument("--mirror", action="store_true", help="alpha^- side of the space barrier")
    p.add_argument("--out")
    p.set_defaults(func=cmd_barrier)

    p = sub.add_parser("tile", parents=[common], help="decide perfect tileability (exit 0/1/2/3)")
    p.add_argument("--host", required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--certificate")
    p.set_defaults(func=cmd_tile)

    p = sub.add_parser("bottle", parents=[common], help="bottlegraph and blow-up tilings")
    p.add_argument("--pattern", required=True)
    p.add_argument("--all-labelings", action="store_true", help="do not merge labelings with equal size sequences")
    p.add_argument("--emit-blowup", metavar="DIR")
    p.set_defaults(func=cmd_bottle)

    p = sub.add_parser("crop", parents=[common], help="block-ordered subsets of disjoint sets")
    p.add_argument("--sets", required=True, help="e.g. '1,5,9;2,3,4'")
    p.set_defaults(func=cmd_crop)

    p = sub.add_parser("probe", parents=[common], help="random-graph oracle sweep to CSV")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--grid", required=True, help="p=LO:HI:STEP, p=a,b,c or mindeg=LO:HI:STEP")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--base-p", type=float, default=0.5, help="edge probability for mindeg grids")
    p.add_argument("--max-rejections", type=int, default=DEFAULT_MAX_REJECTIONS)
    p.add_argument("--out")
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("verify-suite", parents=[common], help="run the invariant battery")
    p.add_argument("patterns", nargs="*", help="pattern files (default: shipped catalog)")
    p.add_argument("--max-n", type=int, default=18)
    p.add_argument("--naive-hosts", type=int, default=40)
    p.add_argument("--catalog-dir", help="directory of pattern files (*.txt, *.json)")
    p.set_defaults(func=cmd_verify_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
