"""``corespan`` command line.

Data commands print one JSON object.  ``verify`` commands print a summary
line, or JSON Lines with ``--json`` (one line per finished grid cell for the
long campaigns, then the report).  Exit status: 0 pass, 1 verification
failure, 2 usage or precondition error.

``CORESPAN_SEED`` is reserved and ignored: every check is exhaustive.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import kernels, verify
from .abacus import core, core_charges, enumerate_class, g_c, quotient
from .errors import CorespanError
from .involution import involute
from .multigraph import build_tour, to_dot
from .partition import Partition, parse_partition, partitions_of
from .statistics import Slope, Stat, distribution, stat_report


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _slope_list(text: str) -> list[tuple[int, int]]:
    out = []
    for item in text.split(","):
        x = Slope.parse(item)
        if x.is_zero or x.is_infinite:
            raise argparse.ArgumentTypeError(f"slope {item} must be positive and finite")
        out.append((x.r, x.s))
    return out


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")), flush=True)


# -- data commands ----------------------------------------------------------

def cmd_core(args):
    lam = args.partition
    _emit({"partition": list(lam), "c": args.c, "core": list(core(lam, args.c)),
           "charges": list(core_charges(lam, args.c))})
    return 0


def cmd_quotient(args):
    lam = args.partition
    _emit({"partition": list(lam), "c": args.c, "core": list(core(lam, args.c)),
           "charges": list(core_charges(lam, args.c)),
           "quotient": [list(q) for q in quotient(lam, args.c)]})
    return 0


def cmd_gc(args):
    xi, nu = g_c(args.partition, args.c)
    _emit({"partition": list(args.partition), "c": args.c, "xi": list(xi), "nu": list(nu)})
    return 0


def cmd_stats(args):
    report = stat_report(args.partition, args.slope, args.c)
    _emit({"partition": list(args.partition), "c": args.c, "slope": str(args.slope),
           **report.to_json()})
    return 0


def cmd_distribution(args):
    if args.core is None:
        members = partitions_of(args.n)
    else:
        members = enumerate_class(args.core, args.c, args.n)
    coeffs = distribution(args.stat, members, args.slope, args.c)
    _emit({"stat": args.stat, "n": args.n, "c": args.c, "slope": str(args.slope),
           "core": None if args.core is None else list(args.core), "coeffs": coeffs})
    return 0


def cmd_multigraph(args):
    t = build_tour(args.partition, args.r, args.s, args.c, args.k)
    m = t.multigraph()
    if args.dot:
        print(to_dot(m))
        return 0
    vertices = []
    for entry in m.to_json()["vertices"]:
        vx = (entry["v"], entry["i"])
        entry["arrival"] = t.arrival_word(vx)
        entry["departure"] = t.departure_word(vx)
        vertices.append(entry)
    _emit({"partition": list(args.partition), "r": args.r, "s": args.s, "c": args.c,
           "k": t.k, "vertices": vertices})
    return 0


def cmd_involute(args):
    lam = args.partition
    out = involute(lam, args.r, args.s, args.c, args.k)
    mid_in, plus_in, minus_in = kernels.cell_counts(tuple(lam), args.r, args.s, args.c)
    _, plus_out, minus_out = kernels.cell_counts(tuple(out), args.r, args.s, args.c)
    _emit({"input": list(lam), "output": list(out), "report": {
        "mid": mid_in, "crit_plus_in": plus_in, "crit_minus_in": minus_in,
        "crit_plus_out": plus_out, "crit_minus_out": minus_out}})
    return 0


# -- verification -----------------------------------------------------------

def _finish(report: verify.VerifyReport, args) -> int:
    if args.json:
        _emit(report.to_json(timing=not args.no_timing))
    else:
        status = "PASS" if report.ok else "FAIL"
        line = f"{status} {report.campaign}: {report.passed}/{report.attempted} checks"
        if not args.no_timing and report.wall_time is not None:
            line += f" in {report.wall_time:.2f}s"
        print(line)
        if not report.ok:
            print("counterexample: " + json.dumps(report.counterexample))
    return 0 if report.ok else 1


def _progress(args):
    if not args.json:
        return None

    def show(cell, part):
        n, c = cell
        _emit({"cell": {"n": n, "c": c}, "checks_attempted": part.attempted,
               "checks_passed": part.passed, "pass": part.ok})
    return show


def cmd_verify(args):
    which = args.campaign
    c_list = args.c or [1, 2, 3, 4]
    if which == "equidistribution":
        report = verify.verify_equidistribution(args.nmax, c_list, args.jobs, _progress(args))
    elif which == "main-theorem":
        if args.partition is None or not args.c:
            raise CorespanError("main-theorem needs --partition (a core) and --c")
        report = verify.verify_main_theorem(args.partition, args.c[0], args.qmax, args.tmax)
    elif which == "bfn":
        if args.r is None or args.s is None or not args.c:
            raise CorespanError("bfn needs --r, --s and --c")
        report = verify.verify_bfn(args.r, args.s, args.c[0], args.qmax)
    elif which == "successor-lemmas":
        report = verify.verify_successor_lemmas(
            args.nmax, args.slope or verify.SUCCESSOR_SLOPES, args.c or (1, 2, 3))
    elif which == "determinacy":
        report = verify.verify_determinacy(
            args.nmax, args.slope or verify.SUCCESSOR_SLOPES, args.c or (1, 2, 3))
    elif which == "involution":
        report = verify.verify_involution(
            args.nmax, args.slope or verify.SUCCESSOR_SLOPES, args.c or (1, 2, 3))
    elif which == "round-trips":
        report = verify.verify_round_trips(args.nmax, args.slope or verify.SLOPE_GRID, c_list)
    elif which == "uniqueness":
        report = verify.verify_accumulation_uniqueness(
            args.max_size, args.slope or verify.SLOPE_GRID, args.c or (1, 2, 3))
    elif which == "glaisher":
        report = verify.verify_glaisher(args.nmax, c_list)
    elif which == "example":
        report = verify.verify_example_extended()
    else:  # pragma: no cover - argparse restricts the choices
        raise CorespanError(f"unknown campaign {which}")
    return _finish(report, args)


def cmd_example(args):
    return _finish(verify.verify_example_extended(), args)


# -- parser -----------------------------------------------------------------

CAMPAIGNS = ("equidistribution", "main-theorem", "bfn", "successor-lemmas", "glaisher",
             "determinacy", "involution", "round-trips", "uniqueness", "example")


def build_parser() -> argparse.ArgumentParser:
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--json", action="store_true", help="emit JSON Lines")
    output.add_argument("--no-timing", action="store_true", help="omit wall-clock times")

    part = argparse.ArgumentParser(add_help=False)
    part.add_argument("--partition", type=parse_partition, required=True,
                      help="comma separated parts, e.g. 4,2,1 (empty string for ())")

    rsc = argparse.ArgumentParser(add_help=False)
    rsc.add_argument("--r", type=int, required=True)
    rsc.add_argument("--s", type=int, required=True)
    rsc.add_argument("--c", type=int, required=True)

    parser = argparse.ArgumentParser(prog="corespan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (("core", cmd_core, "c-core and runner charges"),
                               ("quotient", cmd_quotient, "c-core, charges and c-quotient"),
                               ("gc", cmd_gc, "split by multiplicities into (xi, nu)")):
        p = sub.add_parser(name, parents=[output, part], help=helptext)
        p.add_argument("--c", type=int, required=True)
        p.set_defaults(func=fn)

    p = sub.add_parser("stats", parents=[output, part], help="hook statistics at a slope")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--slope", type=Slope.parse, required=True, help="r/s, integer or inf")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("distribution", parents=[output], help="distribution of a statistic")
    p.add_argument("--stat", choices=[s.value for s in Stat], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, default=1)
    p.add_argument("--slope", type=Slope.parse, default=None)
    p.add_argument("--core", type=parse_partition, default=None,
                   help="restrict to the class of this c-core")
    p.set_defaults(func=cmd_distribution)

    p = sub.add_parser("multigraph", parents=[output, part, rsc], help="tour and multigraph")
    p.add_argument("--k", type=int, default=None, help="window (multiple of r*s*c)")
    p.add_argument("--dot", action="store_true", help="print a DOT graph instead of JSON")
    p.set_defaults(func=cmd_multigraph)

    p = sub.add_parser("involute", parents=[output, part, rsc], help="apply the involution")
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=cmd_involute)

    p = sub.add_parser("verify", parents=[output], help="run a verification campaign")
    p.add_argument("campaign", choices=CAMPAIGNS)
    p.add_argument("variant", nargs="?", choices=["extended"], help="for 'example'")
    p.add_argument("--partition", type=parse_partition, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--c", type=_int_list, default=None, help="comma separated list")
    p.add_argument("--slope", type=_slope_list, default=None, help="comma separated r/s list")
    p.add_argument("--nmax", type=int, default=10)
    p.add_argument("--qmax", type=int, default=20)
    p.add_argument("--tmax", type=int, default=20)
    p.add_argument("--max-size", type=int, default=30, help="for 'uniqueness'")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("example", parents=[output], help="replay a worked example")
    p.add_argument("variant", choices=["extended"])
    p.set_defaults(func=cmd_example)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CorespanError as exc:
        print(f"corespan: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
