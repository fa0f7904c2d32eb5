"""Exhaustive verification campaigns behind ``corespan verify``.

Each campaign walks a finite grid, records how many checks it attempted and
passed, and keeps the first counterexample it meets.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import kernels
from .abacus import (
    core,
    cores_up_to,
    enumerate_class,
    g_c,
    g_c_inv,
    in_kc,
)
from .errors import PreconditionViolated
from .involution import (
    ArrivalFamily,
    classify,
    distance_steps_ok,
    first_arrival_tree,
    involute,
    reconstruct,
)
from .multigraph import (
    build_tour,
    canonical_k,
    change_vertices,
    check_slope,
    crit_total_formula,
    lambda_rsk,
    multigraph,
    multigraph_equal,
    multigraph_key,
    multigraph_successor,
    delta_crit_total,
    delta_mid,
    successors,
)
from .partition import Partition, partitions_of, partitions_up_to
from .series import (
    bfn_series,
    box_cstar_series,
    crit_plus_series,
    lhs_series,
    rhs_series,
)
from .statistics import Slope, critical_rationals, interior_points

SLOPE_GRID = ((1, 1), (2, 1), (1, 2), (3, 2), (3, 1), (1, 3))
SUCCESSOR_SLOPES = ((1, 1), (2, 1), (3, 2), (3, 1), (1, 3))


@dataclass
class VerifyReport:
    campaign: str
    params: dict = field(default_factory=dict)
    attempted: int = 0
    passed: int = 0
    counterexample: dict | None = None
    wall_time: float | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def check(self, condition: bool, **detail) -> bool:
        self.attempted += 1
        if condition:
            self.passed += 1
        elif self.counterexample is None:
            self.counterexample = _jsonable(detail)
        return condition

    def absorb(self, other: "VerifyReport") -> None:
        self.attempted += other.attempted
        self.passed += other.passed
        if self.counterexample is None:
            self.counterexample = other.counterexample

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "campaign": self.campaign,
            "params": _jsonable(self.params),
            "checks_attempted": self.attempted,
            "checks_passed": self.passed,
            "pass": self.ok,
            "counterexample": self.counterexample,
        }
        if timing:
            out["wall_time"] = None if self.wall_time is None else round(self.wall_time, 3)
        return out


def _jsonable(value):
    if isinstance(value, Slope):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.wall_time = time.perf_counter() - start
        return report
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _run_cells(campaign: str, params: dict, worker: Callable, cells: list, jobs: int,
               progress: Callable | None) -> VerifyReport:
    report = VerifyReport(campaign, params)
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(worker, cells))
    else:
        results = map(worker, cells)
    for cell, part in zip(cells, results):
        report.absorb(part)
        if progress is not None:
            progress(cell, part)
    return report


# -- equidistribution -------------------------------------------------------

def _class_counts(members, r, s, c):
    return {lam: kernels.cell_counts(tuple(lam), r, s, c) for lam in members}


def _equidistribution_cell(cell) -> VerifyReport:
    n, c = cell
    report = VerifyReport("equidistribution", {"n": n, "c": c})
    for mu in cores_up_to(c, n):
        members = list(enumerate_class(mu, c, n))
        if not members:
            continue
        member_set = set(members)
        crit = critical_rationals(members, c)
        where = {"n": n, "c": c, "core": list(mu)}
        for x in crit:
            if x.is_zero or x.is_infinite:
                continue
            counts = _class_counts(members, x.r, x.s, c)
            plus = sorted(m + p for m, p, _ in counts.values())
            minus = sorted(m + q for m, _, q in counts.values())
            report.check(plus == minus, **where, slope=x, reason="h+ and h- distributions differ")
            images = {lam: involute(lam, x.r, x.s, c) for lam in members}
            witness = set(images.values()) == member_set and all(
                sum(counts[images[lam]][:2]) == counts[lam][0] + counts[lam][2]
                for lam in members)
            report.check(witness, **where, slope=x, reason="involution is not a witness")
        for x in interior_points(crit):
            counts = _class_counts(members, x.r, x.s, c)
            report.check(all(p == q for _, p, q in counts.values()), **where, slope=x,
                         reason="h+ != h- inside a critical interval")
    return report


@_timed
def verify_equidistribution(nmax: int, cs: Iterable[int] = (1, 2, 3, 4), jobs: int = 1,
                            progress=None) -> VerifyReport:
    """h+ and h- agree in distribution at every critical rational of every class."""
    cs = tuple(cs)
    cells = [(n, c) for n in range(nmax + 1) for c in cs]
    return _run_cells("equidistribution", {"nmax": nmax, "c": list(cs)},
                      _equidistribution_cell, cells, jobs, progress)


# -- generating functions ---------------------------------------------------

@_timed
def verify_main_theorem(mu, c: int, nq: int = 20, nt: int = 20) -> VerifyReport:
    """Both h-generating functions of a class equal the product formula at every critical rational."""
    mu = Partition(mu)
    report = VerifyReport("main-theorem", {"core": list(mu), "c": c, "Nq": nq, "Nt": nt})
    rhs = rhs_series(mu, c, nq, nt)
    report.check(box_cstar_series(mu, c, nq, nt) == rhs, core=list(mu), c=c, slope="box",
                 diff=_diff(box_cstar_series(mu, c, nq, nt), rhs))
    members = [lam for n in range(mu.size, nq + 1) for lam in enumerate_class(mu, c, n)]
    for x in critical_rationals(members, c):
        if not x.is_infinite:
            lhs = lhs_series(mu, c, x, "+", nq, nt)
            report.check(lhs == rhs, core=list(mu), c=c, slope=x, sign="+", diff=_diff(lhs, rhs))
        if not x.is_zero:
            lhs = lhs_series(mu, c, x, "-", nq, nt)
            report.check(lhs == rhs, core=list(mu), c=c, slope=x, sign="-", diff=_diff(lhs, rhs))
    return report


def _diff(a, b):
    return a.first_difference(b)


@_timed
def verify_bfn(r: int, s: int, c: int, nq: int = 18) -> VerifyReport:
    """crit+ over all partitions matches the product formula when ``r + s`` divides ``c``."""
    check_slope(r, s, c)
    if c % (r + s):
        raise PreconditionViolated(f"r + s = {r + s} does not divide c = {c}")
    report = VerifyReport("bfn", {"r": r, "s": s, "c": c, "Nq": nq})
    lhs, rhs = crit_plus_series(r, s, c, nq, nq), bfn_series(c, nq, nq)
    report.check(lhs == rhs, diff=_diff(lhs, rhs))
    return report


@_timed
def verify_glaisher(nmax: int = 14, cs: Iterable[int] = (1, 2, 3, 4)) -> VerifyReport:
    """The multiplicity split is a bijection that keeps track of size and core."""
    cs = tuple(cs)
    report = VerifyReport("glaisher", {"nmax": nmax, "c": list(cs)})
    for c in cs:
        for n in range(nmax + 1):
            seen = set()
            for lam in partitions_of(n):
                xi, nu = g_c(lam, c)
                report.check(g_c_inv(xi, nu, c) == lam and in_kc(nu, c)
                             and n == c * xi.size + nu.size and core(nu, c) == core(lam, c),
                             c=c, partition=list(lam))
                seen.add((xi, nu))
            report.check(len(seen) == len(partitions_of(n)), c=c, n=n, reason="not injective")
    return report


# -- multigraph campaigns ---------------------------------------------------

def _crit_total(lam, r, s, c):
    _, p, q = kernels.cell_counts(tuple(lam), r, s, c)
    return p + q


@_timed
def verify_successor_lemmas(nmax: int, slopes=SUCCESSOR_SLOPES, cs=(1, 2, 3)) -> VerifyReport:
    """Successor formulas for mid and crit totals, and the tree-distance step rule."""
    report = VerifyReport("successor-lemmas",
                          {"nmax": nmax, "slopes": [list(x) for x in slopes], "c": list(cs)})
    for c in cs:
        for r, s in slopes:
            for n in range(nmax):
                for lam in partitions_of(n):
                    where = {"partition": list(lam), "r": r, "s": s, "c": c}
                    t = build_tour(lam, r, s, c)
                    report.check(distance_steps_ok(t), **where, reason="distance step rule")
                    m = t.multigraph()
                    changes = set(change_vertices(m))
                    mid0, p0, q0 = kernels.cell_counts(tuple(lam), r, s, c)
                    found = set()
                    for plus in successors(lam, r, s, c):
                        (x, y), = [(p - 1 if y < len(lam) else 0, y)
                                   for y, p in enumerate(plus) if y >= len(lam) or p != lam[y]]
                        change = (s * x + r * y, (x - y) % c)
                        found.add(change)
                        detail = dict(where, successor=list(plus), change=list(change))
                        if not report.check(change in changes, **detail, reason="change vertex"):
                            continue
                        grown, _ = multigraph_successor(m, change[1])
                        report.check(multigraph_equal(grown, multigraph(plus, r, s, c)),
                                     **detail, reason="multigraph successor")
                        mid1, p1, q1 = kernels.cell_counts(tuple(plus), r, s, c)
                        report.check(delta_mid(m, change) == mid1 - mid0, **detail,
                                     reason="mid difference")
                        report.check(delta_crit_total(m, change) == (p1 + q1) - (p0 + q0),
                                     **detail, reason="crit total difference")
                    report.check(found == changes, **where, reason="successors vs change vertices")
    return report


@_timed
def verify_determinacy(nmax: int, slopes=SUCCESSOR_SLOPES, cs=(1, 2, 3)) -> VerifyReport:
    """Size, core, mid and crit total depend only on the multigraph."""
    report = VerifyReport("multigraph-determinacy",
                          {"nmax": nmax, "slopes": [list(x) for x in slopes], "c": list(cs)})
    for c in cs:
        for r, s in slopes:
            for n in range(nmax + 1):
                members = partitions_of(n)
                k = max(canonical_k(lam, r, s, c) for lam in members)
                groups: dict[tuple, list] = {}
                for lam in members:
                    groups.setdefault(multigraph_key(lam, r, s, c, k), []).append(lam)
                    t = build_tour(lam, r, s, c)
                    report.check(crit_total_formula(t) == _crit_total(lam, r, s, c),
                                 partition=list(lam), r=r, s=s, c=c, reason="crit total formula")
                for group in groups.values():
                    values = {(lam.size, core(lam, c), kernels.cell_counts(tuple(lam), r, s, c)[0],
                               _crit_total(lam, r, s, c)) for lam in group}
                    report.check(len(values) == 1, group=[list(g) for g in group],
                                 r=r, s=s, c=c, reason="multigraph does not determine")
    return report


@_timed
def verify_involution(nmax: int, slopes=SLOPE_GRID, cs=(1, 2, 3), switches_up_to: int = 10
                      ) -> VerifyReport:
    """The involution squares to the identity and swaps crit+ with crit-."""
    report = VerifyReport("involution",
                          {"nmax": nmax, "slopes": [list(x) for x in slopes], "c": list(cs)})
    for c in cs:
        for r, s in slopes:
            for lam in partitions_up_to(nmax):
                where = {"partition": list(lam), "r": r, "s": s, "c": c}
                image = involute(lam, r, s, c)
                report.check(involute(image, r, s, c) == lam, **where, reason="not an involution")
                mid0, p0, q0 = kernels.cell_counts(tuple(lam), r, s, c)
                mid1, p1, q1 = kernels.cell_counts(tuple(image), r, s, c)
                report.check(image.size == lam.size and core(image, c) == core(lam, c)
                             and mid1 == mid0 and p1 == q0 and q1 == p0,
                             **where, image=list(image), reason="statistics not exchanged")
                k = max(canonical_k(lam, r, s, c), canonical_k(image, r, s, c))
                report.check(multigraph_key(lam, r, s, c, k) == multigraph_key(image, r, s, c, k),
                             **where, image=list(image), reason="multigraph changed")
                if lam.size <= switches_up_to:
                    t0, t1 = build_tour(lam, r, s, c, k), build_tour(image, r, s, c, k)
                    sw0 = {v for v, cls in classify(t0).items() if cls == "switch"}
                    sw1 = {v for v, cls in classify(t1).items() if cls == "switch"}
                    report.check(sw0 == sw1, **where, reason="switch set changed")
    return report


@_timed
def verify_round_trips(nmax: int, slopes=SLOPE_GRID, cs=(1, 2, 3, 4)) -> VerifyReport:
    """Tours reconstruct their partition; the multiplicity split inverts."""
    report = VerifyReport("round-trips",
                          {"nmax": nmax, "slopes": [list(x) for x in slopes], "c": list(cs)})
    for lam in partitions_up_to(nmax):
        for c in cs:
            xi, nu = g_c(lam, c)
            report.check(g_c_inv(xi, nu, c) == lam, partition=list(lam), c=c, reason="g_c")
            for r, s in slopes:
                t = build_tour(lam, r, s, c)
                report.check(reconstruct(ArrivalFamily.from_tour(t)) == lam,
                             partition=list(lam), r=r, s=s, c=c, reason="reconstruct")
    return report


def accumulation_windows(max_size: int, slopes=SLOPE_GRID, cs=(1, 2, 3)):
    """Every ``(r, s, c, k)`` with ``r*s*c | k`` and ``|lambda_rsk| <= max_size``."""
    out = []
    for c in cs:
        for r, s in slopes:
            k = r * s * c
            while lambda_rsk(r, s, k).size <= max_size:
                out.append((r, s, c, k))
                k += r * s * c
    return out


@_timed
def verify_accumulation_uniqueness(max_size: int = 30, slopes=SLOPE_GRID, cs=(1, 2, 3)
                                   ) -> VerifyReport:
    """At ``lambda_rsk`` the multigraph pins the partition down among all partitions of its size."""
    report = VerifyReport("accumulation-uniqueness",
                          {"max_size": max_size, "slopes": [list(x) for x in slopes], "c": list(cs)})
    for r, s, c, k in accumulation_windows(max_size, slopes, cs):
        target = lambda_rsk(r, s, k)
        members = partitions_of(target.size)
        window = max([k] + [canonical_k(lam, r, s, c) for lam in members])
        key = multigraph_key(target, r, s, c, window)
        same = [lam for lam in members if multigraph_key(lam, r, s, c, window) == key]
        report.check(same == [target], r=r, s=s, c=c, k=k, found=[list(x) for x in same])
        tree = first_arrival_tree(build_tour(target, r, s, c, k))
        report.check(not any(cls == "switch" for cls in classify(build_tour(target, r, s, c, k),
                                                                  tree).values()),
                     r=r, s=s, c=c, k=k, reason="switch at lambda_rsk")
    return report


# -- worked examples --------------------------------------------------------

# arrival words of (12,12,10,8,7,4,1,1,1) at (r, s, c) = (3, 2, 2) up to level 30
WORKED_TABLE = {
    (20, 1): "S", (22, 0): "E", (23, 0): "S", (23, 1): "S",
    (24, 0): "S", (24, 1): "E", (25, 0): "E", (25, 1): "S",
    (26, 0): "ES", (26, 1): "SSE", (27, 0): "E", (27, 1): "SES",
    (28, 0): "EE", (28, 1): "E", (29, 0): "EE", (29, 1): "E",
    (30, 0): "SE", (30, 1): "E",
}
WORKED_PARTITION = (12, 12, 10, 8, 7, 4, 1, 1, 1)


def worked_family() -> ArrivalFamily:
    return ArrivalFamily.from_table(3, 2, 2, WORKED_TABLE, generic_above=30)


EXTENDED_CLASS = [(6, 1), (4, 3), (4, 1, 1, 1), (2, 2, 2, 1), (2, 1, 1, 1, 1, 1)]
EXTENDED_STEPS = [
    ((3, 1), {(6, 1): (4, 3), (4, 3): (6, 1)}),
    ((1, 1), {(6, 1): (2, 1, 1, 1, 1, 1), (4, 3): (2, 2, 2, 1), (4, 1, 1, 1): (4, 1, 1, 1)}),
    ((1, 3), {(2, 2, 2, 1): (2, 1, 1, 1, 1, 1)}),
]
EXTENDED_COMPOSITE = {
    (6, 1): (2, 1, 1, 1, 1, 1), (4, 3): (2, 2, 2, 1), (4, 1, 1, 1): (4, 1, 1, 1),
}


@_timed
def verify_example_extended() -> VerifyReport:
    """Replay the class of the core (2, 1) at size 7 for c = 2 through three involutions."""
    from .statistics import h_plus, lambda_box_cstar

    c = 2
    report = VerifyReport("example-extended", {"core": [2, 1], "c": c, "n": 7})
    members = sorted(tuple(lam) for lam in enumerate_class((2, 1), c, 7))
    report.check(members == sorted(EXTENDED_CLASS), found=[list(m) for m in members],
                 reason="class membership")
    crit = [str(x) for x in critical_rationals([Partition(m) for m in members], c)]
    report.check(crit == ["0", "1/3", "1", "3", "inf"], found=crit, reason="critical rationals")

    def composite(lam):
        for (r, s), _ in EXTENDED_STEPS:
            lam = involute(lam, r, s, c)
        return lam

    for (r, s), expected in EXTENDED_STEPS:
        images = {m: tuple(involute(m, r, s, c)) for m in members}
        for src, dst in expected.items():
            report.check(images[src] == dst, slope=[r, s], input=list(src),
                         output=list(images[src]), expected=list(dst))
        report.check(all(images[images[m]] == m for m in members), slope=[r, s],
                     reason="not an involution on the class")
    for src, dst in EXTENDED_COMPOSITE.items():
        out = tuple(composite(src))
        report.check(out == dst, input=list(src), output=list(out), expected=list(dst),
                     reason="composite")
    report.check(all(tuple(composite(composite(m))) == m for m in members),
                 reason="composite is not an involution")
    # h+ at a slope above every critical rational becomes the rectangle count at 0
    report.check(all(h_plus(m, 4, c) == lambda_box_cstar(composite(m), c) for m in members),
                 reason="h+ at 4 vs rectangle count of the composite image")
    report.check(h_plus((6, 1), 4, c) == 2 and lambda_box_cstar((2, 1, 1, 1, 1, 1), c) == 2,
                 reason="h+ of (6,1) at 4")
    return report
