"""Slow, independent reference implementations used only by the tests.

Nothing here imports corespan; every routine works from the raw definitions
(cell sets, beta numbers, exact fractions).
"""
from __future__ import annotations

from fractions import Fraction

INF = None  # stands for infinity in slope comparisons


def partitions(n, largest=None):
    """All partitions of ``n`` in reverse lexicographic order, by plain recursion."""
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    return [(first,) + rest
            for first in range(min(n, largest), 0, -1)
            for rest in partitions(n - first, first)]


def cells(lam):
    return {(x, y) for y, p in enumerate(lam) for x in range(p)}


def arm_leg_hook(lam, cell):
    box = cells(lam)
    x, y = cell
    arm = leg = 0
    while (x + arm + 1, y) in box:
        arm += 1
    while (x, y + leg + 1) in box:
        leg += 1
    return arm, leg, arm + leg + 1


def beta_set(lam, length):
    lam = list(lam) + [0] * (length - len(lam))
    return {lam[i] + length - 1 - i for i in range(length)}


def from_beta(beta):
    ordered = sorted(beta, reverse=True)
    length = len(ordered)
    parts = [b - (length - 1 - i) for i, b in enumerate(ordered)]
    return tuple(p for p in parts if p > 0)


def core(lam, c):
    """Slide beads up their runners until stuck."""
    beta = beta_set(lam, len(lam) + c)
    moved = True
    while moved:
        moved = False
        for b in sorted(beta):
            if b - c >= 0 and b - c not in beta:
                beta.remove(b)
                beta.add(b - c)
                moved = True
                break
    return from_beta(beta)


def weight(lam, c):
    """Number of rim c-hooks removed on the way to the core."""
    return (sum(lam) - sum(core(lam, c))) // c


def is_core(lam, c):
    return all(arm_leg_hook(lam, cell)[2] % c for cell in cells(lam))


def _ratio(num, den):
    return INF if den == 0 else Fraction(num, den)


def _le(a, b):
    if b is INF:
        return True
    if a is INF:
        return False
    return a <= b


def _lt(a, b):
    if a is INF:
        return False
    if b is INF:
        return True
    return a < b


def stats(lam, x, c):
    """``(h_plus, h_minus, mid, crit_plus, crit_minus)`` by exact fractions."""
    hp = hm = mid = cp = cm = 0
    for cell in cells(lam):
        a, leg, h = arm_leg_hook(lam, cell)
        if h % c:
            continue
        lo, hi = _ratio(a, leg + 1), _ratio(a + 1, leg)
        hp += _le(lo, x) and _lt(x, hi)
        hm += _lt(lo, x) and _le(x, hi)
        mid += _lt(lo, x) and _lt(x, hi)
        cp += lo == x
        cm += hi == x
    return hp, hm, mid, cp, cm


def rectangle_count(lam, c):
    return sum(lam.count(d) // c for d in set(lam))


def boundary_points(lam, top):
    """Lattice points of the boundary from ``(0, top)`` down to the x axis and east."""
    box = cells(lam)
    x, y = 0, top
    pts, steps = [(x, y)], []
    while y > 0:
        if (x, y - 1) in box:
            x += 1
            steps.append("E")
        else:
            y -= 1
            steps.append("S")
        pts.append((x, y))
    return pts, steps


def multigraph_counts(lam, r, s, c, k):
    """Per-vertex ``(E_in, S_in, E_out, S_out)`` on ``v <= k``, with the axis edges added."""
    k1 = k // (r * s)
    X, Y = k1 * r, k1 * s
    pts, steps = boundary_points(lam, Y)
    while pts[-1][0] < X:
        pts.append((pts[-1][0] + 1, 0))
        steps.append("E")
    counts = {}

    def bump(pt, slot):
        vx = (s * pt[0] + r * pt[1], (pt[0] - pt[1]) % c)
        counts.setdefault(vx, [0, 0, 0, 0])[slot] += 1

    bump(pts[0], 1)  # the south edge arriving from above the window
    for j, d in enumerate(steps):
        bump(pts[j], 2 if d == "E" else 3)
        bump(pts[j + 1], 0 if d == "E" else 1)
    bump(pts[-1], 2)  # the east edge leaving along the axis
    return {vx: tuple(v) for vx, v in counts.items()}


def poly_mul(a, b, n):
    out = [0] * (n + 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                out[i + j] += x * y
    return out
