"""The slope multigraph of a partition and its boundary tour.

A boundary point ``(x, y)`` is sent to the vertex ``(v, [i])`` with
``v = s*x + r*y`` and ``i = (x - y) mod c``.  A south edge then steps from
``(v, [i])`` to ``(v - r, [i+1])`` and an east edge to ``(v + s, [i+1])``.

Tours are stored on a finite window ``v <= k`` with ``r*s*c | k``.  Above the
window only the two coordinate axes remain, so every vertex there carries a
"generic" word read off the axes.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from types import MappingProxyType
from typing import Mapping, NamedTuple

from . import kernels
from .errors import (
    NoSouthArrival,
    PreconditionViolated,
    SlopeMismatch,
    WindowNotCanonical,
    WindowTooSmall,
)
from .partition import Partition, addable_cells, add_cell, boundary_word


class RscVertex(NamedTuple):
    v: int
    i: int

    def __str__(self):
        return f"({self.v},[{self.i}])"


def check_slope(r: int, s: int, c: int) -> None:
    if r < 1 or s < 1 or c < 1:
        raise PreconditionViolated(f"need r, s, c >= 1, got {(r, s, c)}")
    if gcd(r, s) != 1:
        raise PreconditionViolated(f"r={r} and s={s} are not coprime")


def max_corner(lam: Partition, r: int, s: int) -> int:
    """Largest ``s*x + r*y`` over top-right corners of boxes of ``lam`` (0 if empty)."""
    return max((s * p + r * (y + 1) for y, p in enumerate(lam)), default=0)


def canonical_k(lam: Partition, r: int, s: int, c: int) -> int:
    step = r * s * c
    return max(step, -(-max_corner(lam, r, s) // step) * step)


def lambda_rsk(r: int, s: int, k: int) -> Partition:
    parts = []
    j = 1
    while (k - r * j) // s > 0:
        parts.append((k - r * j) // s)
        j += 1
    return Partition._trusted(parts)


def generic_word(v: int, i: int, r: int, s: int, c: int) -> str:
    """Word at a vertex met only by the coordinate axes (valid for ``v > 0``)."""
    word = ""
    if v % r == 0 and (-(v // r)) % c == i:
        word += "S"
    if v % s == 0 and (v // s) % c == i:
        word += "E"
    return word


def vertex_of(x: int, y: int, r: int, s: int, c: int) -> RscVertex:
    return RscVertex(s * x + r * y, (x - y) % c)


@dataclass(frozen=True)
class RscTour:
    r: int
    s: int
    c: int
    k: int
    arrival: Mapping[RscVertex, str]
    departure: Mapping[RscVertex, str]
    walk: tuple[RscVertex, ...]
    letters: str

    @property
    def k1(self) -> int:
        return self.k // (self.r * self.s)

    @property
    def root(self) -> RscVertex:
        return RscVertex(self.k, 0)

    def arrival_word(self, vertex) -> str:
        vertex = RscVertex(*vertex)
        if vertex.v > self.k:
            return generic_word(vertex.v, vertex.i, self.r, self.s, self.c)
        return self.arrival.get(vertex, "")

    def departure_word(self, vertex) -> str:
        vertex = RscVertex(*vertex)
        if vertex.v > self.k:
            return generic_word(vertex.v, vertex.i, self.r, self.s, self.c)
        return self.departure.get(vertex, "")

    def vertices(self) -> list[RscVertex]:
        return sorted(self.arrival)

    def multigraph(self) -> "RscMultigraph":
        counts = {}
        for vertex in self.arrival:
            a, d = self.arrival[vertex], self.departure.get(vertex, "")
            counts[vertex] = (a.count("E"), a.count("S"), d.count("E"), d.count("S"))
        return RscMultigraph(self.r, self.s, self.c, self.k, MappingProxyType(counts))


def build_tour(lam: Partition, r: int, s: int, c: int, k: int | None = None) -> RscTour:
    check_slope(r, s, c)
    lam = Partition(lam)
    if k is None:
        k = canonical_k(lam, r, s, c)
    elif k <= 0 or k % (r * s * c):
        raise WindowNotCanonical(f"k={k} is not a positive multiple of {r * s * c}")
    if max_corner(lam, r, s) > k:
        raise WindowTooSmall(f"{tuple(lam)} does not fit below s*x + r*y = {k}")
    k1 = k // (r * s)
    X, Y = k1 * r, k1 * s

    # boundary points from (0, Y) to (X, 0), read off the boundary word
    word = boundary_word(lam)
    points = [(0, Y)]
    letters = []
    for index in range(-Y + 1, X + 1):
        d = word[index]
        x, y = points[-1]
        points.append((x + 1, y) if d == "E" else (x, y - 1))
        letters.append(d)

    walk = tuple(vertex_of(x, y, r, s, c) for x, y in points)
    arrival: dict[RscVertex, str] = {walk[0]: "S"}
    departure: dict[RscVertex, str] = {}
    for j, d in enumerate(letters):
        departure[walk[j]] = departure.get(walk[j], "") + d
        arrival[walk[j + 1]] = arrival.get(walk[j + 1], "") + d
    departure[walk[-1]] = departure.get(walk[-1], "") + "E"
    return RscTour(r, s, c, k, MappingProxyType(arrival), MappingProxyType(departure),
                   walk, "".join(letters))


def _inversions(word: str) -> int:
    count = east = 0
    for ch in word:
        if ch == "E":
            east += 1
        else:
            count += east
    return count


def crit_from_tour(t: RscTour) -> tuple[int, int]:
    plus = sum(_inversions(w) for w in t.arrival.values())
    minus = sum(_inversions(w) for w in t.departure.values())
    return plus, minus


@dataclass(frozen=True)
class RscMultigraph:
    """Per-vertex ``(E_in, S_in, E_out, S_out)`` on the window; generic above it."""

    r: int
    s: int
    c: int
    k: int
    counts: Mapping[RscVertex, tuple[int, int, int, int]]

    def degrees(self, vertex) -> tuple[int, int, int, int]:
        vertex = RscVertex(*vertex)
        if vertex.v > self.k:
            w = generic_word(vertex.v, vertex.i, self.r, self.s, self.c)
            e, s = w.count("E"), w.count("S")
            return e, s, e, s
        return self.counts.get(vertex, (0, 0, 0, 0))

    def e_in(self, vertex) -> int:
        return self.degrees(vertex)[0]

    def s_in(self, vertex) -> int:
        return self.degrees(vertex)[1]

    def e_out(self, vertex) -> int:
        return self.degrees(vertex)[2]

    def s_out(self, vertex) -> int:
        return self.degrees(vertex)[3]

    def extended(self, k: int) -> "RscMultigraph":
        """The same multigraph stored on a larger window."""
        if k < self.k or k % (self.r * self.s * self.c):
            raise WindowNotCanonical(f"cannot extend window {self.k} to {k}")
        counts = dict(self.counts)
        for v in range(self.k + 1, k + 1):
            for i in range(self.c):
                deg = self.degrees((v, i))
                if any(deg):
                    counts[RscVertex(v, i)] = deg
        return RscMultigraph(self.r, self.s, self.c, k, MappingProxyType(counts))

    def key(self) -> tuple:
        """Canonical serialisation at this window (zero rows dropped)."""
        return tuple(sorted((vx, deg) for vx, deg in self.counts.items() if any(deg)))

    def to_json(self) -> dict:
        return {
            "r": self.r, "s": self.s, "c": self.c, "k": self.k,
            "vertices": [
                {"v": vx.v, "i": vx.i, "E_in": d[0], "S_in": d[1], "E_out": d[2], "S_out": d[3]}
                for vx, d in sorted(self.counts.items()) if any(d)
            ],
        }


def multigraph(lam: Partition, r: int, s: int, c: int, k: int | None = None) -> RscMultigraph:
    return build_tour(lam, r, s, c, k).multigraph()


def multigraph_key(lam: Partition, r: int, s: int, c: int, k: int) -> tuple:
    """In-degree table on the window ``k``; equal keys mean equal multigraphs."""
    return kernels.arrival_counts(tuple(lam), r, s, c, k)


def multigraph_equal(a: RscMultigraph, b: RscMultigraph) -> bool:
    if (a.r, a.s, a.c) != (b.r, b.s, b.c):
        raise SlopeMismatch(f"{(a.r, a.s, a.c)} vs {(b.r, b.s, b.c)}")
    k = max(a.k, b.k)
    return a.extended(k).key() == b.extended(k).key()


def precedes(p, q, r: int, s: int, c: int) -> bool:
    """Strict order on lattice points: lower level first, ties broken inside one residue class."""
    vp, vq = s * p[0] + r * p[1], s * q[0] + r * q[1]
    if vp != vq:
        return vp < vq
    dp, dq = p[0] - p[1], q[0] - q[1]
    return (dp - dq) % c == 0 and dp < dq


def successors(lam: Partition, r: int, s: int, c: int) -> list[Partition]:
    check_slope(r, s, c)
    lam = Partition(lam)
    corners = addable_cells(lam)
    minimal = [p for p in corners if not any(precedes(q, p, r, s, c) for q in corners)]
    return [add_cell(lam, p) for p in minimal]


def change_vertices(m: RscMultigraph) -> list[RscVertex]:
    """Vertices of smallest level that receive a south edge."""
    levels = [vx.v for vx, d in m.counts.items() if d[1] > 0]
    if not levels:
        raise NoSouthArrival("no vertex receives a south edge")
    low = min(levels)
    return sorted(vx for vx, d in m.counts.items() if vx.v == low and d[1] > 0)


def multigraph_successor(m: RscMultigraph, residue: int | None = None):
    """Add one box at a minimal south arrival; returns ``(new multigraph, change vertex)``."""
    choices = change_vertices(m)
    if residue is None:
        change = choices[0]
    else:
        matching = [vx for vx in choices if vx.i == residue % m.c]
        if not matching:
            raise NoSouthArrival(f"no minimal south arrival in residue {residue}")
        change = matching[0]
    r, s, c = m.r, m.s, m.c
    while change.v + r + s > m.k:
        m = m.extended(m.k + r * s * c)
    level, i = change
    counts = {vx: list(m.degrees(vx)) for vx in m.counts}

    def bump(v, j, slot, delta):
        vx = RscVertex(v, j % c)
        counts.setdefault(vx, list(m.degrees(vx)))[slot] += delta

    # delete S (l+r,[i-1]) -> (l,[i]) and E (l,[i]) -> (l+s,[i+1])
    bump(level + r, i - 1, 3, -1)
    bump(level, i, 1, -1)
    bump(level, i, 2, -1)
    bump(level + s, i + 1, 0, -1)
    # add E (l+r,[i-1]) -> (l+r+s,[i]) and S (l+r+s,[i]) -> (l+s,[i+1])
    bump(level + r, i - 1, 2, 1)
    bump(level + r + s, i, 0, 1)
    bump(level + r + s, i, 3, 1)
    bump(level + s, i + 1, 1, 1)
    frozen = {vx: tuple(d) for vx, d in counts.items() if any(d)}
    return RscMultigraph(r, s, c, m.k, MappingProxyType(frozen)), change


def delta_mid(m: RscMultigraph, change, include_new_box: bool = True) -> int:
    """Change in ``mid`` when a successor adds a box at ``change``.

    The edge sum only sees pairs that use one of the two new edges.  The pair
    made of both new edges is the new box itself, with hook 1, which counts
    exactly when ``c == 1``; ``include_new_box=False`` returns the bare sum.
    """
    level, i = change
    total = sum(m.e_out((w, i)) - m.e_in((w, i))
                for w in range(level + 1, level + m.s + m.r))
    if include_new_box and m.c == 1:
        total += 1
    return total


def delta_crit_total(m: RscMultigraph, change) -> int:
    level, i = change
    top = (level + m.r + m.s, i)
    return m.s_in((level, i)) - 1 + m.s_in(top) - m.s_out(top)


def crit_total_formula(t: RscTour) -> int:
    if t.k % (t.r * t.s * t.c):
        raise WindowNotCanonical(f"k={t.k} is not a multiple of {t.r * t.s * t.c}")
    m = t.multigraph()
    total = sum(d[0] * d[1] for d in m.counts.values())
    return total - (t.k1 * (t.s + t.r)) // lcm(t.c, t.s + t.r)


def cylinder_representative(vertex, r: int, s: int, c: int, start: int) -> tuple[int, int]:
    """The lattice point of ``vertex`` with ``start <= x - y < start + lcm(c, r+s)``."""
    v, i = vertex
    # solutions of s*x + r*y = v are (x0 + r*t, y0 - s*t); x - y moves by r + s
    x0 = (v * pow(s, -1, r)) % r if r > 1 else 0
    y0 = (v - s * x0) // r
    span = lcm(c, r + s)
    diff0 = x0 - y0
    found = []
    t = (start - diff0) // (r + s) - span
    while diff0 + (r + s) * t < start + span:
        d = diff0 + (r + s) * t
        if d >= start and (d - i) % c == 0:
            found.append((x0 + r * t, y0 - s * t))
        t += 1
    if len(found) != 1:
        raise ValueError(f"no unique representative for {tuple(vertex)}")
    return found[0]


def to_dot(m: RscMultigraph) -> str:
    lines = [f'digraph "M_{m.r},{m.s},{m.c}" {{', "  rankdir=LR;"]
    for vx, _ in m.key():
        lines.append(f'  "{vx.v},{vx.i}" [label="({vx.v},[{vx.i}])"];')
    for vx, (_, _, e_out, s_out) in m.key():
        j = (vx.i + 1) % m.c
        for _ in range(e_out):
            target = vx.v + m.s
            if target <= m.k:
                lines.append(f'  "{vx.v},{vx.i}" -> "{target},{j}" [label=E, color=blue];')
        for _ in range(s_out):
            target = vx.v - m.r
            lines.append(f'  "{vx.v},{vx.i}" -> "{target},{j}" [label=S, color=red];')
    lines.append("}")
    return "\n".join(lines)
