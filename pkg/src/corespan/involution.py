"""First-arrival trees, switch classification and the crit-exchanging involution.

The involution keeps the multigraph of a partition and only reorders the
arrival words of its tour: a switch has its whole word reversed, any other
vertex keeps its first letter and reverses the rest.  The partition is then
rebuilt by walking the boundary backwards from the x axis.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import lcm
from types import MappingProxyType
from typing import Mapping

from . import kernels
from .errors import NotRealizable, NotSpanning, VertexAbsent, WindowNotCanonical
from .multigraph import (
    RscTour,
    RscVertex,
    build_tour,
    canonical_k,
    check_slope,
    generic_word,
)
from .partition import Partition


class VertexClass(str, enum.Enum):
    SWITCH = "switch"
    EASTERN = "eastern"
    SOUTHERN = "southern"


@dataclass(frozen=True)
class ArrivalFamily:
    """Arrival words on the window ``v <= k``; generic words are implied above it."""

    r: int
    s: int
    c: int
    k: int
    words: Mapping[RscVertex, str]

    @property
    def root(self) -> RscVertex:
        return RscVertex(self.k, 0)

    def word(self, vertex) -> str:
        vertex = RscVertex(*vertex)
        if vertex.v > self.k:
            return generic_word(vertex.v, vertex.i, self.r, self.s, self.c)
        return self.words.get(vertex, "")

    def vertices(self) -> list[RscVertex]:
        return sorted(vx for vx, w in self.words.items() if w)

    @classmethod
    def from_tour(cls, t: RscTour) -> "ArrivalFamily":
        return cls(t.r, t.s, t.c, t.k, t.arrival)

    @classmethod
    def from_table(cls, r, s, c, words, generic_above: int | None = None, k: int | None = None):
        """Explicit words up to level ``generic_above``, generic words beyond it."""
        check_slope(r, s, c)
        table = {RscVertex(*vx): w for vx, w in words.items()}
        if generic_above is None:
            generic_above = max((vx.v for vx in table), default=0)
        step = r * s * c
        if k is None:
            k = max(step, -(-generic_above // step) * step)
        elif k % step or k < generic_above:
            raise WindowNotCanonical(f"k={k} cannot hold words up to level {generic_above}")
        for v in range(generic_above + 1, k + 1):
            for i in range(c):
                w = generic_word(v, i, r, s, c)
                if w:
                    table[RscVertex(v, i)] = w
        return cls(r, s, c, k, MappingProxyType({vx: w for vx, w in table.items() if w}))


@dataclass(frozen=True)
class FirstArrivalTree:
    root: RscVertex
    parent: Mapping[RscVertex, tuple[RscVertex, str]]
    depth: Mapping[RscVertex, int]

    @property
    def nodes(self) -> list[RscVertex]:
        return sorted(self.depth)

    def edges(self) -> list[tuple[RscVertex, RscVertex, str]]:
        return sorted((p, vx, d) for vx, (p, d) in self.parent.items())


def _family(source) -> ArrivalFamily:
    if isinstance(source, ArrivalFamily):
        return source
    if isinstance(source, RscTour):
        return ArrivalFamily.from_tour(source)
    raise TypeError(f"expected a tour or an arrival family, got {type(source).__name__}")


def first_arrival_tree(source) -> FirstArrivalTree:
    f = _family(source)
    root = f.root
    present = {vx for vx, w in f.words.items() if w and vx.v <= f.k}
    if f.word(root)[:1] != "S":
        raise NotSpanning("the root must first be reached by a south edge")
    parent = {}
    for vx in present:
        if vx == root:
            continue
        first = f.words[vx][0]
        pv = vx.v - f.s if first == "E" else vx.v + f.r
        p = RscVertex(pv, (vx.i - 1) % f.c)
        if p not in present:
            raise NotSpanning(f"first arrival at {vx} comes from {p}, outside the window")
        parent[vx] = (p, first)

    depth = {root: 0}
    for vx in present:
        chain = []
        cur = vx
        while cur not in depth:
            chain.append(cur)
            if len(chain) > len(present):
                raise NotSpanning(f"first arrivals through {vx} form a cycle")
            cur = parent[cur][0]
        d = depth[cur]
        for node in reversed(chain):
            d += 1
            depth[node] = d
    return FirstArrivalTree(root, MappingProxyType(parent), MappingProxyType(depth))


def tree_distance(tree: FirstArrivalTree, vertex) -> int:
    vertex = RscVertex(*vertex)
    if vertex not in tree.depth:
        raise VertexAbsent(f"{vertex} is not in the tree")
    return tree.depth[vertex]


def classify(source, tree: FirstArrivalTree | None = None) -> dict[RscVertex, VertexClass]:
    f = _family(source)
    if tree is None:
        tree = first_arrival_tree(f)
    depth = tree.depth
    out = {}
    for vx in depth:
        word = f.words[vx]
        # both candidate tails must actually send an edge here; an unmixed word
        # is left unchanged by either rule, so this only affects the labels
        south = RscVertex(vx.v + f.r, (vx.i - 1) % f.c)
        east = RscVertex(vx.v - f.s, (vx.i - 1) % f.c)
        if ("S" in word and "E" in word and vx != tree.root
                and south in depth and east in depth and depth[south] == depth[east]):
            out[vx] = VertexClass.SWITCH
        elif word[0] == "E":
            out[vx] = VertexClass.EASTERN
        else:
            out[vx] = VertexClass.SOUTHERN
    return out


def involuted_family(source) -> ArrivalFamily:
    """Reorder every arrival word as the involution prescribes."""
    f = _family(source)
    classes = classify(f)
    words = {}
    for vx, w in f.words.items():
        if not w:
            continue
        if classes[vx] is VertexClass.SWITCH:
            words[vx] = w[::-1]
        else:
            words[vx] = w[0] + w[:0:-1]
    return ArrivalFamily(f.r, f.s, f.c, f.k, MappingProxyType(words))


def reconstruct(f: ArrivalFamily) -> Partition:
    try:
        first_arrival_tree(f)
    except NotSpanning as exc:
        raise NotRealizable(str(exc)) from exc
    words = {vx.v * f.c + vx.i: w for vx, w in f.words.items() if w}
    try:
        parts = kernels.walk_back(words, f.r, f.s, f.c, f.k)
    except kernels.KernelError as exc:
        raise NotRealizable(str(exc)) from exc
    return Partition._trusted(parts)


def involute(lam: Partition, r: int, s: int, c: int, k: int | None = None) -> Partition:
    check_slope(r, s, c)
    lam = Partition(lam)
    if k is None:
        k = canonical_k(lam, r, s, c)
    return Partition._trusted(kernels.involute_parts(tuple(lam), r, s, c, k))


def involute_reference(lam: Partition, r: int, s: int, c: int, k: int | None = None) -> Partition:
    """Same map as :func:`involute`, composed from the object-level pieces."""
    return reconstruct(involuted_family(build_tour(lam, r, s, c, k)))


def walk_distances(t: RscTour, tree: FirstArrivalTree | None = None) -> list[int]:
    """Tree distance of every vertex along the tour's walk through the window."""
    if tree is None:
        tree = first_arrival_tree(t)
    return [tree.depth[vx] for vx in t.walk]


def expected_step(t: RscTour, j: int, tree: FirstArrivalTree, classes) -> int:
    """Predicted ``d_j - d_{j-1}`` along the walk, from the class of the vertex reached."""
    target = t.walk[j]
    span = lcm(t.c, t.r + t.s)
    if classes[target] is VertexClass.SWITCH or tree.parent.get(target) == (t.walk[j - 1], t.letters[j - 1]):
        return 1
    if classes[target] is VertexClass.EASTERN:
        return 1 + span
    return 1 - span


def distance_steps_ok(t: RscTour, tree: FirstArrivalTree | None = None) -> bool:
    if tree is None:
        tree = first_arrival_tree(t)
    classes = classify(t, tree)
    dist = walk_distances(t, tree)
    return all(dist[j] - dist[j - 1] == expected_step(t, j, tree, classes)
               for j in range(1, len(dist)))
