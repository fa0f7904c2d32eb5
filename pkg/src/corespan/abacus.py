"""Abacus runners, cores, quotients, rimhook surgery and the Glaisher-type map.

Runner ``i`` of the ``c``-abacus collects the boundary letters whose index is
congruent to ``i`` modulo ``c``.  The letter with boundary index ``j`` sits at
runner position ``ceil(j / c)``, so "index ≤ 0" on the boundary matches
"position ≤ 0" on every runner and the runner charges add up to the charge of
the whole word.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .errors import HookNotEqualC, NotACore, NuNotInKc
from .partition import (
    BoundaryWord,
    Partition,
    arm_leg_hook,
    boundary_word,
    charge,
    conjugate,
    partition_from_boundary,
    partitions_of,
    partitions_up_to,
)


def runner_position(j: int, c: int) -> int:
    return -((-j) // c)


def boundary_index(i: int, m: int, c: int) -> int:
    """Inverse of ``j -> (j mod c, runner_position(j))``."""
    return c * m - ((c - i) % c)


@dataclass(frozen=True)
class AbacusWords:
    c: int
    runners: tuple[BoundaryWord, ...]

    def charges(self) -> tuple[int, ...]:
        return tuple(charge(w) for w in self.runners)

    def inversions(self) -> int:
        return sum(w.inversions() for w in self.runners)

    def interleave(self) -> BoundaryWord:
        return interleave(self.runners, self.c)


def abacus_words(lam: Partition, c: int) -> AbacusWords:
    if c < 1:
        raise ValueError("c must be positive")
    word = boundary_word(lam)
    runners = []
    for i in range(c):
        lo = runner_position(word.offset, c) - 1
        hi = runner_position(word.end, c) + 1
        letters = "".join(word[boundary_index(i, m, c)] for m in range(lo, hi + 1))
        runners.append(BoundaryWord(lo, letters))
    return AbacusWords(c, tuple(runners))


def interleave(runners: Sequence[BoundaryWord], c: int) -> BoundaryWord:
    lo = min(boundary_index(i, w.offset, c) for i, w in enumerate(runners)) - c
    hi = max(boundary_index(i, w.end, c) for i, w in enumerate(runners)) + c
    letters = "".join(runners[j % c][runner_position(j, c)] for j in range(lo, hi + 1))
    return BoundaryWord(lo, letters)


def hooks_divisible_count(lam: Partition, c: int) -> int:
    return abacus_words(lam, c).inversions()


def core_charges(lam: Partition, c: int) -> tuple[int, ...]:
    return abacus_words(lam, c).charges()


def core_from_charges(charges: Sequence[int]) -> Partition:
    """The unique core whose runners carry ``charges`` (which must sum to 0)."""
    c = len(charges)
    runners = [BoundaryWord(1 - a, "") for a in charges]
    return partition_from_boundary(interleave(runners, c))


def core(lam: Partition, c: int) -> Partition:
    if c == 1:
        return Partition()
    return core_from_charges(core_charges(lam, c))


def is_core(lam: Partition, c: int) -> bool:
    if not lam:
        return True
    conj = conjugate(lam)
    for y, part in enumerate(lam):
        for x in range(part):
            if (part - x + conj[x] - y - 1) % c == 0:
                return False
    return True


def remove_rimhook(lam: Partition, cell, c: int) -> Partition:
    x, y = cell
    _, leg, h = arm_leg_hook(lam, (x, y))
    if h != c:
        raise HookNotEqualC(f"cell {(x, y)} has hook {h}, not {c}")
    parts = list(lam)
    for j in range(y, y + leg):
        parts[j] = lam[j + 1] - 1
    parts[y + leg] = x
    return Partition(p for p in parts if p > 0)


def core_by_rimhooks(lam: Partition, c: int, order: str = "topmost") -> Partition:
    """Strip ``c``-rimhooks one at a time; kept as an independent oracle for :func:`core`."""
    if order == "topmost":
        key = lambda cell: (cell[1], cell[0])
    elif order == "rightmost":
        key = lambda cell: (cell[0], cell[1])
    else:
        raise ValueError(f"unknown order {order!r}")
    while True:
        cells = [(x, y) for y, part in enumerate(lam) for x in range(part)
                 if arm_leg_hook(lam, (x, y))[2] == c]
        if not cells:
            return lam
        lam = remove_rimhook(lam, max(cells, key=key), c)


def quotient(lam: Partition, c: int) -> tuple[Partition, ...]:
    runners = abacus_words(lam, c).runners
    return tuple(partition_from_boundary(w.shifted(charge(w))) for w in runners)


def from_core_and_quotient(mu: Partition, quot: Sequence[Partition], c: int) -> Partition:
    if len(quot) != c:
        raise ValueError(f"need {c} quotient partitions, got {len(quot)}")
    if not is_core(mu, c):
        raise NotACore(f"{tuple(mu)} has a hook divisible by {c}")
    charges = core_charges(mu, c)
    runners = [boundary_word(q).shifted(-a) for q, a in zip(quot, charges)]
    return partition_from_boundary(interleave(runners, c))


def _weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_class(mu: Partition, c: int, n: int) -> Iterator[Partition]:
    """Partitions of ``n`` with ``c``-core ``mu``, in reverse-lexicographic order."""
    return iter(_class(Partition(mu), c, n))


@lru_cache(maxsize=4096)
def _class(mu: Partition, c: int, n: int) -> tuple[Partition, ...]:
    if not is_core(mu, c):
        raise NotACore(f"{tuple(mu)} has a hook divisible by {c}")
    rest = n - mu.size
    if rest < 0 or rest % c:
        return ()
    found = []
    for sizes in _weak_compositions(rest // c, c):
        for quot in product(*(partitions_of(m) for m in sizes)):
            found.append(from_core_and_quotient(mu, quot, c))
    return tuple(sorted(found, reverse=True))


@lru_cache(maxsize=None)
def cores_up_to(c: int, max_size: int) -> tuple[Partition, ...]:
    """All ``c``-cores of size at most ``max_size``, smallest first."""
    return tuple(lam for lam in partitions_up_to(max_size) if is_core(lam, c))


def _from_multiplicities(mult: dict[int, int]) -> Partition:
    parts = []
    for d in sorted(mult, reverse=True):
        parts.extend([d] * mult[d])
    return Partition._trusted(parts)


def in_kc(lam: Partition, c: int) -> bool:
    """No part repeated ``c`` or more times."""
    return all(m < c for m in lam.multiplicities().values())


def g_c(lam: Partition, c: int) -> tuple[Partition, Partition]:
    mult = Partition(lam).multiplicities()
    xi = _from_multiplicities({d: m // c for d, m in mult.items()})
    nu = _from_multiplicities({d: m % c for d, m in mult.items()})
    return xi, nu


def g_c_inv(xi: Partition, nu: Partition, c: int) -> Partition:
    xi, nu = Partition(xi), Partition(nu)
    if not in_kc(nu, c):
        raise NuNotInKc(f"{tuple(nu)} repeats a part at least {c} times")
    mult = {d: c * m for d, m in xi.multiplicities().items()}
    for d, m in nu.multiplicities().items():
        mult[d] = mult.get(d, 0) + m
    return _from_multiplicities(mult)
