"""Partitions, Young-diagram cells, boundary words and charge.

Cells are addressed by the bottom-left corner ``(x, y)`` of the unit box,
with row 0 at the bottom.  The boundary of a diagram is a bi-infinite lattice
path made of south (``S``) and east (``E``) unit steps; the edge arriving at
the lattice point ``(x, y)`` carries index ``x - y``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    CellOutsideDiagram,
    NonPositivePart,
    NonzeroCharge,
    NotWeaklyDecreasing,
)

SOUTH = "S"
EAST = "E"


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p <= 0:
                raise NonPositivePart(f"part {p} at position {i} is not positive")
            if i and parts[i - 1] < p:
                raise NotWeaklyDecreasing(f"{parts[i - 1]} < {p} at position {i}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts):
        # skips validation; callers guarantee the invariant
        return tuple.__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self):
        return f"Partition{tuple(self)!r}"

    def has_cell(self, cell) -> bool:
        x, y = cell
        return 0 <= y < len(self) and 0 <= x < self[y]

    def cells(self) -> Iterator["Cell"]:
        for y, part in enumerate(self):
            for x in range(part):
                yield Cell(x, y)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def multiplicities(self) -> dict[int, int]:
        m: dict[int, int] = {}
        for p in self:
            m[p] = m.get(p, 0) + 1
        return m

    def contains(self, other: "Partition") -> bool:
        """Diagram containment ``other ⊆ self``."""
        if len(other) > len(self):
            return False
        return all(a <= b for a, b in zip(other, self))

    def to_json(self) -> list[int]:
        return list(self)


class Cell(NamedTuple):
    x: int
    y: int


def validate(parts: Iterable[int]) -> Partition:
    return Partition(parts)


def parse_partition(text: str) -> Partition:
    """Parse ``"4,2,1"`` (empty string or ``"()"`` for the empty partition)."""
    text = text.strip().strip("()[]")
    if not text:
        return Partition()
    return Partition(int(t) for t in text.split(",") if t.strip())


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return Partition()
    cols = []
    for x in range(lam[0]):
        cols.append(sum(1 for p in lam if p > x))
    return Partition._trusted(cols)


def arm_leg_hook(lam: Partition, cell) -> tuple[int, int, int]:
    x, y = cell
    lam = Partition(lam)
    if not lam.has_cell((x, y)):
        raise CellOutsideDiagram(f"cell {(x, y)} is not in {tuple(lam)}")
    arm = lam[y] - x - 1
    leg = 0
    for p in lam[y + 1:]:
        if p <= x:
            break
        leg += 1
    return arm, leg, arm + leg + 1


def hooks(lam: Partition) -> dict[Cell, int]:
    conj = conjugate(lam)
    return {Cell(x, y): (lam[y] - x - 1) + (conj[x] - y - 1) + 1
            for y, part in enumerate(lam) for x in range(part)}


@dataclass(frozen=True)
class BoundaryWord:
    """Bi-infinite S/E word: all ``S`` before ``offset``, all ``E`` after the window.

    The window is trimmed on construction so equal words compare equal.  A word
    with no stored letters keeps ``offset`` as the index of its first ``E``.
    """

    offset: int
    letters: str

    def __post_init__(self):
        letters = self.letters
        if isinstance(letters, (list, tuple)):
            letters = "".join(letters)
        if set(letters) - {SOUTH, EAST}:
            raise ValueError(f"letters must be S or E, got {letters!r}")
        start = len(letters) - len(letters.lstrip(SOUTH))
        letters = letters[start:].rstrip(EAST)
        object.__setattr__(self, "offset", self.offset + start)
        object.__setattr__(self, "letters", letters)

    def __getitem__(self, index: int) -> str:
        j = index - self.offset
        if j < 0:
            return SOUTH
        if j >= len(self.letters):
            return EAST
        return self.letters[j]

    @property
    def end(self) -> int:
        """One past the last stored index."""
        return self.offset + len(self.letters)

    def shifted(self, steps: int) -> "BoundaryWord":
        """Move every letter ``steps`` places to the right."""
        return BoundaryWord(self.offset + steps, self.letters)

    def inversions(self) -> int:
        """Pairs ``E`` before ``S``; only the stored window can contribute."""
        count = east = 0
        for ch in self.letters:
            if ch == EAST:
                east += 1
            else:
                count += east
        return count

    def render(self, lo: int, hi: int, mark: int | None = None) -> str:
        out = []
        for i in range(lo, hi + 1):
            out.append(self[i])
            if mark is not None and i == mark:
                out.append("|")
        return "".join(out)

    def __str__(self):
        lo, hi = min(self.offset, 0) - 3, max(self.end, 1) + 2
        return "…" + self.render(lo, hi, mark=0) + "…"


def charge(word: BoundaryWord, k: int = 0) -> int:
    """``e_k - s_k - k``: east letters at index ≤ k minus south letters after k."""
    east = sum(1 for i in range(word.offset, k + 1) if word[i] == EAST)
    south = sum(1 for i in range(k + 1, word.end) if word[i] == SOUTH)
    return east - south - k


def boundary_word(lam: Partition) -> BoundaryWord:
    # walk from (0, l) down to (lam[0], 0); the S edge into (0, l) has index -l
    length = len(lam)
    letters = [SOUTH]
    for y in range(length - 1, -1, -1):
        above = lam[y + 1] if y + 1 < length else 0
        letters.append(EAST * (lam[y] - above))
        letters.append(SOUTH)
    return BoundaryWord(-length, "".join(letters))


def partition_from_boundary(word: BoundaryWord) -> Partition:
    ch = charge(word)
    if ch != 0:
        raise NonzeroCharge(f"word has charge {ch}")
    # start at the point on the y axis just before the window and walk it
    x = 0
    rows = []
    for ch in word.letters:
        if ch == EAST:
            x += 1
        else:
            rows.append(x)
    return Partition._trusted(p for p in reversed(rows) if p > 0)


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order (cached)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return tuple(Partition._trusted(p) for p in _partitions(n, n))


def enumerate_partitions(n: int) -> Iterator[Partition]:
    return iter(partitions_of(n))


def partitions_up_to(n: int) -> Iterator[Partition]:
    for m in range(n + 1):
        yield from partitions_of(m)


def addable_cells(lam: Partition) -> list[Cell]:
    cells = []
    for y in range(len(lam) + 1):
        x = lam[y] if y < len(lam) else 0
        if y == 0 or lam[y - 1] > x:
            cells.append(Cell(x, y))
    return cells


def add_cell(lam: Partition, cell) -> Partition:
    x, y = cell
    parts = list(lam)
    if y == len(parts):
        parts.append(1)
    else:
        parts[y] += 1
    return Partition(parts)
