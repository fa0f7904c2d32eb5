"""Hook statistics measured against a slope ``x = r/s``.

Only cells whose hook length is divisible by ``c`` take part.  A cell with arm
``a`` and leg ``l`` is compared with ``x`` through ``t = s*a - r*l``:

* ``-s < t < r``  -- the cell lies strictly inside the slope window (``mid``),
* ``t == r``      -- ``a / (l+1) == x``  (``crit_plus``),
* ``t == -s``     -- ``(a+1) / l == x``  (``crit_minus``).

No floating point is used; ``1/0`` stands for infinity.
"""
from __future__ import annotations

import enum
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd
from typing import Iterable

from . import kernels
from .partition import Partition


@total_ordering
@dataclass(frozen=True)
class Slope:
    """Exact non-negative rational ``r/s`` in lowest terms; ``Slope(1, 0)`` is infinity."""

    r: int
    s: int

    def __post_init__(self):
        r, s = self.r, self.s
        if r < 0 or s < 0 or (r == 0 and s == 0):
            raise ValueError(f"invalid slope {r}/{s}")
        g = gcd(r, s)
        object.__setattr__(self, "r", r // g)
        object.__setattr__(self, "s", s // g)

    @classmethod
    def parse(cls, text) -> "Slope":
        if isinstance(text, Slope):
            return text
        if isinstance(text, int):
            return cls(text, 1)
        if isinstance(text, Fraction):
            return cls(text.numerator, text.denominator)
        text = str(text).strip().lower()
        if text in ("inf", "infinity", "∞", "1/0"):
            return cls(1, 0)
        if "/" in text:
            num, den = text.split("/")
            return cls(int(num), int(den))
        return cls(int(text), 1)

    @property
    def is_zero(self) -> bool:
        return self.r == 0

    @property
    def is_infinite(self) -> bool:
        return self.s == 0

    def __lt__(self, other):
        if not isinstance(other, Slope):
            return NotImplemented
        return self.r * other.s < other.r * self.s

    def __str__(self):
        if self.is_infinite:
            return "inf"
        if self.s == 1:
            return str(self.r)
        return f"{self.r}/{self.s}"

    def mediant(self, other: "Slope") -> "Slope":
        return Slope(self.r + other.r, self.s + other.s)


ZERO = Slope(0, 1)
INFINITY = Slope(1, 0)


class Stat(str, enum.Enum):
    H_PLUS = "h_plus"
    H_MINUS = "h_minus"
    MID = "mid"
    CRIT_PLUS = "crit_plus"
    CRIT_MINUS = "crit_minus"
    LAMBDA_BOX_CSTAR = "lambda_box_cstar"


@dataclass(frozen=True)
class StatReport:
    mid: int
    crit_plus: int
    crit_minus: int
    h_plus: int
    h_minus: int
    lambda_box_cstar: int

    def to_json(self) -> dict:
        return asdict(self)


def _counts(lam, x: Slope, c: int):
    return kernels.cell_counts(tuple(lam), x.r, x.s, c)


def h_plus(lam: Partition, x, c: int) -> int:
    mid_, plus, _ = _counts(lam, Slope.parse(x), c)
    return mid_ + plus


def h_minus(lam: Partition, x, c: int) -> int:
    mid_, _, minus = _counts(lam, Slope.parse(x), c)
    return mid_ + minus


def mid(lam: Partition, r: int, s: int, c: int) -> int:
    return _counts(lam, Slope(r, s), c)[0]


def crit_plus(lam: Partition, r: int, s: int, c: int) -> int:
    return _counts(lam, Slope(r, s), c)[1]


def crit_minus(lam: Partition, r: int, s: int, c: int) -> int:
    return _counts(lam, Slope(r, s), c)[2]


def lambda_box_cstar(lam: Partition, c: int) -> int:
    return sum(m // c for m in Partition(lam).multiplicities().values())


def stat_report(lam: Partition, x, c: int) -> StatReport:
    x = Slope.parse(x)
    mid_, plus, minus = _counts(lam, x, c)
    return StatReport(mid_, plus, minus, mid_ + plus, mid_ + minus, lambda_box_cstar(lam, c))


def statistic(stat, lam: Partition, x, c: int) -> int:
    stat = Stat(stat)
    if stat is Stat.LAMBDA_BOX_CSTAR:
        return lambda_box_cstar(lam, c)
    mid_, plus, minus = _counts(lam, Slope.parse(x), c)
    return {
        Stat.H_PLUS: mid_ + plus,
        Stat.H_MINUS: mid_ + minus,
        Stat.MID: mid_,
        Stat.CRIT_PLUS: plus,
        Stat.CRIT_MINUS: minus,
    }[stat]


def slopes_of_cells(lam: Partition, c: int) -> set[Slope]:
    """``a/(l+1)`` and ``(a+1)/l`` over the cells of ``lam`` with ``c | h``."""
    out = set()
    for a, leg in kernels.divisible_arm_legs(tuple(lam), c):
        out.add(Slope(a, leg + 1))
        out.add(Slope(a + 1, leg))
    return out


def critical_rationals(partitions: Iterable[Partition], c: int) -> list[Slope]:
    found = {ZERO, INFINITY}
    for lam in partitions:
        found |= slopes_of_cells(lam, c)
    return sorted(found)


def interior_points(critical: list[Slope]) -> list[Slope]:
    """One slope strictly inside each gap of a sorted list that starts at 0 and ends at infinity."""
    points = []
    for lo, hi in zip(critical, critical[1:]):
        if hi.is_infinite:
            points.append(Slope(lo.r + lo.s, lo.s))
        else:
            points.append(lo.mediant(hi))
    return points


def distribution(stat, partitions: Iterable[Partition], x=None, c: int = 1) -> list[int]:
    """Coefficients of ``sum t**stat(lam)``, lowest degree first, without trailing zeros."""
    coeffs: list[int] = []
    for lam in partitions:
        value = statistic(stat, lam, x, c)
        if value >= len(coeffs):
            coeffs.extend([0] * (value + 1 - len(coeffs)))
        coeffs[value] += 1
    return coeffs

