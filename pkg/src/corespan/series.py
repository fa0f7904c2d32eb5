"""Truncated power series in ``q`` and ``t`` with exact integer coefficients."""
from __future__ import annotations

from math import comb
from typing import Iterable

from .abacus import cores_up_to, enumerate_class, is_core
from .errors import DomainMismatch, NotACore, ZeroQExponent
from .partition import Partition, partitions_up_to
from .statistics import Slope, statistic


class BivariateSeries:
    """Coefficients ``[a][b]`` of ``q**a * t**b`` for ``a <= nq`` and ``b <= nt``."""

    __slots__ = ("nq", "nt", "_coeffs")

    def __init__(self, nq: int, nt: int, coeffs=None):
        self.nq, self.nt = nq, nt
        table = [[0] * (nt + 1) for _ in range(nq + 1)]
        if coeffs is not None:
            for a, row in enumerate(coeffs):
                if a > nq:
                    break
                for b, value in enumerate(row):
                    if b <= nt:
                        table[a][b] = int(value)
        self._coeffs = tuple(tuple(row) for row in table)

    @classmethod
    def one(cls, nq: int, nt: int) -> "BivariateSeries":
        return cls.monomial(0, 0, nq, nt)

    @classmethod
    def monomial(cls, a: int, b: int, nq: int, nt: int, coeff: int = 1) -> "BivariateSeries":
        table = [[0] * (nt + 1) for _ in range(nq + 1)]
        if a <= nq and b <= nt:
            table[a][b] = coeff
        return cls(nq, nt, table)

    def __getitem__(self, key) -> int:
        a, b = key
        if 0 <= a <= self.nq and 0 <= b <= self.nt:
            return self._coeffs[a][b]
        return 0

    def t_slice(self, a: int) -> list[int]:
        """Coefficients of ``q**a`` as a polynomial in ``t``, trailing zeros dropped."""
        row = list(self._coeffs[a])
        while row and row[-1] == 0:
            row.pop()
        return row

    def at_t_one(self) -> list[int]:
        return [sum(row) for row in self._coeffs]

    def _check(self, other):
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        if (self.nq, self.nt) != (other.nq, other.nt):
            raise ValueError("series truncated at different orders")
        return None

    def __add__(self, other):
        bad = self._check(other)
        if bad is NotImplemented:
            return bad
        return BivariateSeries(self.nq, self.nt, [
            [x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self._coeffs, other._coeffs)])

    def __mul__(self, other):
        bad = self._check(other)
        if bad is NotImplemented:
            return bad
        nq, nt = self.nq, self.nt
        out = [[0] * (nt + 1) for _ in range(nq + 1)]
        terms = [(a, b, v) for a, row in enumerate(other._coeffs) for b, v in enumerate(row) if v]
        for a1, row in enumerate(self._coeffs):
            for b1, v1 in enumerate(row):
                if not v1:
                    continue
                for a2, b2, v2 in terms:
                    a, b = a1 + a2, b1 + b2
                    if a <= nq and b <= nt:
                        out[a][b] += v1 * v2
        return BivariateSeries(nq, nt, out)

    def __eq__(self, other):
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return (self.nq, self.nt, self._coeffs) == (other.nq, other.nt, other._coeffs)

    def __hash__(self):
        return hash((self.nq, self.nt, self._coeffs))

    def __repr__(self):
        return f"BivariateSeries(nq={self.nq}, nt={self.nt}, terms={len(self.terms())})"

    def terms(self) -> list[tuple[int, int, int]]:
        return [(a, b, v) for a, row in enumerate(self._coeffs) for b, v in enumerate(row) if v]

    def first_difference(self, other: "BivariateSeries"):
        """Lowest ``(a, b, mine, theirs)`` where the coefficients differ, or ``None``."""
        for a in range(self.nq + 1):
            for b in range(self.nt + 1):
                if self[a, b] != other[a, b]:
                    return a, b, self[a, b], other[a, b]
        return None

    def to_json(self) -> dict:
        return {"Nq": self.nq, "Nt": self.nt,
                "coeffs": [[a, b, str(v)] for a, b, v in self.terms()]}

    @classmethod
    def from_json(cls, data: dict) -> "BivariateSeries":
        table = [[0] * (data["Nt"] + 1) for _ in range(data["Nq"] + 1)]
        for a, b, v in data["coeffs"]:
            table[a][b] = int(v)
        return cls(data["Nq"], data["Nt"], table)


def product(factors: Iterable[BivariateSeries], nq: int, nt: int) -> BivariateSeries:
    out = BivariateSeries.one(nq, nt)
    for f in factors:
        out = out * f
    return out


def geometric_inverse(q_exp: int, t_exp: int, power: int, nq: int, nt: int) -> BivariateSeries:
    """``(1 - q**q_exp * t**t_exp) ** -power``, truncated."""
    if q_exp <= 0:
        raise ZeroQExponent("the q exponent must be positive for the series to make sense")
    if t_exp < 0 or power < 0:
        raise ValueError("t exponent and power must be non-negative")
    table = [[0] * (nt + 1) for _ in range(nq + 1)]
    m = 0
    while m * q_exp <= nq and m * t_exp <= nt:
        table[m * q_exp][m * t_exp] += comb(m + power - 1, m) if power else int(m == 0)
        m += 1
    return BivariateSeries(nq, nt, table)


def _check_core(mu: Partition, c: int) -> Partition:
    mu = Partition(mu)
    if not is_core(mu, c):
        raise NotACore(f"{tuple(mu)} is not a {c}-core")
    return mu


def class_series(mu: Partition, c: int, nq: int = 20) -> BivariateSeries:
    mu = _check_core(mu, c)
    factors = [geometric_inverse(m * c, 0, c, nq, 0) for m in range(1, nq // c + 1)]
    return BivariateSeries.monomial(mu.size, 0, nq, 0) * product(factors, nq, 0)


def rhs_series(mu: Partition, c: int, nq: int = 20, nt: int = 20) -> BivariateSeries:
    mu = _check_core(mu, c)
    factors = []
    for i in range(1, nq // c + 1):
        if c > 1:
            factors.append(geometric_inverse(i * c, 0, c - 1, nq, nt))
        factors.append(geometric_inverse(i * c, 1, 1, nq, nt))
    return BivariateSeries.monomial(mu.size, 0, nq, nt) * product(factors, nq, nt)


def bfn_series(c: int, nq: int = 20, nt: int = 20) -> BivariateSeries:
    factors = [geometric_inverse(i, 0, 1, nq, nt) for i in range(1, nq + 1) if i % c]
    factors += [geometric_inverse(i * c, 1, 1, nq, nt) for i in range(1, nq // c + 1)]
    return product(factors, nq, nt)


def series_from_statistic(partitions: Iterable[Partition], stat, x, c: int,
                          nq: int, nt: int) -> BivariateSeries:
    table = [[0] * (nt + 1) for _ in range(nq + 1)]
    for lam in partitions:
        value = statistic(stat, lam, x, c)
        if lam.size <= nq and value <= nt:
            table[lam.size][value] += 1
    return BivariateSeries(nq, nt, table)


def lhs_series(mu: Partition, c: int, x, sign: str, nq: int = 20, nt: int = 20) -> BivariateSeries:
    mu = _check_core(mu, c)
    x = Slope.parse(x)
    if sign == "+":
        if x.is_infinite:
            raise DomainMismatch("h_plus needs a finite slope")
        stat = "h_plus"
    elif sign == "-":
        if x.is_zero:
            raise DomainMismatch("h_minus needs a positive slope")
        stat = "h_minus"
    else:
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    members = (lam for n in range(mu.size, nq + 1) for lam in enumerate_class(mu, c, n))
    return series_from_statistic(members, stat, x, c, nq, nt)


def box_cstar_series(mu: Partition, c: int, nq: int = 20, nt: int = 20) -> BivariateSeries:
    """Sum of ``q**|lam| * t**lambda_box_cstar(lam)`` over the class of ``mu``."""
    mu = _check_core(mu, c)
    members = (lam for n in range(mu.size, nq + 1) for lam in enumerate_class(mu, c, n))
    return series_from_statistic(members, "lambda_box_cstar", None, c, nq, nt)


def crit_plus_series(r: int, s: int, c: int, nq: int = 18, nt: int = 18) -> BivariateSeries:
    """Sum of ``q**|lam| * t**crit_plus(lam)`` over every partition."""
    return series_from_statistic(partitions_up_to(nq), "crit_plus", Slope(r, s), c, nq, nt)


def cores_series(c: int, nq: int = 20) -> BivariateSeries:
    table = [[0] for _ in range(nq + 1)]
    for mu in cores_up_to(c, nq):
        table[mu.size][0] += 1
    return BivariateSeries(nq, 0, table)
