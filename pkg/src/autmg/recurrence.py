"""I(n,k) and J(n,k) straight from their master recurrences.

This is the deliberately naive reference route.  The two recurrences are
evaluated independently of each other so that the normalization
J(n,k) = 2**k (n+k-1)! I(n,k) is a real cross-check and not a tautology.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

_ZERO = Fraction(0)
_ONE = Fraction(1)


@lru_cache(maxsize=None)
def factorial(n: int) -> int:
    return math.factorial(n)


def binom(a: int, b: int) -> int:
    """C(a, b), zero outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


# Write-once memos.  Concurrent duplicate fills write identical values.
_I_MEMO: dict[tuple[int, int], Fraction] = {}
_J_MEMO: dict[tuple[int, int], Fraction] = {}


def _I_step(n: int, k: int) -> Fraction:
    if (n, k) == (1, 0):
        return _ONE
    acc = Fraction(n * n) * _I_get(n, k - 1)
    for i in range(1, n):
        w = i * (n - i)
        for j in range(k + 1):
            acc += w * _I_get(i, j) * _I_get(n - i, k - j)
    return acc / (2 * (n + k - 1))


def _J_step(n: int, k: int) -> Fraction:
    if (n, k) == (1, 0):
        return _ONE
    acc = Fraction(0)
    for i in range(1, n):
        w = i * (n - i)
        for j in range(k + 1):
            c = binom(n + k - 2, i + j - 1)
            if c:
                acc += c * w * _J_get(i, j) * _J_get(n - i, k - j)
    return n * n * _J_get(n, k - 1) + acc / 2


def _I_get(n: int, k: int) -> Fraction:
    if n < 1 or k < 0:
        return _ZERO
    return _I_MEMO[n, k]


def _J_get(n: int, k: int) -> Fraction:
    if n < 1 or k < 0:
        return _ZERO
    return _J_MEMO[n, k]


def fill_order(n_max: int, k_max: int) -> list[tuple[int, int]]:
    """Cells of the rectangle ordered by increasing n+k, then n.

    Every right-hand side of either recurrence only touches cells with a
    strictly smaller n+k, so this order never reads an empty cell.
    """
    cells = [(n, k) for n in range(1, n_max + 1) for k in range(k_max + 1)]
    return sorted(cells, key=lambda c: (c[0] + c[1], c[0]))


def _fill(memo, step, n_max: int, k_max: int) -> None:
    for cell in fill_order(n_max, k_max):
        if cell not in memo:
            memo[cell] = step(*cell)


def compute_I(n: int, k: int) -> Fraction:
    if n < 1 or k < 0:
        return _ZERO
    if (n, k) not in _I_MEMO:
        _fill(_I_MEMO, _I_step, n, k)
    return _I_MEMO[n, k]


def compute_J(n: int, k: int) -> Fraction:
    if n < 1 or k < 0:
        return _ZERO
    if (n, k) not in _J_MEMO:
        _fill(_J_MEMO, _J_step, n, k)
    return _J_MEMO[n, k]


def j_from_i(n: int, k: int, i_value: Fraction) -> Fraction:
    return 2**k * factorial(n + k - 1) * i_value


@dataclass(frozen=True)
class IJTable:
    n_max: int
    k_max: int
    I_entries: tuple[tuple[Fraction, ...], ...]
    J_entries: tuple[tuple[Fraction, ...], ...]

    def I(self, n: int, k: int) -> Fraction:
        return self.I_entries[n - 1][k]

    def J(self, n: int, k: int) -> Fraction:
        return self.J_entries[n - 1][k]

    def cells(self):
        for n in range(1, self.n_max + 1):
            for k in range(self.k_max + 1):
                yield n, k

    def entries(self, which: str) -> tuple[tuple[Fraction, ...], ...]:
        if which == "I":
            return self.I_entries
        if which == "J":
            return self.J_entries
        raise ValueError(f"unknown table {which!r}")


def build_table(n_max: int, k_max: int) -> IJTable:
    if n_max < 1 or k_max < 0:
        raise ValueError("need n_max >= 1 and k_max >= 0")
    I_rows = tuple(tuple(compute_I(n, k) for k in range(k_max + 1)) for n in range(1, n_max + 1))
    J_rows = tuple(tuple(compute_J(n, k) for k in range(k_max + 1)) for n in range(1, n_max + 1))
    return IJTable(n_max, k_max, I_rows, J_rows)
