"""Fixed-n generating functions: the P_n / C_n polynomials, the rational
functions Z_n(t) = sum_k J(n,k) t**k, the series R_n(x) = sum_k I(n,k) x**k
and the two-variable generating function for all R_n at once.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .exactnum import (
    BivariateSeries,
    ExactArithmeticError,
    ExponentialSumFormula,
    Polynomial,
    Series1,
    SimplePoleRatFun,
    bivariate_log,
    partial_fractions,
    series_exp,
)
from .recurrence import binom, factorial


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts or any(p < 1 for p in self.parts):
            raise ValueError(f"not a composition: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def m(self) -> int:
        return len(self.parts)

    @property
    def square_sum(self) -> int:
        return sum(p * p for p in self.parts)

    def weight(self) -> Fraction:
        """-(-1)**m / (m * n_1! ... n_m!)."""
        den = self.m
        for p in self.parts:
            den *= factorial(p)
        return Fraction(-((-1) ** self.m), den)


def compositions(n: int) -> Iterator[Composition]:
    """All 2**(n-1) compositions of n, in lexicographic order of parts."""

    def rec(rest: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(1, rest + 1):
            for tail in rec(rest - first):
                yield (first,) + tail

    for parts in rec(n):
        yield Composition(parts)


def square_sum_weights(n: int) -> dict[int, Fraction]:
    """Composition weights merged by square-sum, sorted by key."""
    acc: dict[int, Fraction] = defaultdict(Fraction)
    for comp in compositions(n):
        acc[comp.square_sum] += comp.weight()
    return dict(sorted(acc.items()))


def distinct_square_sums(n: int) -> tuple[int, tuple[int, ...]]:
    values = sorted({c.square_sum for c in compositions(n)})
    return len(values), tuple(values)


def square_sum_collisions(n: int) -> dict[int, list[tuple[int, ...]]]:
    """Square-sums reached by more than one multiset of parts."""
    seen: dict[int, set[tuple[int, ...]]] = defaultdict(set)
    for comp in compositions(n):
        seen[comp.square_sum].add(tuple(sorted(comp.parts)))
    return {s: sorted(v) for s, v in sorted(seen.items()) if len(v) > 1}


# ---------------------------------------------------------------------------
# P_n and C_n
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PnPolynomial:
    n: int
    poly: Polynomial


@lru_cache(maxsize=None)
def _pn(n: int) -> Polynomial:
    if n == 1:
        return Polynomial([1])
    # 2 z P' = n(n-1) P + S, S = sum_i i(n-i) C(n,i) P_i P_{n-i}
    S = Polynomial()
    for i in range(1, n):
        S = S + _pn(i) * _pn(n - i) * (i * (n - i) * binom(n, i))
    top = n * (n - 1) // 2
    if S.degree >= top:
        raise ExactArithmeticError(f"P_{n}: forcing term reaches degree {S.degree}")
    coeffs = [Fraction(0)] * (top + 1)
    for d in range(top):
        coeffs[d] = S[d] / (2 * d - n * (n - 1))
    # the z**top coefficient is free in the ODE; P_n(1) = 0 for n > 1 fixes it
    coeffs[top] = -sum(coeffs[:top])
    return Polynomial(coeffs)


def pn_poly(n: int) -> PnPolynomial:
    if n < 1:
        raise ValueError("pn_poly needs n >= 1")
    return PnPolynomial(n, _pn(n))


def cn_poly(n: int) -> Polynomial:
    """C_n(t) = P_n(1 + t): connected labeled graphs counted by edges."""
    return pn_poly(n).poly.taylor_shift(1)


def pn_from_log_gf(n_max: int) -> list[PnPolynomial]:
    """P_n as n! [y**n] log(sum_n y**n z**(n(n-1)/2) / n!).

    The log is taken in y with exact polynomial coefficients in z; the
    y**0 coefficient of the argument is 1 so no inversion is needed.
    """
    g = [Polynomial.monomial(n * (n - 1) // 2, Fraction(1, factorial(n))) for n in range(n_max + 1)]
    f: list[Polynomial] = [Polynomial()]
    for n in range(1, n_max + 1):
        acc = g[n] * n
        for k in range(1, n):
            acc = acc - f[k] * g[n - k] * k
        f.append(acc / n)
    return [PnPolynomial(n, f[n] * factorial(n)) for n in range(1, n_max + 1)]


# ---------------------------------------------------------------------------
# Z_n(t) and its exponential-sum form
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def zn_ratfun(n: int) -> SimplePoleRatFun:
    if n < 1:
        raise ValueError("zn_ratfun needs n >= 1")
    weights = square_sum_weights(n)
    poles = tuple(weights)
    # sum_s w_s / (1 - s t) over the common denominator prod_s (1 - s t)
    num = Polynomial()
    for s, w in weights.items():
        term = Polynomial([w])
        for other in poles:
            if other != s:
                term = term * Polynomial([1, -other])
        num = num + term
    try:
        num = num.shift_down(n - 1)
    except ExactArithmeticError as exc:
        raise ExactArithmeticError(f"Z_{n}: negative powers of t do not cancel") from exc
    return SimplePoleRatFun(num / 2 ** (n - 1), poles).reduced()


def zn_to_expsum(n: int) -> ExponentialSumFormula:
    return ExponentialSumFormula(partial_fractions(zn_ratfun(n)).terms, n_label=n)


# ---------------------------------------------------------------------------
# R_n(x) and the two-variable generating function
# ---------------------------------------------------------------------------


def rn_series(n: int, k_max: int) -> Series1:
    """[x**k] R_n(x) = I(n,k) for 0 <= k <= k_max."""
    order = k_max + n - 1
    total = Series1([], order)
    for s, w in square_sum_weights(n).items():
        # e^{x s / 2}
        total = total + series_exp(Series1([0, Fraction(s, 2)], order)) * w
    if any(c != 0 for c in total.coeffs[: n - 1]):
        raise ExactArithmeticError(f"R_{n}: low-order coefficients do not vanish")
    # weights already carry the overall minus sign
    return Series1(total.coeffs[n - 1 :], k_max)


def bivariate_gf_I(n_max: int, k_max: int) -> dict[tuple[int, int], Fraction]:
    """I(n,k) read off x * log(sum_n s**n/n! e^{x n**2/2}) at s**n x**(n+k)."""
    x_order = n_max + k_max
    rows = [
        series_exp(Series1([0, Fraction(m * m, 2)], x_order)) * Fraction(1, factorial(m))
        for m in range(n_max + 1)
    ]
    inner = BivariateSeries.from_rows(rows, (n_max, x_order))
    xh = bivariate_log(inner).shift(dj=1)
    return {(n, k): xh[n, n + k] for n in range(1, n_max + 1) for k in range(k_max + 1)}
