"""Explicit formulas in constant k and the identities behind them."""
from __future__ import annotations

from fractions import Fraction

from .exactnum import ExponentialSumFormula
from .recurrence import binom, factorial

__all__ = [
    "ExponentialSumFormula",
    "abel_check",
    "dziobek_T",
    "expsum_eval",
    "tree_sum",
    "unicyclic_J",
]


def _pow(base: int, e: int) -> Fraction:
    # 0**0 == 1 by convention; negative exponents stay exact.
    return Fraction(base) ** e


def tree_sum(n: int) -> tuple[Fraction, Fraction]:
    """(J(n,0), I(n,0)) = (n**(n-3), n**(n-2)/n!)."""
    if n < 1:
        raise ValueError("tree_sum needs n >= 1")
    return _pow(n, n - 3), _pow(n, n - 2) / factorial(n)


def dziobek_T(n: int) -> int:
    """T(n) by Dziobek's convolution recurrence, never by the closed form."""
    T = [0, 1]
    for m in range(2, n + 1):
        s = sum(binom(m, i) * i * (m - i) * T[i] * T[m - i] for i in range(1, m))
        q, r = divmod(s, 2 * (m - 1))
        if r:
            raise ArithmeticError(f"Dziobek recurrence is not integral at n={m}")
        T.append(q)
    return T[n]


def unicyclic_J(n: int) -> Fraction:
    """J(n,1) = n! * sum_{mu=1..n} n**(n-mu-1) / (n-mu)!."""
    return factorial(n) * sum(
        (_pow(n, n - mu - 1) / factorial(n - mu) for mu in range(1, n + 1)), Fraction(0)
    )


def abel_sides(n: int, j: int) -> tuple[int, int]:
    lhs = n * (n + j) ** (n - 1)
    rhs = sum(binom(n, i) * i ** (i - 1) * (n + j - i) ** (n - i) for i in range(1, n + 1))
    return lhs, rhs


def abel_check(n: int, j: int) -> bool:
    """n (n+j)**(n-1) == sum_i C(n,i) i**(i-1) (n+j-i)**(n-i), with 0**0 = 1."""
    lhs, rhs = abel_sides(n, j)
    return lhs == rhs


def expsum_eval(f: ExponentialSumFormula, k: int) -> Fraction:
    return sum((c * _pow(a, k) for c, a in f.terms), Fraction(0))
