"""Exact arithmetic kernel: rationals, dense polynomials, truncated power
series in one and two variables, and proper rational functions whose
denominator is a product of distinct factors (1 - a*t).

Everything here is immutable and built on :class:`fractions.Fraction`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]


class ExactArithmeticError(ArithmeticError):
    """Raised when an operation leaves its exact domain."""


def rat(x: Scalar | str) -> Fraction:
    if isinstance(x, float):
        raise TypeError(f"floating-point value {x!r} in exact arithmetic")
    return x if isinstance(x, Fraction) else Fraction(x)


def format_rational(q: Scalar) -> str:
    """``p/q`` or ``p`` when the denominator is 1."""
    q = rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def _trim(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [rat(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class Polynomial:
    """Dense univariate polynomial; ``coeffs[d]`` is the coefficient of x**d.

    The zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self._coeffs = _trim(coeffs)

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> Polynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def from_dict(cls, terms: Mapping[int, Scalar]) -> Polynomial:
        if not terms:
            return cls()
        out = [Fraction(0)] * (max(terms) + 1)
        for d, c in terms.items():
            out[d] += rat(c)
        return cls(out)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def __getitem__(self, d: int) -> Fraction:
        if 0 <= d < len(self._coeffs):
            return self._coeffs[d]
        return Fraction(0)

    def terms(self) -> dict[int, Fraction]:
        return {d: c for d, c in enumerate(self._coeffs) if c != 0}

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: Polynomial | Scalar) -> Polynomial:
        other = _as_poly(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return Polynomial(self[d] + other[d] for d in range(n))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self._coeffs)

    def __sub__(self, other: Polynomial | Scalar) -> Polynomial:
        return self + (-_as_poly(other))

    def __rsub__(self, other: Scalar) -> Polynomial:
        return _as_poly(other) - self

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self._coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> Polynomial:
        return Polynomial(c / scalar for c in self._coeffs)

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Polynomial([1]), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divmod(self, divisor: Polynomial) -> tuple[Polynomial, Polynomial]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dd = divisor.degree
        lead = divisor.leading()
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for shift in range(len(rem) - dd - 1, -1, -1):
            c = rem[shift + dd] / lead
            quot[shift] = c
            if c:
                for i, b in enumerate(divisor.coeffs):
                    rem[shift + i] -= c * b
        return Polynomial(quot), Polynomial(rem[:dd] if dd > 0 else [])

    def exact_div(self, divisor: Polynomial) -> Polynomial:
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ExactArithmeticError("polynomial division leaves a remainder")
        return q

    def shift_down(self, k: int) -> Polynomial:
        """Divide by x**k; the low coefficients must vanish."""
        if any(c != 0 for c in self._coeffs[:k]):
            raise ExactArithmeticError(f"polynomial is not divisible by x^{k}")
        return Polynomial(self._coeffs[k:])

    def derivative(self) -> Polynomial:
        return Polynomial(d * c for d, c in enumerate(self._coeffs) if d > 0)

    def compose(self, inner: Polynomial) -> Polynomial:
        acc = Polynomial()
        for c in reversed(self._coeffs):
            acc = acc * inner + c
        return acc

    def taylor_shift(self, a: Scalar) -> Polynomial:
        """p(x + a)."""
        return self.compose(Polynomial([a, 1]))

    def format(self, var: str = "x") -> str:
        parts: list[str] = []
        for d, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = format_rational(mag)
            else:
                mono = var if d == 1 else f"{var}^{d}"
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"Polynomial({self.format()})"


def _as_poly(x: Polynomial | Scalar) -> Polynomial:
    return x if isinstance(x, Polynomial) else Polynomial([x])


# ---------------------------------------------------------------------------
# Truncated power series
# ---------------------------------------------------------------------------


class Series1:
    """Power series in one variable, valid through x**order."""

    __slots__ = ("_coeffs", "_order")

    def __init__(self, coeffs: Iterable[Scalar], order: int):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        cs = [rat(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self._coeffs = tuple(cs)
        self._order = order

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return self._order

    def __getitem__(self, d: int) -> Fraction:
        return self._coeffs[d]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series1):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._coeffs, self._order))

    def _check(self, other: Series1) -> int:
        return min(self._order, other._order)

    def __add__(self, other: Series1) -> Series1:
        order = self._check(other)
        return Series1((self[d] + other[d] for d in range(order + 1)), order)

    def __neg__(self) -> Series1:
        return Series1((-c for c in self._coeffs), self._order)

    def __sub__(self, other: Series1) -> Series1:
        return self + (-other)

    def __mul__(self, other: Series1 | Scalar) -> Series1:
        if isinstance(other, (int, Fraction)):
            return Series1((c * other for c in self._coeffs), self._order)
        order = self._check(other)
        a, b = self._coeffs, other._coeffs
        out = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            if a[i] == 0:
                continue
            for j in range(order + 1 - i):
                out[i + j] += a[i] * b[j]
        return Series1(out, order)

    __rmul__ = __mul__

    def inverse(self) -> Series1:
        a = self._coeffs
        if a[0] == 0:
            raise ExactArithmeticError("series with zero constant term is not invertible")
        inv = [Fraction(0)] * (self._order + 1)
        inv[0] = 1 / a[0]
        for n in range(1, self._order + 1):
            inv[n] = -sum((a[k] * inv[n - k] for k in range(1, n + 1)), Fraction(0)) * inv[0]
        return Series1(inv, self._order)

    def __repr__(self) -> str:
        return f"Series1({Polynomial(self._coeffs).format()} + O(x^{self._order + 1}))"


def series_exp(s: Series1) -> Series1:
    """exp of a series with zero constant term (f' = s' f)."""
    a = s.coeffs
    if a[0] != 0:
        raise ExactArithmeticError("series_exp needs a zero constant term")
    f = [Fraction(0)] * (s.order + 1)
    f[0] = Fraction(1)
    for n in range(1, s.order + 1):
        f[n] = sum((k * a[k] * f[n - k] for k in range(1, n + 1)), Fraction(0)) / n
    return Series1(f, s.order)


def series_log(s: Series1) -> Series1:
    """log of a series with constant term 1 (g f' = g')."""
    g = s.coeffs
    if g[0] != 1:
        raise ExactArithmeticError("series_log needs constant term 1")
    f = [Fraction(0)] * (s.order + 1)
    for n in range(1, s.order + 1):
        f[n] = g[n] - sum((k * f[k] * g[n - k] for k in range(1, n)), Fraction(0)) / n
    return Series1(f, s.order)


@dataclass(frozen=True)
class BivariateSeries:
    """Truncated series in two variables, keyed by (i, j) exponents.

    ``i`` is the primary variable.  Keys with zero coefficient are not
    stored, and nothing beyond ``truncation = (max_i, max_j)`` is kept.
    """

    coeffs: Mapping[tuple[int, int], Fraction]
    truncation: tuple[int, int]

    def __post_init__(self):
        mi, mj = self.truncation
        clean = {
            (i, j): rat(c)
            for (i, j), c in self.coeffs.items()
            if c != 0 and 0 <= i <= mi and 0 <= j <= mj
        }
        object.__setattr__(self, "coeffs", clean)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self.coeffs.get(key, Fraction(0))

    def row(self, i: int) -> Series1:
        """Coefficient of the primary variable's i-th power, as a Series1."""
        mj = self.truncation[1]
        return Series1((self[i, j] for j in range(mj + 1)), mj)

    @classmethod
    def from_rows(cls, rows: Sequence[Series1], truncation: tuple[int, int]) -> BivariateSeries:
        coeffs = {}
        for i, r in enumerate(rows):
            for j, c in enumerate(r.coeffs):
                coeffs[i, j] = c
        return cls(coeffs, truncation)

    def __mul__(self, other: BivariateSeries) -> BivariateSeries:
        mi = min(self.truncation[0], other.truncation[0])
        mj = min(self.truncation[1], other.truncation[1])
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), a in self.coeffs.items():
            for (i2, j2), b in other.coeffs.items():
                i, j = i1 + i2, j1 + j2
                if i <= mi and j <= mj:
                    out[i, j] = out.get((i, j), Fraction(0)) + a * b
        return BivariateSeries(out, (mi, mj))

    def shift(self, di: int = 0, dj: int = 0) -> BivariateSeries:
        """Multiply by (primary)**di * (secondary)**dj, dropping overflow."""
        mi, mj = self.truncation
        return BivariateSeries({(i + di, j + dj): c for (i, j), c in self.coeffs.items()}, (mi, mj))


def bivariate_log(g: BivariateSeries) -> BivariateSeries:
    """log g via g * df/ds = dg/ds in the primary variable s.

    The s**0 row must be a series with constant term 1.
    """
    mi, mj = g.truncation
    rows = [g.row(i) for i in range(mi + 1)]
    f = [series_log(rows[0])]
    inv0 = rows[0].inverse()
    for n in range(1, mi + 1):
        acc = rows[n] * n
        for k in range(1, n):
            acc = acc - f[k] * rows[n - k] * k
        f.append(acc * inv0 * Fraction(1, n))
    return BivariateSeries.from_rows(f, (mi, mj))


# ---------------------------------------------------------------------------
# Rational functions with simple poles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExponentialSumFormula:
    """k -> sum(c * a**k) over ``terms``; bases strictly increasing."""

    terms: tuple[tuple[Fraction, int], ...]
    n_label: int | None = None

    def __post_init__(self):
        terms = tuple((rat(c), int(a)) for c, a in self.terms if c != 0)
        bases = [a for _, a in terms]
        if any(a <= 0 for a in bases):
            raise ValueError("bases must be positive integers")
        if bases != sorted(set(bases)):
            raise ValueError("bases must be strictly increasing")
        object.__setattr__(self, "terms", terms)

    @property
    def bases(self) -> tuple[int, ...]:
        return tuple(a for _, a in self.terms)

    def as_dict(self) -> dict[int, Fraction]:
        return {a: c for c, a in self.terms}

    def __call__(self, k: int) -> Fraction:
        return sum((c * Fraction(a) ** k for c, a in self.terms), Fraction(0))


@dataclass(frozen=True)
class SimplePoleRatFun:
    """numerator(t) / prod(1 - a*t for a in poles), strictly proper."""

    numerator: Polynomial
    poles: tuple[int, ...] = field(default=())

    def __post_init__(self):
        poles = tuple(int(a) for a in self.poles)
        if len(set(poles)) != len(poles):
            raise ExactArithmeticError(f"repeated pole in {poles}")
        if list(poles) != sorted(poles) or any(a <= 0 for a in poles):
            raise ValueError("poles must be strictly increasing positive integers")
        if self.numerator.degree >= len(poles):
            raise ValueError("rational function is not proper")
        object.__setattr__(self, "poles", poles)

    def denominator(self) -> Polynomial:
        out = Polynomial([1])
        for a in self.poles:
            out = out * Polynomial([1, -a])
        return out

    def series(self, order: int) -> Series1:
        num = Series1(self.numerator.coeffs, order)
        return num * Series1(self.denominator().coeffs, order).inverse()

    def reduced(self) -> SimplePoleRatFun:
        """Cancel every factor (1 - a t) that also divides the numerator."""
        num, keep = self.numerator, []
        for a in self.poles:
            if not num.is_zero() and num(Fraction(1, a)) == 0:
                num = num.exact_div(Polynomial([1, -a]))
            elif num.is_zero():
                continue
            else:
                keep.append(a)
        return SimplePoleRatFun(num, tuple(keep))

    def format(self, var: str = "t") -> str:
        num = self.numerator.format(var)
        if len(self.numerator.terms()) > 1:
            num = f"({num})"
        den = "".join(f"(1-{var})" if a == 1 else f"(1-{a}*{var})" for a in self.poles)
        return f"{num} / {den}" if den else num


def partial_fractions(f: SimplePoleRatFun) -> ExponentialSumFormula:
    """Residues c_i with f(t) = sum c_i / (1 - a_i t)."""
    if len(set(f.poles)) != len(f.poles):
        raise ExactArithmeticError(f"repeated pole in {f.poles}")
    terms = []
    for a in f.poles:
        x = Fraction(1, a)
        den = Fraction(1)
        for b in f.poles:
            if b != a:
                den *= 1 - b * x
        terms.append((f.numerator(x) / den, a))
    return ExponentialSumFormula(tuple(terms))
