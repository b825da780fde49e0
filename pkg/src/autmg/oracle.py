"""Brute-force ground truth.

Connected multigraphs (loops and parallel edges allowed) are enumerated as
symmetric multiplicity matrices, reduced to isomorphism classes by a
minimum over all n! relabelings, and weighted by 1/|Aut|.  Nothing here
depends on the analytic modules.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from operator import itemgetter
from typing import Iterator, Sequence

from .exactnum import Polynomial

DEFAULT_MAX_PERMUTATIONS = 5040
DEFAULT_MAX_MATRICES = 10**7


class SearchTooLarge(RuntimeError):
    """The requested enumeration exceeds the configured budget."""


@dataclass(frozen=True)
class Budget:
    max_permutations: int = DEFAULT_MAX_PERMUTATIONS
    max_matrices: int = DEFAULT_MAX_MATRICES


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class MultigraphMatrix:
    n: int
    mult: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.mult)
        if len(m) != self.n or any(len(row) != self.n for row in m):
            raise ValueError("multiplicity matrix must be n x n")
        for u in range(self.n):
            for v in range(self.n):
                if m[u][v] < 0:
                    raise ValueError("negative multiplicity")
                if m[u][v] != m[v][u]:
                    raise ValueError("multiplicity matrix must be symmetric")
        object.__setattr__(self, "mult", m)

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[tuple[int, int]]) -> MultigraphMatrix:
        """0-based edge list; (v, v) is a loop, repeats are parallel edges."""
        m = [[0] * n for _ in range(n)]
        for u, v in edges:
            m[u][v] += 1
            if u != v:
                m[v][u] += 1
        return cls(n, tuple(map(tuple, m)))

    @classmethod
    def from_flat(cls, n: int, flat: Sequence[int]) -> MultigraphMatrix:
        m = [[0] * n for _ in range(n)]
        for (u, v), x in zip(_cells(n), flat):
            m[u][v] = m[v][u] = x
        return cls(n, tuple(map(tuple, m)))

    def flat(self) -> tuple[int, ...]:
        """Upper triangle with diagonal, row-major."""
        return tuple(self.mult[u][v] for u, v in _cells(self.n))

    @property
    def edge_count(self) -> int:
        return sum(self.flat())

    @property
    def cyclomatic(self) -> int:
        return self.edge_count - self.n + 1

    def permuted(self, perm: Sequence[int]) -> MultigraphMatrix:
        """Relabel vertex v as perm[v]."""
        m = [[0] * self.n for _ in range(self.n)]
        for u in range(self.n):
            for v in range(self.n):
                m[perm[u]][perm[v]] = self.mult[u][v]
        return MultigraphMatrix(self.n, tuple(map(tuple, m)))


@dataclass(frozen=True)
class CanonicalClass:
    rep: MultigraphMatrix
    aut_order: int


@lru_cache(maxsize=None)
def _cells(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((u, v) for u in range(n) for v in range(u, n))


@lru_cache(maxsize=None)
def _perm_getters(n: int) -> tuple[itemgetter, ...]:
    """One getter per permutation p, mapping flat(g) to flat of g relabeled by p^-1.

    Taking the minimum over all of them is the same as the minimum over
    all relabelings, since p ranges over the whole symmetric group.
    """
    cells = _cells(n)
    index = {c: i for i, c in enumerate(cells)}
    getters = []
    for p in itertools.permutations(range(n)):
        src = []
        for u, v in cells:
            a, b = p[u], p[v]
            src.append(index[(a, b) if a <= b else (b, a)])
        # itemgetter with a single index returns a scalar, not a tuple
        getters.append(itemgetter(*src) if len(src) > 1 else (lambda t, i=src[0]: (t[i],)))
    return tuple(getters)


def _check_perms(n: int, budget: Budget) -> None:
    if math.factorial(n) > budget.max_permutations:
        raise SearchTooLarge(f"{n}! relabelings exceed budget {budget.max_permutations}")


def _canonical_flat(n: int, flat: tuple[int, ...]) -> tuple[int, ...]:
    return min(g(flat) for g in _perm_getters(n))


def canonical_form(g: MultigraphMatrix, budget: Budget = DEFAULT_BUDGET) -> MultigraphMatrix:
    _check_perms(g.n, budget)
    return MultigraphMatrix.from_flat(g.n, _canonical_flat(g.n, g.flat()))


def _connected_flat(n: int, flat: Sequence[int]) -> bool:
    adj: list[list[int]] = [[] for _ in range(n)]
    for (u, v), x in zip(_cells(n), flat):
        if x and u != v:
            adj[u].append(v)
            adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == n


def is_connected(g: MultigraphMatrix) -> bool:
    """Loops and multiplicities are ignored; one vertex is connected."""
    return _connected_flat(g.n, g.flat())


def vertex_symmetries(g: MultigraphMatrix, budget: Budget = DEFAULT_BUDGET) -> int:
    """Number of vertex permutations preserving every multiplicity."""
    _check_perms(g.n, budget)
    flat = g.flat()
    return sum(1 for getter in _perm_getters(g.n) if getter(flat) == flat)


def aut_order(g: MultigraphMatrix, budget: Budget = DEFAULT_BUDGET) -> int:
    """|Aut| = (vertex symmetries) * prod r! over parallel classes * prod 2**s s! over loops."""
    kernel = 1
    for u in range(g.n):
        s = g.mult[u][u]
        kernel *= 2**s * math.factorial(s)
        for v in range(u + 1, g.n):
            kernel *= math.factorial(g.mult[u][v])
    return vertex_symmetries(g, budget) * kernel


def _weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def matrix_count(n: int, k: int) -> int:
    """Number of symmetric multiplicity matrices with n+k-1 edges."""
    edges = n + k - 1
    cells = n * (n + 1) // 2
    if edges < 0:
        return 0
    return math.comb(edges + cells - 1, cells - 1)


def enumerate_classes(n: int, k: int, budget: Budget = DEFAULT_BUDGET) -> list[CanonicalClass]:
    """One entry per isomorphism class of connected multigraphs, sorted by rep."""
    if n < 1 or k < 0:
        raise ValueError("enumerate_classes needs n >= 1 and k >= 0")
    _check_perms(n, budget)
    count = matrix_count(n, k)
    if count > budget.max_matrices:
        raise SearchTooLarge(f"{count} multiplicity matrices exceed budget {budget.max_matrices}")
    reps: set[tuple[int, ...]] = set()
    for flat in _weak_compositions(n + k - 1, n * (n + 1) // 2):
        if _connected_flat(n, flat):
            reps.add(_canonical_flat(n, flat))
    classes = []
    for flat in sorted(reps):
        rep = MultigraphMatrix.from_flat(n, flat)
        classes.append(CanonicalClass(rep, aut_order(rep, budget)))
    return classes


def oracle_I(n: int, k: int, budget: Budget = DEFAULT_BUDGET) -> Fraction:
    return sum((Fraction(1, c.aut_order) for c in enumerate_classes(n, k, budget)), Fraction(0))


SIMPLE_GRAPH_MAX_N = 6


def enumerate_connected_simple(n: int) -> Polynomial:
    """sum over connected labeled simple graphs on n vertices of t**edges."""
    if not 1 <= n <= SIMPLE_GRAPH_MAX_N:
        raise SearchTooLarge(f"simple-graph enumeration is limited to 1 <= n <= {SIMPLE_GRAPH_MAX_N}")
    pairs = list(itertools.combinations(range(n), 2))
    counts = [0] * (len(pairs) + 1)
    for mask in range(1 << len(pairs)):
        m = [[0] * n for _ in range(n)]
        e = 0
        for b, (u, v) in enumerate(pairs):
            if mask >> b & 1:
                m[u][v] = m[v][u] = 1
                e += 1
        if _connected_flat(n, [m[u][v] for u, v in _cells(n)]):
            counts[e] += 1
    return Polynomial(counts)
