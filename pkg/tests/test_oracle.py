import itertools
import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from autmg.oracle import (
    Budget,
    MultigraphMatrix,
    SearchTooLarge,
    aut_order,
    canonical_form,
    enumerate_classes,
    enumerate_connected_simple,
    is_connected,
    matrix_count,
    oracle_I,
    vertex_symmetries,
)
from autmg.exactnum import Polynomial
from autmg.recurrence import compute_I

G = MultigraphMatrix.from_edges


def test_canonical_examples():
    a = G(2, [(1, 1)])
    b = G(2, [(0, 0)])
    assert canonical_form(a) == canonical_form(b)
    # lexicographic minimum of (m00, m01, m11)
    assert canonical_form(a).flat() == (0, 0, 1)
    single = MultigraphMatrix(1, ((4,),))
    assert canonical_form(single) == single
    path_a = G(3, [(1, 0), (0, 2)])  # middle vertex 0
    path_b = G(3, [(0, 1), (1, 2)])  # middle vertex 1
    assert canonical_form(path_a) == canonical_form(path_b)


def test_is_connected():
    assert is_connected(MultigraphMatrix(1, ((3,),)))
    assert not is_connected(G(2, [(0, 0), (1, 1)]))
    assert is_connected(G(3, [(0, 1), (1, 2)]))


def test_aut_examples():
    assert aut_order(MultigraphMatrix(1, ((3,),))) == 48
    assert aut_order(G(2, [(0, 1), (0, 1)])) == 4
    assert aut_order(G(3, [(0, 1), (1, 2)])) == 2
    assert aut_order(G(2, [(0, 1), (0, 0)])) == 2


@pytest.mark.parametrize("s", range(7))
def test_loop_convention(s):
    assert aut_order(MultigraphMatrix(1, ((s,),))) == 2**s * math.factorial(s)


@pytest.mark.parametrize("r", range(1, 7))
def test_multi_edge_convention(r):
    assert aut_order(G(2, [(0, 1)] * r)) == 2 * math.factorial(r)


def test_enumerate_examples():
    (c,) = enumerate_classes(1, 2)
    assert c.aut_order == 8
    assert sorted(c.aut_order for c in enumerate_classes(2, 1)) == [2, 4]
    (c,) = enumerate_classes(3, 0)
    assert c.aut_order == 2
    (c,) = enumerate_classes(1, 0)
    assert c.aut_order == 1 and c.rep.edge_count == 0


def test_oracle_examples():
    assert oracle_I(2, 2) == F(7, 12)
    assert sorted(c.aut_order for c in enumerate_classes(2, 2)) == [4, 8, 8, 12]
    assert oracle_I(4, 0) == F(2, 3)
    for k in range(5):
        assert oracle_I(1, k) == F(1, 2**k * math.factorial(k))


def test_classes_have_right_cyclomatic_number():
    for n, k in [(2, 3), (3, 2), (4, 1)]:
        for c in enumerate_classes(n, k):
            assert c.rep.cyclomatic == k
            assert is_connected(c.rep)
            assert canonical_form(c.rep) == c.rep


@pytest.mark.parametrize("total", range(1, 7))
def test_oracle_matches_recurrence(total):
    for n in range(1, total + 1):
        assert oracle_I(n, total - n) == compute_I(n, total - n)


def test_orbit_counting():
    for n, k in [(3, 2), (4, 1), (5, 0), (2, 3)]:
        for c in enumerate_classes(n, k):
            assert math.factorial(n) % vertex_symmetries(c.rep) == 0


def _labeled_orbit_sum(n, k):
    """sum over labeled matrices of 1/(n! * kernel): an orbit-stabilizer oracle."""
    from autmg.oracle import _weak_compositions
    total = F(0)
    for flat in _weak_compositions(n + k - 1, n * (n + 1) // 2):
        g = MultigraphMatrix.from_flat(n, flat)
        if is_connected(g):
            total += F(vertex_symmetries(g), math.factorial(n) * aut_order(g))
    return total


def test_orbit_stabilizer_cross_check():
    for n, k in [(2, 2), (3, 1), (4, 0), (3, 2)]:
        assert _labeled_orbit_sum(n, k) == oracle_I(n, k)


@st.composite
def multigraphs(draw):
    n = draw(st.integers(1, 4))
    cells = n * (n + 1) // 2
    flat = draw(st.lists(st.integers(0, 3), min_size=cells, max_size=cells))
    perm = draw(st.permutations(range(n)))
    return MultigraphMatrix.from_flat(n, flat), perm


@settings(max_examples=200, deadline=None)
@given(multigraphs())
def test_canonical_form_invariance(case):
    g, perm = case
    c = canonical_form(g)
    assert canonical_form(g.permuted(perm)) == c
    assert canonical_form(c) == c
    assert aut_order(g.permuted(perm)) == aut_order(g)


def test_budget_guards():
    with pytest.raises(SearchTooLarge):
        enumerate_classes(8, 0)
    with pytest.raises(SearchTooLarge):
        enumerate_classes(3, 2, Budget(max_matrices=10))
    with pytest.raises(SearchTooLarge):
        enumerate_connected_simple(7)
    assert matrix_count(2, 1) == math.comb(2 + 2, 2)


def test_matrix_validation():
    with pytest.raises(ValueError):
        MultigraphMatrix(2, ((0, 1), (2, 0)))
    with pytest.raises(ValueError):
        MultigraphMatrix(2, ((0, -1), (-1, 0)))


def test_simple_enumerator_examples():
    assert enumerate_connected_simple(2) == Polynomial([0, 1])
    assert enumerate_connected_simple(3) == Polynomial([0, 0, 3, 1])
    assert enumerate_connected_simple(4) == Polynomial([0, 0, 0, 16, 15, 6, 1])


@pytest.mark.parametrize("n", range(1, 7))
def test_simple_enumerator_properties(n):
    c = enumerate_connected_simple(n)
    assert all(x.denominator == 1 and x >= 0 for x in c.coeffs)
    low = min(c.terms())
    assert low == n - 1
    assert c[low] == (n ** (n - 2) if n > 1 else 1)
    assert c.degree == n * (n - 1) // 2 and c.leading() == 1
    assert sum(c.coeffs) <= 2 ** math.comb(n, 2)
