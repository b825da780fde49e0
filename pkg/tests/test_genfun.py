import itertools
from fractions import Fraction as F
from math import comb

import pytest

from autmg.exactnum import Polynomial
from autmg.genfun import (
    Composition,
    bivariate_gf_I,
    cn_poly,
    compositions,
    distinct_square_sums,
    pn_from_log_gf,
    pn_poly,
    rn_series,
    square_sum_collisions,
    zn_ratfun,
    zn_to_expsum,
)
from autmg.recurrence import build_table, compute_I, compute_J


def P(d):
    return Polynomial.from_dict(d)


# Listed in the source for n = 1..7
LISTED_P = {
    1: P({0: 1}),
    2: P({0: -1, 1: 1}),
    3: P({0: 2, 1: -3, 3: 1}),
    4: P({0: -6, 1: 12, 2: -3, 3: -4, 6: 1}),
    5: P({0: 24, 1: -60, 2: 30, 3: 20, 4: -10, 6: -5, 10: 1}),
    6: P({0: -120, 1: 360, 2: -270, 3: -90, 4: 120, 6: 20, 7: -15, 10: -6, 15: 1}),
    7: P({0: 720, 1: -2520, 2: 2520, 3: 210, 4: -1260, 5: 210, 6: -70, 7: 210,
          9: -35, 10: 42, 11: -21, 15: -7, 21: 1}),
}


@pytest.mark.parametrize("n", sorted(LISTED_P))
def test_pn_listed(n):
    assert pn_poly(n).poly == LISTED_P[n]


def test_p7_shape():
    p = pn_poly(7).poly
    assert len(p.terms()) == 13
    assert p.degree == 21


@pytest.mark.parametrize("n", range(1, 11))
def test_pn_boundary_and_degree(n):
    p = pn_poly(n).poly
    assert p(1) == (1 if n == 1 else 0)
    assert p.degree == n * (n - 1) // 2
    assert p.leading() == 1


def test_pn_satisfies_ode():
    for n in range(2, 9):
        p = pn_poly(n).poly
        lhs = p.derivative() * Polynomial([0, 2])
        rhs = p * (n * (n - 1))
        for i in range(1, n):
            rhs = rhs + pn_poly(i).poly * pn_poly(n - i).poly * (i * (n - i) * comb(n, i))
        assert lhs == rhs


def test_pn_two_routes():
    for pn in pn_from_log_gf(8):
        assert pn.poly == pn_poly(pn.n).poly
    assert pn_from_log_gf(5)[4].poly == LISTED_P[5]
    assert pn_from_log_gf(6)[5].poly[7] == -15


def _connected_labeled_counts(n):
    # independent brute force: union-find over every edge subset
    pairs = list(itertools.combinations(range(n), 2))
    counts = {}
    for r in range(len(pairs) + 1):
        for sub in itertools.combinations(pairs, r):
            parent = list(range(n))

            def find(x):
                while parent[x] != x:
                    x = parent[x]
                return x

            for u, v in sub:
                parent[find(u)] = find(v)
            if len({find(v) for v in range(n)}) == 1:
                counts[r] = counts.get(r, 0) + 1
    return P(counts)


def test_cn_examples():
    assert cn_poly(1) == P({0: 1})
    assert cn_poly(3) == P({2: 3, 3: 1})
    assert cn_poly(4) == P({3: 16, 4: 15, 5: 6, 6: 1})


@pytest.mark.parametrize("n", range(1, 6))
def test_cn_counts_graphs(n):
    assert cn_poly(n) == _connected_labeled_counts(n)


LISTED_Z = {
    1: ([1], (1,)),
    2: ([F(1, 2)], (2, 4)),
    3: ([1], (3, 5, 9)),
    4: ([4, -34], (4, 6, 8, 10, 16)),
    5: ([25, -606, 3557], (5, 7, 9, 11, 13, 17, 25)),
    6: ([24 * 9, -24 * 451, 24 * 7292, -24 * 37860], (6, 8, 10, 12, 14, 18, 20, 26, 36)),
}


@pytest.mark.parametrize("n", sorted(LISTED_Z))
def test_zn_listed(n):
    num, poles = LISTED_Z[n]
    z = zn_ratfun(n)
    assert z.numerator == Polynomial(num)
    assert z.poles == poles


@pytest.mark.parametrize("n", range(1, 7))
def test_zn_series_is_J(n):
    s = zn_ratfun(n).series(12)
    assert list(s.coeffs) == [compute_J(n, k) for k in range(13)]


def test_expsum_examples():
    assert zn_to_expsum(3).as_dict() == {3: F(3, 4), 5: F(-25, 8), 9: F(27, 8)}
    assert zn_to_expsum(4).as_dict() == {4: -2, 6: F(27, 2), 8: -8, 10: F(-250, 12), 16: F(64, 3)}
    assert zn_to_expsum(1).as_dict() == {1: 1}
    assert zn_to_expsum(4).n_label == 4


def test_compositions():
    comps = list(compositions(4))
    assert len(comps) == 8
    assert [c.parts for c in comps][:3] == [(1, 1, 1, 1), (1, 1, 2), (1, 2, 1)]
    for n in range(1, 9):
        for c in compositions(n):
            assert c.n == n
            assert c.square_sum >= n
            assert (c.square_sum == n) == all(p == 1 for p in c.parts)
    with pytest.raises(ValueError):
        Composition((1, 0))


def test_distinct_square_sums():
    assert distinct_square_sums(4) == (5, (4, 6, 8, 10, 16))
    assert distinct_square_sums(6) == (9, (6, 8, 10, 12, 14, 18, 20, 26, 36))
    assert distinct_square_sums(1) == (1, (1,))
    assert [distinct_square_sums(n)[0] for n in range(1, 7)] == [1, 2, 3, 5, 7, 9]


def test_first_collision_is_n6():
    for n in range(1, 6):
        assert square_sum_collisions(n) == {}
    # 11 partitions of 6 but only 9 distinct square sums
    assert square_sum_collisions(6) == {12: [(1, 1, 1, 3), (2, 2, 2)], 18: [(1, 1, 4), (3, 3)]}


@pytest.mark.parametrize("n", range(1, 9))
def test_poles_within_square_sums(n):
    poles = set(zn_ratfun(n).poles)
    values = set(distinct_square_sums(n)[1])
    assert poles <= values
    if n <= 6:
        assert poles == values


def test_rn_examples():
    assert list(rn_series(1, 3).coeffs) == [1, F(1, 2), F(1, 8), F(1, 48)]
    assert list(rn_series(2, 1).coeffs) == [F(1, 2), F(3, 4)]
    assert list(rn_series(3, 0).coeffs) == [F(1, 2)]


@pytest.mark.parametrize("n", range(1, 6))
def test_rn_matches_recurrence(n):
    assert list(rn_series(n, 6).coeffs) == [compute_I(n, k) for k in range(7)]


def test_bivariate_gf():
    grid = bivariate_gf_I(2, 2)
    assert grid[1, 0] == 1
    assert grid[2, 2] == F(7, 12)
    t = build_table(4, 4)
    grid = bivariate_gf_I(4, 4)
    assert all(grid[n, k] == t.I(n, k) for n, k in t.cells())


def test_bivariate_gf_5_6():
    t = build_table(5, 6)
    grid = bivariate_gf_I(5, 6)
    assert {c: grid[c] for c in t.cells()} == {c: t.I(*c) for c in t.cells()}
