"""Cross-route consistency checks run by ``autmg verify``.

Each check compares two independent routes to the same numbers and
returns every disagreement it finds, labeled with the cell and the two
routes involved.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import closedforms, genfun, oracle, recurrence
from .exactnum import format_rational

SUITES = ("recurrence", "closedforms", "genfun", "oracle")
DEFAULT_ORACLE_CAP = 6


@dataclass(frozen=True)
class Mismatch:
    cell: tuple
    expected: object
    got: object
    expected_route: str
    got_route: str

    def describe(self) -> str:
        cell = ",".join(str(c) for c in self.cell)
        return (
            f"({cell}): expected {_fmt(self.expected)} [{self.expected_route}]"
            f" got {_fmt(self.got)} [{self.got_route}]"
        )


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def compare(self, cell, expected, got, expected_route: str, got_route: str) -> None:
        self.cases += 1
        if expected != got:
            self.mismatches.append(Mismatch(tuple(cell), expected, got, expected_route, got_route))


def _fmt(x) -> str:
    if isinstance(x, (int, Fraction)):
        return format_rational(x)
    return str(x)


@dataclass(frozen=True)
class Bounds:
    n_max: int = 6
    k_max: int = 10
    oracle_cap: int = DEFAULT_ORACLE_CAP


# ---------------------------------------------------------------------------
# recurrence
# ---------------------------------------------------------------------------


def check_eq2(b: Bounds) -> CheckResult:
    r = CheckResult("recurrence.normalization")
    for n in range(1, b.n_max + 1):
        for k in range(b.k_max + 1):
            I = recurrence.compute_I(n, k)
            r.compare((n, k), recurrence.compute_J(n, k), recurrence.j_from_i(n, k, I),
                      "J-recurrence", "2^k (n+k-1)! I-recurrence")
    return r


def check_boundary(b: Bounds) -> CheckResult:
    r = CheckResult("recurrence.boundary")
    for n in range(-2, b.n_max + 1):
        for k in range(-3, b.k_max + 1):
            if n >= 1 and k >= 0:
                continue
            r.compare((n, k), 0, recurrence.compute_I(n, k), "boundary", "I-recurrence")
            r.compare((n, k), 0, recurrence.compute_J(n, k), "boundary", "J-recurrence")
    r.compare((1, 0), 1, recurrence.compute_I(1, 0), "boundary", "I-recurrence")
    return r


def check_row_one(b: Bounds) -> CheckResult:
    r = CheckResult("recurrence.row_n1")
    for k in range(b.k_max + 1):
        r.compare((1, k), 1, recurrence.compute_J(1, k), "J(1,k)=1", "J-recurrence")
    return r


# ---------------------------------------------------------------------------
# closedforms
# ---------------------------------------------------------------------------


def check_dziobek(b: Bounds) -> CheckResult:
    r = CheckResult("closedforms.dziobek")
    for n in range(1, b.n_max + 1):
        T = closedforms.dziobek_T(n)
        r.compare((n,), Fraction(n) ** (n - 2), T, "Cayley n^(n-2)", "Dziobek recurrence")
        r.compare((n,), n * closedforms.tree_sum(n)[0], T, "n * tree_sum", "Dziobek recurrence")
    return r


def check_tree_sum(b: Bounds) -> CheckResult:
    r = CheckResult("closedforms.tree_sum")
    for n in range(1, b.n_max + 1):
        J0, I0 = closedforms.tree_sum(n)
        r.compare((n, 0), recurrence.compute_J(n, 0), J0, "J-recurrence", "n^(n-3)")
        r.compare((n, 0), recurrence.compute_I(n, 0), I0, "I-recurrence", "n^(n-2)/n!")
    return r


def check_unicyclic(b: Bounds) -> CheckResult:
    r = CheckResult("closedforms.unicyclic")
    for n in range(1, b.n_max + 1):
        r.compare((n, 1), recurrence.compute_J(n, 1), closedforms.unicyclic_J(n),
                  "J-recurrence", "unicyclic sum")
    return r


def check_abel(b: Bounds) -> CheckResult:
    r = CheckResult("closedforms.abel")
    for n in range(1, b.n_max + 1):
        for j in range(b.k_max + 1):
            lhs, rhs = closedforms.abel_sides(n, j)
            r.compare((n, j), lhs, rhs, "n(n+j)^(n-1)", "binomial sum")
    return r


def check_vanishing_window(b: Bounds) -> CheckResult:
    r = CheckResult("closedforms.vanishing_window")
    for n in range(2, b.n_max + 1):
        f = genfun.zn_to_expsum(n)
        for k in range(-(n - 1), 0):
            r.compare((n, k), 0, closedforms.expsum_eval(f, k), "zero", "exponential sum")
    return r


# ---------------------------------------------------------------------------
# genfun
# ---------------------------------------------------------------------------


def check_p_boundary(b: Bounds) -> CheckResult:
    r = CheckResult("genfun.p_boundary")
    for n in range(1, b.n_max + 1):
        r.compare((n,), 1 if n == 1 else 0, genfun.pn_poly(n).poly(1), "delta_{n,1}", "P_n(1)")
    return r


def check_p_degree(b: Bounds) -> CheckResult:
    r = CheckResult("genfun.p_degree")
    for n in range(1, b.n_max + 1):
        p = genfun.pn_poly(n).poly
        r.compare((n,), (n * (n - 1) // 2, 1), (p.degree, p.leading()), "n(n-1)/2, monic", "P_n")
    return r


def check_p_two_routes(b: Bounds) -> CheckResult:
    r = CheckResult("genfun.p_two_routes")
    for pn in genfun.pn_from_log_gf(b.n_max):
        r.compare((pn.n,), genfun.pn_poly(pn.n).poly, pn.poly, "P_n ODE", "log generating function")
    return r


def check_cn(b: Bounds) -> CheckResult:
    r = CheckResult("genfun.cn_vs_enumeration")
    for n in range(1, min(b.n_max, 5) + 1):
        c = genfun.cn_poly(n)
        r.compare((n,), oracle.enumerate_connected_simple(n), c, "labeled enumeration", "P_n(1+t)")
        r.compare((n, "ints"), True, all(x.denominator == 1 and x >= 0 for x in c.coeffs),
                  "non-negative integers", "C_n coefficients")
    return r


def check_z_series(b: Bounds) -> CheckResult:
    r = CheckResult("genfun.z_series")
    for n in range(1, b.n_max + 1):
        s = genfun.zn_ratfun(n).series(b.k_max)
        for k in range(b.k_max + 1):
            r.compare((n, k), recurrence.compute_J(n, k), s[k], "J-recurrence", "Z_n series")
    return r


def check_expsum(b: Bounds) -> CheckResult:
    r = CheckResult("genfun.expsum")
    for n in range(1, b.n_max + 1):
        f = genfun.zn_to_expsum(n)
        for k in range(b.k_max + 1):
            r.compare((n, k), recurrence.compute_J(n, k), closedforms.expsum_eval(f, k),
                      "J-recurrence", "exponential sum")
    return r


def check_rn(b: Bounds) -> CheckResult:
    r = CheckResult("genfun.rn_series")
    for n in range(1, b.n_max + 1):
        s = genfun.rn_series(n, b.k_max)
        for k in range(b.k_max + 1):
            r.compare((n, k), recurrence.compute_I(n, k), s[k], "I-recurrence", "R_n series")
    return r


def check_bivariate(b: Bounds) -> CheckResult:
    r = CheckResult("genfun.bivariate")
    grid = genfun.bivariate_gf_I(b.n_max, b.k_max)
    for (n, k), v in sorted(grid.items()):
        r.compare((n, k), recurrence.compute_I(n, k), v, "I-recurrence", "bivariate log")
    return r


def check_poles(b: Bounds) -> CheckResult:
    r = CheckResult("genfun.poles")
    for n in range(1, b.n_max + 1):
        _, values = genfun.distinct_square_sums(n)
        poles = genfun.zn_ratfun(n).poles
        r.compare((n, "subset"), True, set(poles) <= set(values), "poles within square sums", "Z_n poles")
        if n <= 6:
            r.compare((n,), values, poles, "distinct square sums", "Z_n poles")
    return r


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------


def check_oracle(b: Bounds) -> CheckResult:
    r = CheckResult("oracle.vs_recurrence")
    for total in range(1, b.oracle_cap + 1):
        for n in range(1, total + 1):
            k = total - n
            r.compare((n, k), oracle.oracle_I(n, k), recurrence.compute_I(n, k),
                      "multigraph enumeration", "I-recurrence")
    return r


def check_aut_conventions(b: Bounds) -> CheckResult:
    r = CheckResult("oracle.aut_conventions")
    for s in range(7):
        g = oracle.MultigraphMatrix(1, ((s,),))
        r.compare(("loops", s), 2**s * math.factorial(s), oracle.aut_order(g), "2^s s!", "aut_order")
    for e in range(1, 7):
        g = oracle.MultigraphMatrix(2, ((0, e), (e, 0)))
        r.compare(("edges", e), 2 * math.factorial(e), oracle.aut_order(g), "2 r!", "aut_order")
    return r


def check_canonical(b: Bounds) -> CheckResult:
    r = CheckResult("oracle.canonical_form")
    rng = random.Random(0)
    for n in range(1, min(b.n_max, 4) + 1):
        cells = n * (n + 1) // 2
        for _ in range(50):
            g = oracle.MultigraphMatrix.from_flat(n, [rng.randint(0, 3) for _ in range(cells)])
            canon = oracle.canonical_form(g)
            perm = list(range(n))
            rng.shuffle(perm)
            r.compare((n, g.flat()), canon, oracle.canonical_form(g.permuted(perm)),
                      "canonical form", "canonical form after relabeling")
            r.compare((n, g.flat()), canon, oracle.canonical_form(canon), "canonical form", "idempotence")
    return r


def check_orbits(b: Bounds) -> CheckResult:
    r = CheckResult("oracle.orbit_divisibility")
    for total in range(1, b.oracle_cap + 1):
        for n in range(1, total + 1):
            for cls in oracle.enumerate_classes(n, total - n):
                gamma = oracle.vertex_symmetries(cls.rep)
                r.compare((n, total - n, cls.rep.flat()), 0, math.factorial(n) % gamma,
                          "n! divisible", "|vertex symmetries|")
    return r


def check_simple_graphs(b: Bounds) -> CheckResult:
    r = CheckResult("oracle.simple_graphs")
    for n in range(1, min(b.n_max, oracle.SIMPLE_GRAPH_MAX_N) + 1):
        c = oracle.enumerate_connected_simple(n)
        r.compare((n, "low"), (n - 1, n ** (n - 2) if n > 1 else 1),
                  (min(c.terms()), c[min(c.terms())]), "Cayley", "enumeration")
        r.compare((n, "top"), (n * (n - 1) // 2, 1), (c.degree, c.leading()), "complete graph", "enumeration")
    return r


REGISTRY: dict[str, list[Callable[[Bounds], CheckResult]]] = {
    "recurrence": [check_eq2, check_boundary, check_row_one],
    "closedforms": [check_dziobek, check_tree_sum, check_unicyclic, check_abel, check_vanishing_window],
    "genfun": [
        check_p_boundary, check_p_degree, check_p_two_routes, check_cn, check_z_series,
        check_expsum, check_rn, check_bivariate, check_poles,
    ],
    "oracle": [check_oracle, check_aut_conventions, check_canonical, check_orbits, check_simple_graphs],
}


def run_suites(suites: Iterable[str], bounds: Bounds) -> list[CheckResult]:
    wanted = set(SUITES) if "all" in suites else set(suites)
    results = [fn(bounds) for suite in SUITES if suite in wanted for fn in REGISTRY[suite]]
    return sorted(results, key=lambda res: res.name)
