"""Exact computation of inverse automorphism-order sums I(n,k), J(n,k) of
connected multigraphs, by recurrence, closed form, generating function and
brute-force enumeration."""

from .closedforms import abel_check, dziobek_T, expsum_eval, tree_sum, unicyclic_J
from .exactnum import (
    BivariateSeries,
    ExponentialSumFormula,
    Polynomial,
    Rational,
    Series1,
    SimplePoleRatFun,
    partial_fractions,
    series_exp,
    series_log,
)
from .genfun import (
    bivariate_gf_I,
    cn_poly,
    distinct_square_sums,
    pn_from_log_gf,
    pn_poly,
    rn_series,
    zn_ratfun,
    zn_to_expsum,
)
from .oracle import enumerate_classes, enumerate_connected_simple, oracle_I
from .recurrence import IJTable, build_table, compute_I, compute_J

__version__ = "0.1.0"
