"""Exact nonnegativity tests and optimal coefficient bounds for symmetric ternary quartics."""

from .certificates import Certificate, certify, verify
from .exactmath import AlgebraicNumber, UniPoly, isolate_roots, sturm_root_count
from .forms import Decision, Domain, QuarticForm, decide, evaluate, expand
from .frontier import (BoundResult, Infeasible, b_of_t, bmin_real, branch_points, c_of_t,
                       cmin_nonneg, pqk)
from .oracle import OracleReport, find_counterexample, numeric_min

__all__ = [
    "AlgebraicNumber", "BoundResult", "Certificate", "Decision", "Domain", "Infeasible",
    "OracleReport", "QuarticForm", "UniPoly", "b_of_t", "bmin_real", "branch_points",
    "c_of_t", "certify", "cmin_nonneg", "decide", "evaluate", "expand", "find_counterexample",
    "isolate_roots", "numeric_min", "pqk", "sturm_root_count", "verify",
]
