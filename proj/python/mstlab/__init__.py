"""Expected MST length of the complete graph: exact values, constants, simulation.

Exact rationals are returned as ``fractions.Fraction``; structured results as dicts.
"""

import json
from fractions import Fraction

from . import _mstlab
from ._mstlab import (
    DomainError,
    Error,
    MethodDisagreement,
    PrecisionError,
    QuadratureError,
    ResourceError,
    TruncationError,
    big_F,
    c1,
    f_of_lambda,
    gaussian_identity_residual,
    mst_length,
    psi,
    wright_constants,
)

__all__ = [
    "DomainError", "Error", "MethodDisagreement", "PrecisionError", "QuadratureError",
    "ResourceError", "TruncationError", "a_term", "b_term", "big_F", "brute_force_expected_components",
    "c1", "connected_graph_counts", "constants", "coupled_exp_uniform_diff",
    "estimate_mean_mst", "exact_expected_mst", "expected_component_count", "f_of_lambda",
    "gaussian_identity_residual", "gnp_component_census", "mst_length", "psi", "run_acceptance",
    "wright_constants",
]


def _fraction(node):
    return Fraction(node["fraction"])


def connected_graph_counts(k_max):
    """rows[k][l] = number of connected labeled graphs with k vertices and l edges."""
    return [[int(c) for c in row] for row in _mstlab.connected_graph_counts(k_max)]


def b_term(n, k, j):
    return Fraction(_mstlab.b_term(n, k, j))


def a_term(n, k, j):
    return Fraction(_mstlab.a_term(n, k, j))


def exact_expected_mst(n, max_n=30):
    raw = json.loads(_mstlab.exact_expected_mst(n, max_n))
    return {
        "n": raw["n"],
        "total": _fraction(raw["total"]),
        "tree": _fraction(raw["tree"]),
        "unicyclic": _fraction(raw["unicyclic"]),
        "complex": _fraction(raw["complex"]),
    }


def expected_component_count(n, p):
    return Fraction(_mstlab.expected_component_count(n, str(Fraction(p))))


def brute_force_expected_components(n, p):
    return Fraction(_mstlab.brute_force_expected_components(n, str(Fraction(p))))


def constants(series_terms=1000, tail=True, lambda_integral=False):
    return json.loads(_mstlab.constants(series_terms, tail, lambda_integral))


def estimate_mean_mst(n, reps, model="uniform", seed=1):
    return json.loads(_mstlab.estimate_mean_mst(n, reps, model, seed))


def coupled_exp_uniform_diff(n, reps, seed=1):
    return json.loads(_mstlab.coupled_exp_uniform_diff(n, reps, seed))


def gnp_component_census(n, lam, reps, seed=1):
    return json.loads(_mstlab.gnp_component_census(n, lam, reps, seed))


def run_acceptance(criteria=(), mst_reps=1_000_000, census_reps=1_000_000):
    return json.loads(_mstlab.run_acceptance(list(criteria), mst_reps, census_reps))
