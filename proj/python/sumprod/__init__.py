"""Sum-product quantities over prime fields (bindings to the C++ core)."""

import json

from ._sumprod import (
    SumprodError,
    collinear_quadruples,
    collinear_triples,
    combine,
    cross_ratio_energy,
    cross_ratio_set,
    energy,
    eval_expr,
    eval_size_expr,
    fourfold_coverage,
    incidence_histogram,
    is_prime,
    make_family,
    omega_set,
    pinned_ratio_energy,
    pinned_ratios,
    quad_identity,
    t_fn,
    teq_counts,
)
from . import _sumprod


def check_registry():
    return json.loads(_sumprod._check_registry())


def run_check(check_id, p, a, params=None, seed=0):
    """Run one registered check; returns the JSONL record as a dict."""
    return json.loads(_sumprod._run_check(check_id, p, list(a), json.dumps(params or {}), seed))


def run_sweep(spec, jobs=1):
    """Run an experiment sweep. `spec` is a dict; returns {"spec", "rows"}."""
    return json.loads(_sumprod._run_sweep(json.dumps(spec), jobs))


__all__ = [
    "SumprodError",
    "check_registry",
    "collinear_quadruples",
    "collinear_triples",
    "combine",
    "cross_ratio_energy",
    "cross_ratio_set",
    "energy",
    "eval_expr",
    "eval_size_expr",
    "fourfold_coverage",
    "incidence_histogram",
    "is_prime",
    "make_family",
    "omega_set",
    "pinned_ratio_energy",
    "pinned_ratios",
    "quad_identity",
    "run_check",
    "run_sweep",
    "t_fn",
    "teq_counts",
]
