"""Dickson invariants over F_p, primitive derivations and Koszul homology.

The heavy lifting lives in the compiled extension ``dicksonpy._core``; this
package re-exports it and adds dict-returning convenience wrappers around the
JSON report interface.
"""

import json as _json

from dicksonpy._core import (
    SCHEMA_VERSION,
    AbstractRing,
    DicksonFrame,
    DicksonPoly,
    FalsificationError,
    GradedHomologyReport,
    KoszulInstance,
    MargolisReport,
    Poly,
    PrimeField,
    QParseError,
    ResourceError,
    StirlingTable,
    SumCoefficients,
    VerificationResult,
    Witness,
    __version__,
    chain_rule_st,
    custom_entry_json,
    default_config_json,
    delta_iterate_closed,
    dickson_margolis_check,
    dump_boundary_matrix,
    encode_in_ratio_variables,
    expected_quotient_hilbert,
    homology_dims,
    jacobian_det,
    koszul_entry_status,
    koszul_entry_text,
    normalized_delta,
    report_text,
    run_cell_json,
    run_grid_json,
    st_delta,
    st_iterate,
    st_iterate_closed,
    tuan_entry_json,
    tuan_instance,
    verify_chain_rule,
    verify_global_properties,
    verify_invariant_ratios,
    verify_kernel_family,
    verify_ratio_action,
)

__all__ = [
    "SCHEMA_VERSION",
    "AbstractRing",
    "DicksonFrame",
    "DicksonPoly",
    "FalsificationError",
    "GradedHomologyReport",
    "KoszulInstance",
    "MargolisReport",
    "Poly",
    "PrimeField",
    "QParseError",
    "ResourceError",
    "StirlingTable",
    "SumCoefficients",
    "VerificationResult",
    "Witness",
    "__version__",
    "chain_rule_st",
    "custom_entry_json",
    "default_config",
    "default_config_json",
    "delta_iterate_closed",
    "dickson_margolis_check",
    "dump_boundary_matrix",
    "encode_in_ratio_variables",
    "expected_quotient_hilbert",
    "homology_dims",
    "jacobian_det",
    "koszul_entry_status",
    "koszul_entry_text",
    "koszul_tuan",
    "normalized_delta",
    "report_text",
    "run_cell",
    "run_cell_json",
    "run_grid_json",
    "st_delta",
    "st_iterate",
    "st_iterate_closed",
    "tuan_entry_json",
    "tuan_instance",
    "verify",
    "verify_chain_rule",
    "verify_global_properties",
    "verify_invariant_ratios",
    "verify_kernel_family",
    "verify_ratio_action",
]


def default_config():
    """The default verification config as a dict."""
    return _json.loads(default_config_json())


def run_cell(p, n, i, max_m=0):
    """Identity checks and iterate tables for one (p, n, i) cell, as a dict."""
    return _json.loads(run_cell_json(p, n, i, max_m))


def koszul_tuan(p, n, j, D):
    """Truncated Koszul homology report for the y_s^(p^j) instance, as a dict."""
    return _json.loads(tuan_entry_json(p, n, j, D))


def verify(p=None, n=None, i=None, *, max_m=0, seeds=None, koszul_D=0,
           max_dense_terms=0):
    """Run the verification grid and return the full report as a dict.

    With all of p, n and i given, runs exactly that cell; with a subset,
    filters the default grid. Raises ValueError when the restriction matches
    nothing.
    """
    cfg = default_config()
    if p is not None and n is not None and i is not None:
        cfg["grid"] = [{"p": p, "n": n, "i": i}]
    elif (p, n, i) != (None, None, None):
        cfg["grid"] = [
            c for c in cfg["grid"]
            if (p is None or c["p"] == p)
            and (n is None or c["n"] == n)
            and (i is None or c["i"] == i)
        ]
        if not cfg["grid"]:
            raise ValueError(
                "no default grid cell matches the restriction; "
                "give p, n and i together to run an explicit cell")
    if max_m:
        cfg["max_m"] = max_m
    if seeds is not None:
        cfg["seeds"] = list(seeds)
    if koszul_D:
        cfg["koszul_D"] = koszul_D
    if max_dense_terms:
        cfg["max_dense_terms"] = max_dense_terms
    return _json.loads(run_grid_json(_json.dumps(cfg)))
