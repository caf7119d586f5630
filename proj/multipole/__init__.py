"""Cubic multipole state analysis: constructors, Tait coloring state sets,
counting formulas, isomorph-free catalogs, and decision procedures."""

from ._multipole import (
    Multipole,
    MultipoleError,
    admissible_states,
    catalog,
    certificate,
    check_closed,
    check_complete,
    check_reducible,
    check_separable,
    cut_edge,
    cycle_count,
    forest_count,
    is_colorable,
    is_connected,
    is_forest,
    junction,
    make_cycle,
    make_free_edge,
    make_minimal,
    make_path_tree,
    make_tree,
    parse,
    rho,
    run_acceptance,
    serialize,
    sigma,
    states,
    tree_count,
    validate,
)

__all__ = [
    "Multipole",
    "MultipoleError",
    "admissible_states",
    "catalog",
    "certificate",
    "check_closed",
    "check_complete",
    "check_reducible",
    "check_separable",
    "cut_edge",
    "cycle_count",
    "forest_count",
    "is_colorable",
    "is_connected",
    "is_forest",
    "junction",
    "make_cycle",
    "make_free_edge",
    "make_minimal",
    "make_path_tree",
    "make_tree",
    "parse",
    "rho",
    "run_acceptance",
    "serialize",
    "sigma",
    "states",
    "tree_count",
    "validate",
]
