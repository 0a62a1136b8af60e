"""Maximum dissociation sets in trees.

Counting DP over rooted trees, a brute-force oracle, extremal subcubic
families, bound checks in exact arithmetic, and the exhaustive survey.
"""

from dissoc._core import (
    MdsEnumerator,
    Tree,
    TreeError,
    attach_p5,
    attach_pendant_edge,
    brute_force,
    build_chain,
    build_extremal,
    build_T,
    build_T1,
    build_T2,
    canonical_code,
    chain_family,
    enumerate_mds,
    enumerate_subcubic,
    enumerate_trees,
    is_dissociation_set,
    max_degree,
    parse_tree,
    phi,
    phi_bound_checks,
    phi_bound_sharp,
    psi,
    psi_lower,
    psi_upper_subcubic,
    random_subcubic,
    remove_leaf,
    render_report,
    root_profile,
    run_survey,
    seq_f,
    seq_g,
    serialize_tree,
    tau3,
)

__all__ = [
    "MdsEnumerator",
    "Tree",
    "TreeError",
    "attach_p5",
    "attach_pendant_edge",
    "brute_force",
    "build_chain",
    "build_extremal",
    "build_T",
    "build_T1",
    "build_T2",
    "canonical_code",
    "chain_family",
    "enumerate_mds",
    "enumerate_subcubic",
    "enumerate_trees",
    "is_dissociation_set",
    "max_degree",
    "parse_tree",
    "phi",
    "phi_bound_checks",
    "phi_bound_sharp",
    "psi",
    "psi_lower",
    "psi_upper_subcubic",
    "random_subcubic",
    "remove_leaf",
    "render_report",
    "root_profile",
    "run_survey",
    "seq_f",
    "seq_g",
    "serialize_tree",
    "tau3",
]
