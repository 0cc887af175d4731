"""Multiplicative Lie algebra structures on finite groups."""

from ._core import (
    Group,
    MlaError,
    abelian_bracket_oracle,
    automorphisms,
    build_extension,
    catalog,
    check_axioms,
    check_identities,
    class2_report,
    combine,
    enumerate_stars,
    family,
    improper_star,
    run_cli,
    series,
    trivial_star,
    validate_group,
)

__all__ = [
    "Group",
    "MlaError",
    "abelian_bracket_oracle",
    "automorphisms",
    "build_extension",
    "catalog",
    "check_axioms",
    "check_identities",
    "class2_report",
    "combine",
    "enumerate_stars",
    "family",
    "improper_star",
    "run_cli",
    "series",
    "trivial_star",
    "validate_group",
]
