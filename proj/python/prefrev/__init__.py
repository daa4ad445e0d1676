"""Revision of chain preferences by strict partial orders."""

from ._core import (
    Chain,
    GuardExceeded,
    InvalidInput,
    Relation,
    check,
    completions,
    cycle_free_part,
    cyclic_part,
    decisive_completions,
    is_coordinated,
    reference_revise,
    revise,
    run_cli,
    run_suite,
    union_plus,
)

__all__ = [
    "Chain",
    "GuardExceeded",
    "InvalidInput",
    "Relation",
    "check",
    "completions",
    "cycle_free_part",
    "cyclic_part",
    "decisive_completions",
    "is_coordinated",
    "reference_revise",
    "revise",
    "run_cli",
    "run_suite",
    "union_plus",
]
