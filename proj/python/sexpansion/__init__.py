"""Semigroup expansions of Lie algebras, exact arithmetic throughout.

Semigroup tables are lists of rows with 0-based entries. Algebras are given
by built-in name such as so3, so(3,1), sl2, heisenberg3, abelian2, or sums
like "sl2+so3".
"""

import json

from ._sexp import (
    Error,
    certify_nonsimple,
    discover,
    enumerate_semigroups,
    expand_json,
    expanded_inertia,
    is_semigroup,
    killing_inertia,
    mk_matrix,
    predict_character,
    predict_signature,
    solve_phq,
    table_one,
)


def expand(table, algebra, reduce_zero=False):
    """Expanded (or 0_S-reduced) algebra as a JSON document."""
    return json.loads(expand_json(table, algebra, reduce_zero))


__all__ = [
    "Error",
    "certify_nonsimple",
    "discover",
    "enumerate_semigroups",
    "expand",
    "expanded_inertia",
    "is_semigroup",
    "killing_inertia",
    "mk_matrix",
    "predict_character",
    "predict_signature",
    "solve_phq",
    "table_one",
]
