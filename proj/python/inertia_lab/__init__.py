"""Python access to the inertia_lab C++ core."""

from ._inertia_lab import (
    BudgetError,
    FormatError,
    borel_sphere,
    cohomology,
    compare_grh,
    group_order,
    group_table,
    inertia,
    shuffles,
    transgression_matrix,
)

__all__ = [
    "BudgetError",
    "FormatError",
    "borel_sphere",
    "cohomology",
    "compare_grh",
    "group_order",
    "group_table",
    "inertia",
    "shuffles",
    "transgression_matrix",
]
