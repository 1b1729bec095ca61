"""Decision machinery: bounded congruence closure, theory summaries,
finite models and two-variety deductions."""
from .congruence import Congruence, ResourceError, instances, saturate
from .decide import Budget, Fails, Holds, Outcome, Unknown, decide, relatively_free_model
from .deduction import Deduction, find_deduction, verify_deduction
from .models import (
    FiniteSemigroup,
    NotAssociative,
    check_model,
    find_countermodel,
    left_zero2,
    models_of,
    satisfies,
    semigroups_of_order,
    semilattice2,
)
from .summary import ZERO, TheorySummary, theory_summary

__all__ = [
    "Budget", "Congruence", "Deduction", "Fails", "FiniteSemigroup", "Holds",
    "NotAssociative", "Outcome", "ResourceError", "TheorySummary", "Unknown", "ZERO",
    "check_model", "decide", "find_countermodel", "find_deduction", "instances",
    "left_zero2", "models_of", "relatively_free_model", "satisfies", "saturate",
    "semigroups_of_order", "semilattice2", "theory_summary", "verify_deduction",
]
