"""Margin of victory for weighted tournament solutions."""

from .core import (
    MovResult,
    ParseError,
    ReversalError,
    ReversalFunction,
    TournamentError,
    WeightedTournament,
    apply_reversal,
    example_tournament,
    format_tournament,
    margin,
    margin_graph,
    parse_tournament,
)
from .mov import mov, mov_values
from .oracle import BudgetExhausted, GuardError, brute_force_mov
from .solutions import (
    SOLUTION_NAMES,
    borda_scores,
    borda_winners,
    split_cycle_winners,
    winners,
    wuc_winners,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExhausted",
    "GuardError",
    "MovResult",
    "ParseError",
    "ReversalError",
    "ReversalFunction",
    "SOLUTION_NAMES",
    "TournamentError",
    "WeightedTournament",
    "apply_reversal",
    "borda_scores",
    "borda_winners",
    "brute_force_mov",
    "example_tournament",
    "format_tournament",
    "margin",
    "margin_graph",
    "mov",
    "mov_values",
    "parse_tournament",
    "split_cycle_winners",
    "winners",
    "wuc_winners",
]
