"""Route a margin-of-victory query to the right solver."""

from __future__ import annotations

from .core import MovResult, WeightedTournament
from .mov_borda import mov_borda_constructive, mov_borda_destructive
from .mov_splitcycle import mov_sc_constructive_exact, mov_sc_destructive
from .mov_wuc import mov_wuc_constructive_exact, mov_wuc_destructive
from .oracle import brute_force_mov
from .solutions import winners

DESTRUCTIVE = {"BO": mov_borda_destructive, "SC": mov_sc_destructive, "wUC": mov_wuc_destructive}
CONSTRUCTIVE_EXACT = {"SC": mov_sc_constructive_exact, "wUC": mov_wuc_constructive_exact}


def mov(T: WeightedTournament, x: int, solution: str, method: str = "auto",
        oracle: bool = False) -> MovResult:
    """Signed MoV of ``x``.

    Polynomial solvers handle Borda and destructive SC/wUC.  Constructive
    SC/wUC go through the exact solvers with ``method`` passed along.  With
    ``oracle=True`` everything is answered by brute force instead.
    """
    if oracle:
        return brute_force_mov(T, x, solution)
    if x in winners(T, solution):
        return DESTRUCTIVE[solution](T, x)
    if solution == "BO":
        return mov_borda_constructive(T, x)
    return CONSTRUCTIVE_EXACT[solution](T, x, method=method)


def mov_values(T: WeightedTournament, solution: str, method: str = "auto") -> list[int]:
    return [mov(T, x, solution, method).value for x in range(T.m)]
