"""
Checking axioms on random tournaments
=====================================

Monotonicity holds for all three solutions.  Transfer-monotonicity holds
for Borda but random search finds counterexamples for Split Cycle and,
less often, for the weighted Uncovered Set.
"""

from wtmov.analysis import (check_degree_consistency, search_transfer_violation,
                            transfer)
from wtmov.solutions import winners
from wtmov import example_tournament

for S in ("BO", "SC", "wUC"):
    hit = search_transfer_violation(S, 1000, seed=0)
    if hit is None:
        print(f"{S}: no transfer violation in 1000 trials")
        continue
    trial, T, (a, b, c) = hit
    print(f"{S}: trial {trial}, a={a} b={b} c={c}")
    print(T.w)
    print("  winners before:", sorted(winners(T, S)))
    print("  winners after: ", sorted(winners(transfer(T, a, b, c), S)))

# MoV does not follow the Borda score order, even on a small example
T = example_tournament()
for S in ("BO", "SC", "wUC"):
    v = check_degree_consistency(S, T)
    print(S, "strict:", v.strict, "equal:", v.equal, "violations:", v.violations)
