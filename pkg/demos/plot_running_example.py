"""
Margins of victory on a four-alternative tournament
===================================================

Winners of Borda, Split Cycle and weighted Uncovered Set on a small
10-weighted tournament, with every alternative's MoV and a witness.
"""

import numpy as np

from wtmov import example_tournament, mov, winners
from wtmov.core import apply_reversal
from wtmov.solutions import borda_scores

T = example_tournament()
names = T.labels
print(T.w)
print("borda scores:", dict(zip(names, borda_scores(T).tolist())))

# each solution picks a different winning set
for S in ("BO", "SC", "wUC"):
    print(S, "winners:", [names[x] for x in sorted(winners(T, S))])

# positive MoV: reversals needed to knock a winner out;
# negative MoV: minus the reversals needed to make a loser win
table = np.zeros((3, T.m), dtype=int)
for i, S in enumerate(("BO", "SC", "wUC")):
    for x in range(T.m):
        res = mov(T, x, S)
        table[i, x] = res.value
        # applying the witness must flip membership
        flipped = apply_reversal(T, res.witness)
        assert (x in winners(flipped, S)) != (x in winners(T, S))
        print(f"{S:>3} {names[x]}: {res.value:+d}  via {res.witness.describe(names)}")

print(table)
