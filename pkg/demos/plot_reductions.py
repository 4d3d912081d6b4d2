"""
Hardness reductions
===================

Constructive MoV for Split Cycle encodes minimum dominating set; for wUC
it encodes set cover.  Both are solved exactly here on small instances.
"""

from itertools import combinations

from wtmov.mov_splitcycle import dominating_set_reduction, mov_sc_constructive_exact
from wtmov.mov_wuc import mov_wuc_constructive_exact, set_cover_reduction

# path on 5 vertices: {1, 3} dominates it
r, edges = 5, [(0, 1), (1, 2), (2, 3), (3, 4)]
T = dominating_set_reduction(r, edges)
res = mov_sc_constructive_exact(T, 0)
print(f"dominating set: m={T.m}, n={T.n}, mov(x)={res.value}")

# set cover: [0,1] + [2,3] covers {0,1,2,3}
sets = [[0, 1], [2, 3], [1, 2], [0]]
T = set_cover_reduction(4, sets)
res = mov_wuc_constructive_exact(T, 0)
best = min(k for k in range(1, len(sets) + 1)
           for combo in combinations(sets, k) if set().union(*combo) == {0, 1, 2, 3})
print(f"set cover: m={T.m}, n={T.n}, mov(x)={res.value}, cover size {best}")

# when one element is in no set the cost need not exceed r
T = set_cover_reduction(4, [[1, 2, 3], [2], [1], [1, 3]])
res = mov_wuc_constructive_exact(T, 0)
print(f"uncoverable e0: mov(x)={res.value} via {res.witness.describe(T.labels)}")
