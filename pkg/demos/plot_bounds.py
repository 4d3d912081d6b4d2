"""
How large can the margin of victory get?
========================================

Closed-form bounds next to the tournaments that attain them.
"""

from wtmov import mov
from wtmov.analysis import extremal_tournament, mov_bounds

n = 10
for m in (3, 4, 6, 8):
    for S in ("BO", "SC", "wUC"):
        hi, lo = mov_bounds(S, n, m)
        print(f"m={m} {S:>3}: destructive <= {hi}, constructive >= {lo}")

# constructions that reach the bound exactly
cases = [("BO", "destructive", 4), ("BO", "constructive", 5),
         ("SC", "destructive", 6), ("SC", "constructive", 5),
         ("wUC", "destructive", 5)]
for S, direction, m in cases:
    T, x = extremal_tournament(S, direction, n, m)
    hi, lo = mov_bounds(S, n, m)
    value = mov(T, x, S).value
    print(f"{S:>3} {direction:<12} m={m}: mov={value:+d}, bound={hi if value > 0 else lo:+d}")
