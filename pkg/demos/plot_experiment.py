"""
A small randomized experiment
=============================

Average number of winners and the largest MoV across generator models.
The full grid is available as ``wtmov experiment``.
"""

from wtmov.experiment import records_csv, run_grid

records = run_grid(["uniform", "impartial", "mallows"], [5, 8], [10], count=10,
                   solutions=["BO", "SC", "wUC"], seed=0)
for r in records:
    print(f"{r.model:<16} m={r.m} {r.solution:>3} winners={r.avg_winners:5.2f} "
          f"max_mov={r.avg_max_mov:5.2f}")

print(records_csv(records)[:200])
