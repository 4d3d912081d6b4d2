"""Randomized MoV experiments over generator models, sizes and solutions."""

from __future__ import annotations

import csv
import io
import time
import zlib
from dataclasses import astuple, dataclass, fields

import numpy as np

from .generators import generate, model_label, parse_model
from .mov import DESTRUCTIVE
from .mov_borda import mov_borda_constructive
from .solutions import winners

CSV_VERSION = "wtmov-experiment v1"


@dataclass(frozen=True)
class ExperimentRecord:
    model: str
    m: int
    n: int
    solution: str
    avg_winners: float
    avg_argmax: float
    avg_distinct: float
    avg_max_mov: float
    tournaments: int
    seed: int


class TimeLimitExceeded(RuntimeError):
    def __init__(self, records):
        self.records = records
        super().__init__(f"time limit hit after {len(records)} rows")


def cell_seed(seed: int, model: str, m: int, n: int, index: int) -> np.random.SeedSequence:
    """Seed of one replicate; independent of grid order, so shards reproduce it."""
    key = zlib.crc32(model.encode())
    return np.random.SeedSequence(seed, spawn_key=(key, m, n, index))


def tournament_stats(T, solution: str, constructive_borda: bool = False) -> tuple[int, int, int, int]:
    """(winners, argmax count, distinct values, max MoV) for one tournament."""
    W = sorted(winners(T, solution))
    values = [DESTRUCTIVE[solution](T, x).value for x in W]
    if constructive_borda and solution == "BO":
        values += [mov_borda_constructive(T, x).value for x in range(T.m) if x not in W]
    top = max(values)
    return len(W), values.count(top), len(set(values)), top


def run_cell(model: str, m: int, n: int, count: int, solutions, seed: int,
             constructive_borda: bool = False) -> list[ExperimentRecord]:
    name, params = parse_model(model)
    label = model_label(name, params)
    sums = {S: np.zeros(4) for S in solutions}
    for i in range(count):
        T = generate(label, m, n, seed=cell_seed(seed, label, m, n, i))
        for S in solutions:
            sums[S] += tournament_stats(T, S, constructive_borda)
    return [ExperimentRecord(label, m, n, S, *(round(float(v) / count, 6) for v in sums[S]),
                             count, seed) for S in solutions]


def run_grid(models, ms, ns, count: int, solutions, seed: int, constructive_borda: bool = False,
             time_limit: float | None = None, on_rows=None) -> list[ExperimentRecord]:
    """All cells in canonical (model, m, n) order; ``on_rows`` sees each finished cell."""
    start = time.monotonic()
    records: list[ExperimentRecord] = []
    for model in models:
        for m in ms:
            for n in ns:
                if time_limit is not None and time.monotonic() - start > time_limit:
                    raise TimeLimitExceeded(records)
                rows = run_cell(model, m, n, count, solutions, seed, constructive_borda)
                records += rows
                if on_rows:
                    on_rows(rows)
    return records


HEADER = [f.name for f in fields(ExperimentRecord)]


def records_csv(records) -> str:
    buf = io.StringIO()
    buf.write(f"# {CSV_VERSION}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for r in records:
        w.writerow(astuple(r))
    return buf.getvalue()


def plot_data_csv(records) -> str:
    """Long format: one row per (model, m, n, solution, statistic)."""
    buf = io.StringIO()
    buf.write(f"# {CSV_VERSION} plot-data\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["model", "m", "n", "solution", "statistic", "value"])
    for r in records:
        for stat in ("avg_winners", "avg_argmax", "avg_distinct", "avg_max_mov"):
            w.writerow([r.model, r.m, r.n, r.solution, stat, getattr(r, stat)])
    return buf.getvalue()


def read_records(text: str) -> list[ExperimentRecord]:
    lines = [l for l in text.splitlines() if not l.startswith("#")]
    out = []
    for row in csv.DictReader(lines):
        out.append(ExperimentRecord(row["model"], int(row["m"]), int(row["n"]), row["solution"],
                                    float(row["avg_winners"]), float(row["avg_argmax"]),
                                    float(row["avg_distinct"]), float(row["avg_max_mov"]),
                                    int(row["tournaments"]), int(row["seed"])))
    return out
