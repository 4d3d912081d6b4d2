"""Weighted tournaments, margins and reversal functions.

An n-weighted tournament on m alternatives is stored as an m x m integer
matrix ``w`` with ``w[x, y] + w[y, x] == n`` for x != y and a zero diagonal.
Alternatives are dense 0-based indices; human readable names live in an
optional label tuple.  All values are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

# n * m^2 must stay far away from int64 overflow; desk-scale inputs are tiny.
_MAX_PRODUCT = 2**40


class TournamentError(ValueError):
    """Raised when a matrix violates the weighted tournament invariants."""


class ReversalError(ValueError):
    """Raised when a reversal function is malformed or over capacity."""


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.int64, copy=True)
    a.flags.writeable = False
    return a


def _default_labels(m: int) -> tuple[str, ...]:
    if m <= 26:
        return tuple(chr(ord("a") + i) for i in range(m))
    return tuple(f"x{i}" for i in range(m))


@dataclass(frozen=True, eq=False)
class WeightedTournament:
    """An n-weighted tournament.

    :param w: square matrix of non-negative integers.
    :param n: weight shared by every pair.
    :param labels: optional names, one per alternative.
    """

    w: np.ndarray
    n: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        w = np.asarray(self.w)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise TournamentError(f"weight matrix must be square, got shape {w.shape}")
        if not np.issubdtype(w.dtype, np.integer) and w.size:
            if not np.all(np.equal(np.mod(w, 1), 0)):
                raise TournamentError("weights must be integers")
        n = int(self.n)
        m = w.shape[0]
        if m < 1:
            raise TournamentError("a tournament needs at least one alternative")
        if n < 1:
            raise TournamentError("n must be at least 1")
        if n * m * m > _MAX_PRODUCT:
            raise TournamentError("n * m^2 too large for checked integer arithmetic")
        w = _frozen(w)
        if np.any(np.diag(w) != 0):
            raise TournamentError("diagonal must be zero")
        if np.any(w < 0) or np.any(w > n):
            raise TournamentError(f"weights must lie in 0..{n}")
        off = ~np.eye(m, dtype=bool)
        if np.any((w + w.T)[off] != n):
            x, y = np.argwhere((w + w.T != n) & off)[0]
            raise TournamentError(f"w[{x}][{y}] + w[{y}][{x}] != {n}")
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "n", n)
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != m or len(set(labels)) != m:
                raise TournamentError("labels must be m distinct names")
            object.__setattr__(self, "labels", labels)

    @property
    def m(self) -> int:
        return self.w.shape[0]

    @property
    def margins(self) -> np.ndarray:
        """Antisymmetric matrix of margins ``w - w.T``."""
        return self.w - self.w.T

    def names(self) -> tuple[str, ...]:
        return self.labels if self.labels is not None else _default_labels(self.m)

    def index(self, name: str | int) -> int:
        """Resolve a label (or an index given as int or digit string)."""
        if isinstance(name, (int, np.integer)):
            i = int(name)
        else:
            names = self.names()
            if name in names:
                return names.index(name)
            try:
                i = int(name)
            except ValueError:
                raise KeyError(f"unknown alternative {name!r}") from None
        if not 0 <= i < self.m:
            raise KeyError(f"alternative index {i} out of range")
        return i

    def __eq__(self, other):
        if not isinstance(other, WeightedTournament):
            return NotImplemented
        return (self.n == other.n and self.w.shape == other.w.shape
                and bool(np.array_equal(self.w, other.w))
                and self.labels == other.labels)

    def __hash__(self):
        return hash((self.n, self.w.tobytes(), self.w.shape, self.labels))

    def __repr__(self):
        return f"WeightedTournament(m={self.m}, n={self.n}, w={self.w.tolist()})"

    @classmethod
    def from_upper(cls, m: int, n: int, upper: Mapping[tuple[int, int], int],
                   labels: Sequence[str] | None = None) -> "WeightedTournament":
        """Build from weights of the pairs ``(x, y)``; missing pairs are rejected.

        Either orientation of a pair may be given; the complement is forced.
        """
        w = np.zeros((m, m), dtype=np.int64)
        seen = set()
        for (x, y), v in upper.items():
            key = (min(x, y), max(x, y))
            if key in seen:
                raise TournamentError(f"pair {key} given twice")
            seen.add(key)
            w[x, y] = v
            w[y, x] = n - v
        if len(seen) != m * (m - 1) // 2:
            raise TournamentError("every pair needs a weight")
        return cls(w, n, labels)


@dataclass(frozen=True, eq=False)
class ReversalFunction:
    """An antisymmetric change ``r`` to the weight matrix.

    ``r[x, y] > 0`` moves weight from ``y`` over ``x`` to ``x`` over ``y``.
    """

    r: np.ndarray

    def __post_init__(self):
        r = _frozen(self.r)
        if r.ndim != 2 or r.shape[0] != r.shape[1]:
            raise ReversalError("reversal matrix must be square")
        if np.any(r != -r.T):
            raise ReversalError("reversal matrix must be antisymmetric")
        object.__setattr__(self, "r", r)

    @property
    def m(self) -> int:
        return self.r.shape[0]

    @property
    def size(self) -> int:
        return reversal_size(self)

    @classmethod
    def zero(cls, m: int) -> "ReversalFunction":
        return cls(np.zeros((m, m), dtype=np.int64))

    @classmethod
    def from_entries(cls, m: int, entries: Mapping[tuple[int, int], int]
                     ) -> "ReversalFunction":
        """``{(x, y): v}`` sets ``r[x, y] += v`` and ``r[y, x] -= v``."""
        r = np.zeros((m, m), dtype=np.int64)
        for (x, y), v in entries.items():
            if x == y:
                raise ReversalError("reversal on the diagonal")
            r[x, y] += v
            r[y, x] -= v
        return cls(r)

    def entries(self) -> list[tuple[int, int, int]]:
        """Positive entries ``(x, y, r[x, y])`` in row-major order."""
        return [(int(x), int(y), int(self.r[x, y])) for x, y in np.argwhere(self.r > 0)]

    def __neg__(self):
        return ReversalFunction(-self.r)

    def __add__(self, other: "ReversalFunction"):
        return ReversalFunction(self.r + other.r)

    def __eq__(self, other):
        if not isinstance(other, ReversalFunction):
            return NotImplemented
        return bool(np.array_equal(self.r, other.r))

    def __hash__(self):
        return hash(self.r.tobytes())

    def __repr__(self):
        body = ", ".join(f"R({x},{y})={v}" for x, y, v in self.entries())
        return f"ReversalFunction({body})"

    def describe(self, labels: Sequence[str]) -> str:
        if not self.entries():
            return "{}"
        return ", ".join(f"R({labels[x]},{labels[y]})={v}" for x, y, v in self.entries())


@dataclass(frozen=True)
class MarginGraph:
    """Positive-margin edges ``{(x, y): margin}`` of a tournament."""

    m: int
    edges: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def successors(self, x: int) -> list[int]:
        return [y for (u, y) in self.edges if u == x]


@dataclass(frozen=True)
class MovResult:
    """Signed margin of victory with a minimum witness.

    ``value > 0`` for winners (size of a minimum destructive reversal set),
    ``value < 0`` for non-winners (minus the size of a minimum constructive one).
    """

    value: int
    witness: ReversalFunction
    solver: str

    def __post_init__(self):
        if abs(self.value) != self.witness.size:
            raise ValueError(f"|value| {abs(self.value)} != witness size {self.witness.size}")


def _check_pair(T: WeightedTournament, x: int, y: int):
    if not (0 <= x < T.m and 0 <= y < T.m):
        raise IndexError(f"alternative out of range for m={T.m}")
    if x == y:
        raise ValueError("margin needs two distinct alternatives")


def margin(T: WeightedTournament, x: int, y: int) -> int:
    _check_pair(T, x, y)
    return int(T.w[x, y] - T.w[y, x])


def margin_graph(T: WeightedTournament) -> MarginGraph:
    mg = T.margins
    edges = {(int(x), int(y)): int(mg[x, y]) for x, y in np.argwhere(mg > 0)}
    return MarginGraph(T.m, edges)


def reversal_size(R: ReversalFunction) -> int:
    return int(R.r[R.r > 0].sum())


def check_reversal(T: WeightedTournament, R: ReversalFunction):
    if R.m != T.m:
        raise ReversalError(f"reversal is {R.m}x{R.m}, tournament has m={T.m}")
    w2 = T.w + R.r
    if np.any(w2 < 0) or np.any(w2 > T.n):
        x, y = np.argwhere((w2 < 0) | (w2 > T.n))[0]
        raise ReversalError(f"capacity violated at ({x},{y}): {T.w[x, y]} + {R.r[x, y]}")


def apply_reversal(T: WeightedTournament, R: ReversalFunction) -> WeightedTournament:
    check_reversal(T, R)
    return WeightedTournament(T.w + R.r, T.n, T.labels)


def remove_alternative(T: WeightedTournament, x: int) -> WeightedTournament:
    """Delete ``x``; indices above ``x`` shift down by one, labels follow."""
    if T.m < 2:
        raise ValueError("cannot remove the only alternative")
    if not 0 <= x < T.m:
        raise IndexError(f"alternative {x} out of range")
    keep = [i for i in range(T.m) if i != x]
    labels = None if T.labels is None else tuple(T.labels[i] for i in keep)
    return WeightedTournament(T.w[np.ix_(keep, keep)], T.n, labels)


def is_condorcet_winner(T: WeightedTournament, x: int) -> bool:
    mg = T.margins[x]
    return bool(all(mg[y] > 0 for y in range(T.m) if y != x))


def is_condorcet_loser(T: WeightedTournament, x: int) -> bool:
    mg = T.margins[x]
    return bool(all(mg[y] < 0 for y in range(T.m) if y != x))


def permute(T: WeightedTournament, perm: Iterable[int]) -> WeightedTournament:
    """Relabel so that new alternative ``i`` is old alternative ``perm[i]``."""
    perm = list(perm)
    labels = None if T.labels is None else tuple(T.labels[i] for i in perm)
    return WeightedTournament(T.w[np.ix_(perm, perm)], T.n, labels)


# Text format: "m n", m rows, '#' comments, optional "labels: ..." line.

class ParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def parse_tournament(text: str) -> WeightedTournament:
    header = None
    rows: list[list[int]] = []
    labels = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("labels:"):
            if labels is not None:
                raise ParseError("duplicate labels line", lineno)
            labels = line[len("labels:"):].split()
            continue
        try:
            nums = [int(t) for t in line.split()]
        except ValueError:
            raise ParseError(f"expected integers, got {line!r}", lineno) from None
        if header is None:
            if len(nums) != 2:
                raise ParseError("header must be 'm n'", lineno)
            header = nums
            continue
        if len(nums) != header[0]:
            raise ParseError(f"expected {header[0]} entries, got {len(nums)}", lineno)
        if len(rows) == header[0]:
            raise ParseError("too many rows", lineno)
        rows.append(nums)
    if header is None:
        raise ParseError("empty input")
    m, n = header
    if len(rows) != m:
        raise ParseError(f"expected {m} rows, got {len(rows)}")
    try:
        return WeightedTournament(np.array(rows, dtype=np.int64).reshape(m, m), n, labels)
    except TournamentError as e:
        raise ParseError(str(e)) from None


def format_tournament(T: WeightedTournament, comments: Sequence[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"{T.m} {T.n}")
    width = len(str(T.n))
    for row in T.w:
        out.append(" ".join(str(int(v)).rjust(width) for v in row))
    if T.labels is not None:
        out.append("labels: " + " ".join(T.labels))
    return "\n".join(out) + "\n"


def example_tournament() -> WeightedTournament:
    """The four-alternative, 10-weighted running example (a, b, c, d)."""
    return WeightedTournament.from_upper(4, 10, {
        (0, 1): 9, (0, 2): 8, (0, 3): 4, (1, 2): 8, (1, 3): 3, (2, 3): 7,
    }, labels=("a", "b", "c", "d"))
