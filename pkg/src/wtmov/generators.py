"""Random weighted tournaments.

Two direct models orient each pair and then weight it; four profile models
sample n voters and count pairwise preferences.  All take ``seed`` as an int,
a ``numpy.random.SeedSequence`` or a ``numpy.random.Generator``.

Stream splitting: replicate ``i`` of a batch seeded with ``s`` uses
``default_rng(SeedSequence(s, spawn_key=(i,)))``, so any single replicate can
be regenerated without the ones before it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import WeightedTournament

DEFAULT_P = 0.55
DEFAULT_PHI = 0.95
# arbitrary: the replication parameter used for the original experiments is unknown
DEFAULT_ALPHA = 10


def rng_for(seed, index: int | None = None) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    if index is None:
        return np.random.default_rng(seed)
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


@dataclass(frozen=True)
class PreferenceProfile:
    """``relations[i, a, b]`` is True iff voter i prefers a to b."""

    relations: np.ndarray

    def __post_init__(self):
        rel = np.asarray(self.relations, dtype=bool)
        if rel.ndim != 3 or rel.shape[1] != rel.shape[2]:
            raise ValueError("relations must have shape (voters, m, m)")
        m = rel.shape[1]
        off = ~np.eye(m, dtype=bool)
        if np.any(rel[:, ~off]) or np.any((rel ^ rel.transpose(0, 2, 1))[:, off] == False):  # noqa: E712
            raise ValueError("each voter needs a complete antisymmetric relation")
        rel = rel.copy()
        rel.flags.writeable = False
        object.__setattr__(self, "relations", rel)

    @property
    def voters(self) -> int:
        return self.relations.shape[0]

    @classmethod
    def from_rankings(cls, rankings) -> "PreferenceProfile":
        """Rankings list alternatives best first."""
        rankings = np.asarray(rankings, dtype=np.int64)
        nv, m = rankings.shape
        pos = np.empty_like(rankings)
        rows = np.arange(nv)[:, None]
        pos[rows, rankings] = np.arange(m)[None, :]
        return cls(pos[:, :, None] < pos[:, None, :])

    def is_transitive(self) -> bool:
        rel = self.relations.astype(np.int64)
        # a>b and b>c without a>c shows up as a positive entry of rel@rel minus rel
        two_step = np.einsum("vab,vbc->vac", rel, rel) > 0
        return not np.any(two_step & ~self.relations & ~np.eye(rel.shape[1], dtype=bool))


def profile_to_tournament(profile: PreferenceProfile) -> WeightedTournament:
    if profile.voters < 1:
        raise ValueError("profile needs at least one voter")
    return WeightedTournament(profile.relations.sum(axis=0), profile.voters)


def _rankings_to_tournament(rankings: np.ndarray, m: int) -> WeightedTournament:
    n = len(rankings)
    if m == 1:
        return WeightedTournament(np.zeros((1, 1), dtype=np.int64), n)
    return profile_to_tournament(PreferenceProfile.from_rankings(rankings))


def _weighted_orientation(m: int, n: int, forward: np.ndarray, rng) -> WeightedTournament:
    """forward[k] orients pair k (lexicographic i<j) as i->j; winner weight uniform."""
    w = np.zeros((m, m), dtype=np.int64)
    iu, ju = np.triu_indices(m, 1)
    heavy = rng.integers((n + 1) // 2, n, size=len(iu), endpoint=True)
    wij = np.where(forward, heavy, n - heavy)
    w[iu, ju] = wij
    w[ju, iu] = n - wij
    return WeightedTournament(w, n)


def uniform_random(m: int, n: int, seed=None) -> WeightedTournament:
    rng = rng_for(seed)
    k = m * (m - 1) // 2
    forward = rng.random(k) < 0.5
    return _weighted_orientation(m, n, forward, rng)


def _check_p(p: float):
    if not 0.5 <= p <= 1:
        raise ValueError(f"p must lie in [0.5, 1], got {p}")


def condorcet_noise_direct(m: int, n: int, p: float = DEFAULT_P, seed=None) -> WeightedTournament:
    """Each pair follows the index order with probability p."""
    _check_p(p)
    rng = rng_for(seed)
    forward = rng.random(m * (m - 1) // 2) < p
    return _weighted_orientation(m, n, forward, rng)


def condorcet_noise_voters(m: int, n: int, p: float = DEFAULT_P, seed=None) -> WeightedTournament:
    """n voters, each pair ordered independently, agreeing with index order w.p. p."""
    _check_p(p)
    rng = rng_for(seed)
    iu, ju = np.triu_indices(m, 1)
    agree = rng.random((n, len(iu))) < p
    rel = np.zeros((n, m, m), dtype=bool)
    rel[:, iu, ju] = agree
    rel[:, ju, iu] = ~agree
    if m == 1:
        return WeightedTournament(np.zeros((1, 1), dtype=np.int64), n)
    return profile_to_tournament(PreferenceProfile(rel))


def impartial_culture(m: int, n: int, seed=None) -> WeightedTournament:
    rng = rng_for(seed)
    rankings = np.argsort(rng.random((n, m)), axis=1)
    return _rankings_to_tournament(rankings, m)


def mallows_rankings(m: int, n: int, phi: float, rng) -> np.ndarray:
    """Repeated insertion: item i lands at position j <= i w.p. ~ phi^(i-j)."""
    out = np.empty((n, m), dtype=np.int64)
    for v in range(n):
        ranking: list[int] = []
        for i in range(m):
            weights = phi ** np.arange(i, -1, -1, dtype=float)
            j = int(rng.choice(i + 1, p=weights / weights.sum()))
            ranking.insert(j, i)
        out[v] = ranking
    return out


def mallows(m: int, n: int, phi: float = DEFAULT_PHI, seed=None) -> WeightedTournament:
    if not 0 < phi <= 1:
        raise ValueError(f"phi must lie in (0, 1], got {phi}")
    rng = rng_for(seed)
    return _rankings_to_tournament(mallows_rankings(m, n, phi, rng), m)


def urn_rankings(m: int, n: int, alpha: int, rng) -> np.ndarray:
    """Polya-Eggenberger urn, drawn lazily.

    After t draws the urn holds the m! initial rankings plus alpha copies of
    each earlier draw, so the next draw copies an earlier one with
    probability alpha*t / (m! + alpha*t) and is a fresh uniform ranking
    otherwise.
    """
    total = float(math.factorial(m))
    out = np.empty((n, m), dtype=np.int64)
    for t in range(n):
        reuse = alpha * t
        if reuse and rng.random() < reuse / (total + reuse):
            out[t] = out[int(rng.integers(t))]
        else:
            out[t] = rng.permutation(m)
    return out


def urn(m: int, n: int, alpha: int = DEFAULT_ALPHA, seed=None) -> WeightedTournament:
    if alpha < 0 or int(alpha) != alpha:
        raise ValueError(f"alpha must be a non-negative integer, got {alpha}")
    rng = rng_for(seed)
    return _rankings_to_tournament(urn_rankings(m, n, int(alpha), rng), m)


MODELS = {
    "uniform": (uniform_random, {}),
    "condorcet-direct": (condorcet_noise_direct, {"p": DEFAULT_P}),
    "condorcet-voters": (condorcet_noise_voters, {"p": DEFAULT_P}),
    "impartial": (impartial_culture, {}),
    "mallows": (mallows, {"phi": DEFAULT_PHI}),
    "urn": (urn, {"alpha": DEFAULT_ALPHA}),
}

PROFILE_MODELS = ("condorcet-voters", "impartial", "mallows", "urn")


def parse_model(model: str) -> tuple[str, dict]:
    """``"mallows:phi=0.9"`` -> ``("mallows", {"phi": 0.9})`` with defaults filled in."""
    name, _, rest = model.partition(":")
    if name not in MODELS:
        raise ValueError(f"unknown model {name!r}; choose from {', '.join(MODELS)}")
    params = dict(MODELS[name][1])
    for item in filter(None, rest.split(",")):
        key, eq, val = item.partition("=")
        if not eq or key not in params:
            raise ValueError(f"bad parameter {item!r} for model {name!r}")
        params[key] = int(val) if key == "alpha" else float(val)
    return name, params


def model_label(name: str, params: dict) -> str:
    if not params:
        return name
    return name + ":" + ",".join(f"{k}={v}" for k, v in params.items())


def generate(model: str, m: int, n: int, seed=None, index: int | None = None) -> WeightedTournament:
    name, params = parse_model(model)
    fn = MODELS[name][0]
    return fn(m, n, seed=rng_for(seed, index), **params)
