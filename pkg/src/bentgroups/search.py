"""Seeded numerical search for bent class functions in coefficient space.

Candidates are coefficient vectors with squared magnitudes on the unit
simplex (the energy constraint satisfied by any unimodular function) and
free phases.  The objective is zero exactly on bent functions, so a
candidate whose objective falls below the certification tolerance is
re-verified with the full derivative-sum check and returned as a witness.
Searches are deterministic given their config: the candidate stream is a
fixed sequence of constructed seeds, seeded random draws, and a
coordinate-descent refinement of the best draw.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .bentness import BENT, BentReport, is_bent
from .characters import CharacterTable, character_table
from .class_functions import from_coefficients
from .constructions import quadratic_chirp, zadoff_chu
from .groups import group_from_label

__all__ = [
    "SearchConfig",
    "SearchResult",
    "Strategy",
    "objective",
    "result_to_json",
    "run_search",
]

_BATCH = 2048
_MAX_LOCAL_BUDGET = 25_000
_MAX_SEEDS = 8
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_GOLDEN_ITERS = 48


class Strategy(str, enum.Enum):
    RANDOM = "random"
    RANDOM_PLUS_LOCAL = "random+local"


@dataclass(frozen=True)
class SearchConfig:
    """Search parameters; identical configs yield identical results."""

    group: str
    budget: int
    seed: int = 0
    tol: float = 1e-8
    strategy: Strategy = Strategy.RANDOM_PLUS_LOCAL

    def __post_init__(self) -> None:
        if self.budget < 1:
            raise ValueError(f"budget must be at least 1, got {self.budget}")
        object.__setattr__(self, "strategy", Strategy(self.strategy))


@dataclass(frozen=True, eq=False)
class SearchResult:
    """Search outcome: best candidate, certification status, and transcript stats.

    ``histogram`` holds the 0%, 10%, ..., 100% quantiles of all evaluated
    objective values.  ``report`` is the certifying BentReport when
    ``certified_bent`` is true, else None.
    """

    config: SearchConfig
    best_objective: float
    best_coefficients: np.ndarray
    certified_bent: bool
    evaluations: int
    histogram: tuple[float, ...]
    report: BentReport | None


def objective(table: CharacterTable, a: Sequence[complex]) -> float:
    """max_sigma |D(sigma)|/n over sigma != e, plus the unimodularity gap.

    Zero exactly on bent coefficient vectors; the constant function a = e_1
    scores 1.
    """
    a = np.asarray(a, dtype=complex)
    if a.shape != (table.n_irreps,):
        raise ValueError(
            f"expected {table.n_irreps} coefficients for {table.group.name}, "
            f"got shape {a.shape}"
        )
    return float(_objective_batch(table, a[None, :])[0])


def _objective_batch(table: CharacterTable, batch: np.ndarray) -> np.ndarray:
    group = table.group
    n = group.order
    values = batch @ table.phi.T
    gaps = np.max(np.abs(np.abs(values) - 1.0), axis=1)
    max_residual = np.zeros(len(batch))
    conj_values = np.conj(values)
    for sigma in range(n):
        if sigma == group.identity:
            continue
        d = np.sum(conj_values * values[:, group.cayley[sigma]], axis=1)
        max_residual = np.maximum(max_residual, np.abs(d))
    return max_residual / n + gaps


def _seed_candidates(table: CharacterTable) -> list[np.ndarray]:
    """Constructed CAZAC-based candidates for groups with cyclic factors."""
    factors = table.group.abelian_factors
    if factors is None:
        return []
    seeds: list[np.ndarray] = []
    if len(factors) == 1:
        n = factors[0]
        roots = [u for u in range(1, n + 1) if math.gcd(u, n) == 1]
        for u in roots[:_MAX_SEEDS]:
            seeds.append(zadoff_chu(n, u) / math.sqrt(n))
        if n % 2 and n > 1:
            seeds.append(quadratic_chirp(n) / math.sqrt(n))
    else:
        a = np.ones(1, dtype=complex)
        for m in factors:
            a = np.kron(a, zadoff_chu(m, 1) / math.sqrt(m))
        seeds.append(a)
    return seeds


def _golden_section(
    fun: Callable[[float], float], lo: float, hi: float, max_evals: int
) -> tuple[float, float, int]:
    """Minimize a unimodal-ish scalar function; returns (x, f(x), evals used)."""
    if max_evals < 2:
        mid = 0.5 * (lo + hi)
        return mid, fun(mid), 1
    c = hi - _GOLDEN * (hi - lo)
    d = lo + _GOLDEN * (hi - lo)
    fc, fd = fun(c), fun(d)
    evals = 2
    while evals < max_evals:
        if fc <= fd:
            hi, d, fd = d, c, fc
            c = hi - _GOLDEN * (hi - lo)
            fc = fun(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _GOLDEN * (hi - lo)
            fd = fun(d)
        evals += 1
    return (c, fc, evals) if fc <= fd else (d, fd, evals)


class _Transcript:
    """Tracks evaluations, the running best, and the objective histogram."""

    def __init__(self, table: CharacterTable, budget: int, tol: float):
        self.table = table
        self.budget = budget
        self.tol = tol
        self.evaluations = 0
        self.values: list[float] = []
        self.best_objective = math.inf
        self.best_coefficients: np.ndarray | None = None

    @property
    def remaining(self) -> int:
        return self.budget - self.evaluations

    @property
    def done(self) -> bool:
        return self.evaluations >= self.budget or self.best_objective <= self.tol

    def record_batch(self, batch: np.ndarray) -> None:
        batch = batch[: self.remaining]
        if not len(batch):
            return
        objs = _objective_batch(self.table, batch)
        self.evaluations += len(batch)
        self.values.extend(float(v) for v in objs)
        idx = int(np.argmin(objs))
        if objs[idx] < self.best_objective:
            self.best_objective = float(objs[idx])
            self.best_coefficients = batch[idx].copy()

    def evaluate(self, a: np.ndarray) -> float:
        obj = float(_objective_batch(self.table, a[None, :])[0])
        self.evaluations += 1
        self.values.append(obj)
        if obj < self.best_objective:
            self.best_objective = obj
            self.best_coefficients = a.copy()
        return obj


def _refine(transcript: _Transcript, start: np.ndarray, local_budget: int) -> None:
    """Coordinate descent: golden-section on each phase, then each magnitude."""
    r = len(start)
    a = start.copy()
    best = transcript.best_objective
    stop_at = transcript.evaluations + local_budget

    def left(cap: int) -> int:
        return max(0, min(cap, stop_at - transcript.evaluations, transcript.remaining))

    while left(2) >= 2 and transcript.best_objective > transcript.tol:
        improved = False
        for i in range(r):
            cap = left(_GOLDEN_ITERS)
            if cap < 2 or transcript.best_objective <= transcript.tol:
                break
            theta0 = float(np.angle(a[i]))
            radius = abs(a[i])

            def phase_probe(theta: float) -> float:
                b = a.copy()
                b[i] = radius * complex(math.cos(theta), math.sin(theta))
                return transcript.evaluate(b)

            theta, obj, _ = _golden_section(
                phase_probe, theta0 - math.pi, theta0 + math.pi, cap
            )
            if obj < best - 1e-15:
                a[i] = radius * complex(math.cos(theta), math.sin(theta))
                best = obj
                improved = True
        mags = np.abs(a) ** 2
        radii = np.abs(a)
        phases = np.where(radii > 0, a / np.maximum(radii, 1e-300), 1.0)
        for i in range(r):
            if r == 1:
                break
            cap = left(_GOLDEN_ITERS)
            if cap < 2 or transcript.best_objective <= transcript.tol:
                break

            def magnitude_probe(t: float) -> float:
                m = mags.copy()
                others = 1.0 - m[i]
                if others > 1e-15:
                    scale = (1.0 - t) / others
                    m *= scale
                else:
                    m[:] = (1.0 - t) / (r - 1)
                m[i] = t
                b = np.sqrt(np.clip(m, 0.0, None)) * phases
                return transcript.evaluate(b)

            t, obj, _ = _golden_section(magnitude_probe, 0.0, 1.0, cap)
            if obj < best - 1e-15:
                others = 1.0 - mags[i]
                if others > 1e-15:
                    mags *= (1.0 - t) / others
                else:
                    mags[:] = (1.0 - t) / (r - 1)
                mags[i] = t
                a = np.sqrt(np.clip(mags, 0.0, None)) * phases
                best = obj
                improved = True
        if not improved:
            break


def run_search(config: SearchConfig) -> SearchResult:
    """Run the configured search and return a reproducible transcript."""
    group = group_from_label(config.group)
    table = character_table(group)
    r = table.n_irreps
    rng = np.random.default_rng(config.seed)
    transcript = _Transcript(table, config.budget, config.tol)

    seeds = _seed_candidates(table)
    if seeds:
        transcript.record_batch(np.asarray(seeds))

    local_budget = 0
    if config.strategy is Strategy.RANDOM_PLUS_LOCAL:
        local_budget = min(config.budget // 4, _MAX_LOCAL_BUDGET)

    while not transcript.done and transcript.remaining > local_budget:
        size = min(_BATCH, transcript.remaining - local_budget)
        mags = rng.dirichlet(np.ones(r), size=size)
        phases = np.exp(2j * np.pi * rng.random((size, r)))
        transcript.record_batch(np.sqrt(mags) * phases)

    if (
        local_budget
        and not transcript.done
        and transcript.best_coefficients is not None
    ):
        _refine(transcript, transcript.best_coefficients, local_budget)

    best_coefficients = transcript.best_coefficients
    assert best_coefficients is not None  # budget >= 1 guarantees an evaluation
    report: BentReport | None = None
    certified = False
    if transcript.best_objective <= config.tol:
        candidate = from_coefficients(table, best_coefficients)
        report = is_bent(candidate, config.tol)
        certified = report.verdict == BENT
        if not certified:
            report = None
    histogram = tuple(
        float(q) for q in np.quantile(np.asarray(transcript.values), np.linspace(0, 1, 11))
    )
    best_coefficients.setflags(write=False)
    return SearchResult(
        config=config,
        best_objective=transcript.best_objective,
        best_coefficients=best_coefficients,
        certified_bent=certified,
        evaluations=transcript.evaluations,
        histogram=histogram,
        report=report,
    )


def result_to_json(result: SearchResult) -> dict:
    from .bentness import report_to_json  # local import keeps module load light

    return {
        "config": {
            "group": result.config.group,
            "budget": result.config.budget,
            "seed": result.config.seed,
            "tol": result.config.tol,
            "strategy": result.config.strategy.value,
        },
        "best_objective": result.best_objective,
        "best_coefficients": [
            [float(z.real), float(z.imag)] for z in result.best_coefficients
        ],
        "certified_bent": result.certified_bent,
        "evaluations": result.evaluations,
        "histogram": list(result.histogram),
        "report": None if result.report is None else report_to_json(result.report),
    }
