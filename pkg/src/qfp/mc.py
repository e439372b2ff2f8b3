"""Seeded Monte Carlo engine for protocol trials.

Trials are partitioned into fixed-size chunks; chunk j draws from an
independent counter-based Philox stream keyed by (seed, j), so the random
numbers backing any given trial depend only on the configuration, never on
how chunks are scheduled across workers.  Aggregation uses exact integer
counters.  Identical configurations therefore produce bit-identical reports
at any parallelism level.

Within a chunk the draws mirror `protocol.run_trial`: one uniform decides
the coincidence bit, a second the strategy flip (consumed even by the pure
strategy, which keeps Pure and Mixed(0, 0) on identical streams).
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .protocol import (
    AnalyticRates,
    Message,
    ProtocolKind,
    RogerStrategy,
    analytic_rates,
    joint_state,
    pair_error_probability,
)
from .qstate import Encoding, tetrahedral_encoding
from .twophoton import CoincidenceModel, coincidence_probability

CHUNK = 1 << 16


@dataclass(frozen=True)
class Adversary:
    """Sapna's message-supply rule: worst-case, uniform, or a fixed pair."""

    kind: str  # "wcs" | "uniform" | "pair"
    x: int | None = None
    y: int | None = None

    def __post_init__(self):
        if self.kind not in ("wcs", "uniform", "pair"):
            raise ValueError(f"unknown adversary kind {self.kind!r}")
        if self.kind == "pair" and (self.x is None or self.y is None):
            raise ValueError("fixed-pair adversary needs both x and y")

    @classmethod
    def wcs(cls) -> "Adversary":
        return cls("wcs")

    @classmethod
    def uniform(cls) -> "Adversary":
        return cls("uniform")

    @classmethod
    def fixed_pair(cls, x: int, y: int) -> "Adversary":
        return cls("pair", x, y)


@dataclass(frozen=True)
class SimConfig:
    kind: ProtocolKind
    trials: int
    seed: int
    model: CoincidenceModel
    strategy: RogerStrategy
    adversary: Adversary
    encoding: Encoding | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trials must be positive, got {self.trials}")

    def resolved_encoding(self) -> Encoding | None:
        if self.kind is ProtocolKind.QUANTUM_UNENTANGLED:
            return self.encoding if self.encoding is not None else tetrahedral_encoding()
        return None

    @property
    def m(self) -> int:
        enc = self.resolved_encoding()
        return enc.m if enc is not None else 4


@dataclass(frozen=True)
class CaseStats:
    trials: int
    errors: int

    @property
    def rate(self) -> float | None:
        return None if self.trials == 0 else self.errors / self.trials


@dataclass(frozen=True)
class SimReport:
    config: SimConfig
    per_pair_trials: tuple[int, ...]
    per_pair_errors: tuple[int, ...]
    analytic: AnalyticRates

    def _case(self, same: bool) -> CaseStats:
        m = self.config.m
        trials = errors = 0
        for x in range(m):
            for y in range(m):
                if (x == y) == same:
                    idx = x * m + y
                    trials += self.per_pair_trials[idx]
                    errors += self.per_pair_errors[idx]
        return CaseStats(trials, errors)

    @property
    def same(self) -> CaseStats:
        return self._case(True)

    @property
    def diff(self) -> CaseStats:
        return self._case(False)

    @property
    def total(self) -> CaseStats:
        return CaseStats(sum(self.per_pair_trials), sum(self.per_pair_errors))

    def wcs_stats(self) -> CaseStats:
        """Counts backing the worst-case estimate.

        Under the wcs or fixed-pair adversary all trials probe a single pair,
        so the overall counts are the estimate; under the uniform adversary
        take the worse of the two cases.
        """
        if self.config.adversary.kind in ("wcs", "pair"):
            return self.total
        same, diff = self.same, self.diff
        cases = [c for c in (same, diff) if c.trials > 0]
        return max(cases, key=lambda c: c.rate)

    def to_json_dict(self) -> dict:
        same, diff = self.same, self.diff
        wcs = self.wcs_stats()

        def ci(case: CaseStats):
            if case.trials == 0:
                return None
            return list(wilson_interval(case.errors, case.trials, 1.96))

        model = self.config.model
        strat = self.config.strategy
        adv = self.config.adversary
        pair_matrix = None
        if adv.kind == "uniform":
            m = self.config.m
            pair_matrix = []
            for x in range(m):
                for y in range(m):
                    idx = x * m + y
                    n, e = self.per_pair_trials[idx], self.per_pair_errors[idx]
                    pair_matrix.append({
                        "x": x, "y": y, "trials": n, "errors": e,
                        "error_rate": None if n == 0 else e / n,
                    })
        return {
            "kind": self.config.kind.value,
            "trials": self.config.trials,
            "seed": self.config.seed,
            "adversary": {"kind": adv.kind, "x": adv.x, "y": adv.y},
            "strategy": {"pi0": strat.pi0, "pi1": strat.pi1},
            "model": {"d": model.d, "tau_c": model.tau_c},
            "empirical": {
                "p_same_err": same.rate,
                "p_diff_err": diff.rate,
                "wcs_err": wcs.rate,
            },
            "analytic": {
                "p_same_err": self.analytic.p_same_err,
                "p_diff_err": self.analytic.p_diff_err,
                "wcs_err": self.analytic.wcs_err,
            },
            "ci95": {"same": ci(same), "diff": ci(diff), "wcs": ci(wcs)},
            "pair_matrix": pair_matrix,
        }


def wilson_interval(successes: int, n: int, z: float) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if n < 1:
        raise ValueError("need at least one observation")
    if not 0 <= successes <= n:
        raise ValueError(f"successes {successes} outside [0, {n}]")
    phat = successes / n
    z2 = z * z
    denom = 1.0 + z2 / n
    center = (phat + z2 / (2.0 * n)) / denom
    half = z * math.sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom
    return max(0.0, center - half), min(1.0, center + half)


def _worst_pair(config: SimConfig) -> tuple[int, int]:
    """The message pair maximizing analytic error; lexicographic tie-break."""
    m = config.m
    enc = config.resolved_encoding()
    best, best_err = (0, 0), -1.0
    for x in range(m):
        for y in range(m):
            err = pair_error_probability(
                config.kind, Message(x, m), Message(y, m), enc, config.model, config.strategy
            )
            if err > best_err:
                best, best_err = (x, y), err
    return best


def _coincidence_table(config: SimConfig) -> np.ndarray:
    """coincidence probability for each ordered pair, indexed x*m + y."""
    m = config.m
    enc = config.resolved_encoding()
    table = np.empty(m * m)
    for x in range(m):
        for y in range(m):
            state = joint_state(config.kind, Message(x, m), Message(y, m), enc)
            table[x * m + y] = coincidence_probability(state, config.model, 0.0)
    return table


def _run_chunk(
    config: SimConfig,
    chunk_index: int,
    count: int,
    p_coin: np.ndarray,
    fixed_pair_idx: int | None,
) -> tuple[np.ndarray, np.ndarray]:
    """Simulate one chunk; returns (per-pair trials, per-pair errors)."""
    m = config.m
    n_pairs = m * m
    key = np.array([config.seed & 0xFFFFFFFFFFFFFFFF, chunk_index], dtype=np.uint64)
    rng = np.random.Generator(np.random.Philox(key=key))

    if fixed_pair_idx is None:
        pair_idx = rng.integers(0, n_pairs, size=count)
    else:
        pair_idx = np.full(count, fixed_pair_idx, dtype=np.int64)
    u_coin = rng.random(count)
    u_flip = rng.random(count)

    r = u_coin < p_coin[pair_idx]
    if config.kind is ProtocolKind.QUANTUM_ENTANGLED:
        z_star = r
    else:
        z_star = ~r
    strat = config.strategy
    z = np.where(z_star, u_flip >= strat.pi0, u_flip < strat.pi1)
    is_same = (pair_idx // m) == (pair_idx % m)
    correct = z == is_same

    trials = np.bincount(pair_idx, minlength=n_pairs)
    errors = np.bincount(pair_idx[~correct], minlength=n_pairs)
    return trials, errors


def run_simulation(config: SimConfig, workers: int = 1) -> SimReport:
    """Run the configured number of trials and tabulate exact error counts.

    `workers` only controls scheduling; the report is byte-identical for any
    value because chunk boundaries and per-chunk streams are fixed by the
    configuration alone.
    """
    if workers < 1:
        raise ValueError("workers must be positive")
    m = config.m
    p_coin = _coincidence_table(config)
    fixed_idx: int | None = None
    if config.adversary.kind == "wcs":
        x, y = _worst_pair(config)
        fixed_idx = x * m + y
    elif config.adversary.kind == "pair":
        x, y = config.adversary.x, config.adversary.y
        if not (0 <= x < m and 0 <= y < m):
            raise ValueError(f"fixed pair ({x}, {y}) outside message space m={m}")
        fixed_idx = x * m + y

    chunks = [
        (j, min(CHUNK, config.trials - j * CHUNK))
        for j in range((config.trials + CHUNK - 1) // CHUNK)
    ]
    if workers == 1:
        results = [_run_chunk(config, j, c, p_coin, fixed_idx) for j, c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(lambda jc: _run_chunk(config, jc[0], jc[1], p_coin, fixed_idx), chunks)
            )

    n_pairs = m * m
    trials = np.zeros(n_pairs, dtype=np.int64)
    errors = np.zeros(n_pairs, dtype=np.int64)
    for t, e in results:
        trials += t
        errors += e

    rates = analytic_rates(config.kind, config.resolved_encoding(), config.model, config.strategy)
    return SimReport(
        config=config,
        per_pair_trials=tuple(int(v) for v in trials),
        per_pair_errors=tuple(int(v) for v in errors),
        analytic=rates,
    )


def pair_matrix_csv(report: SimReport) -> str:
    """Flat CSV of the per-pair error matrix."""
    m = report.config.m
    lines = ["x,y,trials,errors,error_rate"]
    for x in range(m):
        for y in range(m):
            idx = x * m + y
            n = report.per_pair_trials[idx]
            e = report.per_pair_errors[idx]
            rate = "" if n == 0 else repr(e / n)
            lines.append(f"{x},{y},{n},{e},{rate}")
    return "\n".join(lines) + "\n"
