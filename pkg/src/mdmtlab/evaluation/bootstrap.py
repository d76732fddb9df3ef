"""Paired bootstrap resampling over sentence-level BLEU statistics."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bleu import corpus_stats, score_from_stats


@dataclass(frozen=True)
class SignificanceResult:
    score_a: float
    score_b: float
    win_fraction_a: float  # ties count as half a win
    significant: bool  # win fraction >= 0.95 or <= 0.05
    iterations: int
    seed: int


def paired_bootstrap(
    hyps_a,
    hyps_b,
    refs,
    iterations: int = 1000,
    seed: int = 0,
) -> SignificanceResult:
    """Resample sentence indices with replacement and tally system-A wins.

    Each iteration draws exactly one index vector via
    rng.integers(0, n, size=n) from np.random.default_rng(seed), scores both
    systems on the resampled corpus, and credits A with 1 for a win and 0.5
    for an exact tie.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    stats_a = corpus_stats(hyps_a, refs)
    stats_b = corpus_stats(hyps_b, refs)
    n = stats_a.shape[0]

    rng = np.random.default_rng(seed)
    wins = 0.0
    for _ in range(iterations):
        idx = rng.integers(0, n, size=n)
        sa = score_from_stats(stats_a[idx].sum(axis=0)).score
        sb = score_from_stats(stats_b[idx].sum(axis=0)).score
        if sa > sb:
            wins += 1.0
        elif sa == sb:
            wins += 0.5
    frac = wins / iterations
    return SignificanceResult(
        score_a=score_from_stats(stats_a.sum(axis=0)).score,
        score_b=score_from_stats(stats_b.sum(axis=0)).score,
        win_fraction_a=frac,
        significant=frac >= 0.95 or frac <= 0.05,
        iterations=iterations,
        seed=seed,
    )
