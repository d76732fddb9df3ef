"""Label-error robustness: score spread across provided labels per test set."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .matrix import AblationMatrix


@dataclass
class RobustnessSummary:
    """Sample standard deviation of the metric across all provided labels.

    Keyed by (system, test domain); 0 for a label-invariant system.
    """

    values: dict = field(default_factory=dict)

    def std(self, system: str, domain: str) -> float:
        return self.values[(system, domain)]

    @classmethod
    def combine(cls, summaries) -> "RobustnessSummary":
        merged = {}
        for s in summaries:
            merged.update(s.values)
        return cls(values=merged)


def robustness_std(matrix: AblationMatrix) -> RobustnessSummary:
    """Per test domain, the (n-1)-denominator std over the full label row."""
    values = {}
    for i, domain in enumerate(matrix.domains):
        row = matrix.scores[i]
        if row.shape[0] < 2:
            raise ValueError("robustness_std needs at least two labels per row")
        if not np.all(np.isfinite(row)):
            raise ValueError(f"incomplete row for domain {domain!r}")
        values[(matrix.system, domain)] = float(np.std(row, ddof=1))
    return RobustnessSummary(values=values)
