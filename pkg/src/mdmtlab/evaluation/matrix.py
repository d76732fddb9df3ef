"""Ablation matrices: metric scores per (test domain, provided label)."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

NO_LABEL = "None"  # column name for the unlabeled condition


@dataclass
class AblationMatrix:
    """Rectangular score grid; rows are test domains, columns provided labels.

    The label axis covers every domain label plus the no-label column, which
    is always last.
    """

    system: str
    domains: list[str]
    labels: list[str]  # NO_LABEL last
    scores: np.ndarray = field(repr=False)  # [n_domains, n_labels]

    def __post_init__(self):
        self.scores = np.asarray(self.scores, dtype=np.float64)
        if self.scores.shape != (len(self.domains), len(self.labels)):
            raise ValueError("scores shape does not match domain/label axes")
        if NO_LABEL not in self.labels:
            raise ValueError(f"label axis must include {NO_LABEL!r}")
        if len(set(self.domains)) != len(self.domains):
            raise ValueError("duplicate test domains")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate labels")

    def row(self, domain: str) -> np.ndarray:
        return self.scores[self.domains.index(domain)]

    def cell(self, domain: str, label: str) -> float:
        return float(self.scores[self.domains.index(domain), self.labels.index(label)])

    def matched_label_scores(self) -> dict[str, float]:
        """Diagonal: each test domain scored under its own label."""
        return {d: self.cell(d, d) for d in self.domains if d in self.labels}


def write_ablation_csv(matrix: AblationMatrix, path):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["test_domain", *matrix.labels])
        for i, domain in enumerate(matrix.domains):
            writer.writerow([domain, *(f"{x:.6g}" for x in matrix.scores[i])])


def read_ablation_csv(path, system: str | None = None) -> AblationMatrix:
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows or len(rows[0]) < 2:
        raise ValueError(f"{path}: not an ablation CSV")
    labels = rows[0][1:]
    domains = []
    scores = []
    for row in rows[1:]:
        if not row:
            continue
        if len(row) != len(labels) + 1:
            raise ValueError(f"{path}: ragged row {row[0]!r}")
        domains.append(row[0])
        scores.append([float(x) for x in row[1:]])
    if system is None:
        import os

        system = os.path.splitext(os.path.basename(str(path)))[0]
    return AblationMatrix(system=system, domains=domains, labels=labels, scores=np.array(scores))
