"""Corpus BLEU with 13a tokenization, exp smoothing, and no effective-order
adjustment (signature nrefs:1 | case:mixed | eff:no | tok:13a | smooth:exp).

Scores are computed from per-sentence sufficient statistics so that
bootstrap resampling can re-score subsets by summing rows.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass

import numpy as np

NGRAM_ORDER = 4

# stat vector layout: correct[1..4], total[1..4], hyp_len, ref_len
STAT_WIDTH = 2 * NGRAM_ORDER + 2

_RE_SYMBOLS = re.compile(r"([\{-\~\[-\` -\&\(-\+\:-\@\/])")
_RE_PERIOD_COMMA_BEFORE = re.compile(r"([^0-9])([\.,])")
_RE_PERIOD_COMMA_AFTER = re.compile(r"([\.,])([^0-9])")
_RE_DIGIT_DASH = re.compile(r"([0-9])(-)")


def tokenize_13a(line: str) -> list[str]:
    """mteval-v13a-compatible tokenization for Western languages."""
    norm = line.replace("<skipped>", "")
    norm = norm.replace("-\n", "")
    norm = norm.replace("\n", " ")
    if "&" in norm:
        norm = norm.replace("&quot;", '"')
        norm = norm.replace("&amp;", "&")
        norm = norm.replace("&lt;", "<")
        norm = norm.replace("&gt;", ">")
    norm = f" {norm} "
    norm = _RE_SYMBOLS.sub(r" \1 ", norm)
    norm = _RE_PERIOD_COMMA_BEFORE.sub(r"\1 \2 ", norm)
    norm = _RE_PERIOD_COMMA_AFTER.sub(r" \1 \2", norm)
    norm = _RE_DIGIT_DASH.sub(r"\1 \2 ", norm)
    return norm.split()


@dataclass(frozen=True)
class BleuScore:
    score: float
    precisions: tuple[float, ...]  # fractions in [0, 1], after smoothing
    brevity_penalty: float
    hyp_len: int
    ref_len: int

    def __str__(self):
        p = "/".join(f"{x * 100:.1f}" for x in self.precisions)
        return f"BLEU {self.score:.2f} ({p}, BP={self.brevity_penalty:.3f})"


def _ngram_counts(tokens: list[str]) -> list[Counter]:
    out = []
    for n in range(1, NGRAM_ORDER + 1):
        out.append(Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1)))
    return out


def pair_stats(hyp: str, ref: str) -> np.ndarray:
    """Sufficient statistics of one (hypothesis, reference) pair."""
    h = tokenize_13a(hyp)
    r = tokenize_13a(ref)
    h_counts = _ngram_counts(h)
    r_counts = _ngram_counts(r)
    row = np.zeros(STAT_WIDTH)
    for n in range(NGRAM_ORDER):
        correct = 0
        for ng, c in h_counts[n].items():
            correct += min(c, r_counts[n].get(ng, 0))
        row[n] = correct
        row[NGRAM_ORDER + n] = max(len(h) - n, 0)
    row[-2] = len(h)
    row[-1] = len(r)
    return row


def corpus_stats(hypotheses, references) -> np.ndarray:
    hypotheses = list(hypotheses)
    references = list(references)
    if len(hypotheses) != len(references):
        raise ValueError("hypothesis/reference counts differ")
    if not hypotheses:
        raise ValueError("empty corpus")
    return np.array([pair_stats(h, r) for h, r in zip(hypotheses, references)])


def score_from_stats(stats: np.ndarray) -> BleuScore:
    """BLEU from summed statistics.

    Orders with zero matches are exp-smoothed: the k-th such order
    contributes 1 / (2**k * total_n). An order with no n-grams at all ends
    the loop, leaving zero precisions; the score is then 0 (eff:no keeps
    the order count at 4 regardless).
    """
    stats = np.asarray(stats, dtype=np.float64)
    correct = stats[:NGRAM_ORDER]
    total = stats[NGRAM_ORDER : 2 * NGRAM_ORDER]
    hyp_len = int(stats[-2])
    ref_len = int(stats[-1])

    precisions = [0.0] * NGRAM_ORDER
    smooth = 1.0
    for n in range(NGRAM_ORDER):
        if total[n] == 0:
            break
        if correct[n] == 0:
            smooth *= 2.0
            precisions[n] = 1.0 / (smooth * total[n])
        else:
            precisions[n] = correct[n] / total[n]

    if hyp_len == 0:
        bp = 0.0
    elif hyp_len < ref_len:
        bp = math.exp(1.0 - ref_len / hyp_len)
    else:
        bp = 1.0

    if any(p == 0.0 for p in precisions):
        score = 0.0
    else:
        score = bp * math.exp(sum(math.log(p) for p in precisions) / NGRAM_ORDER) * 100.0
    return BleuScore(
        score=score,
        precisions=tuple(precisions),
        brevity_penalty=bp,
        hyp_len=hyp_len,
        ref_len=ref_len,
    )


def corpus_bleu(hypotheses, references) -> BleuScore:
    """Corpus-level BLEU of single-reference pairs."""
    return score_from_stats(corpus_stats(hypotheses, references).sum(axis=0))
