"""Parallel examples and TSV corpus files."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ParallelExample:
    """One sentence pair; label is None for out-of-domain data."""

    src: tuple
    tgt: tuple
    label: str | None = None

    def __post_init__(self):
        if not self.src or not self.tgt:
            raise ValueError("source and target must be non-empty")


def write_corpus_tsv(examples, path):
    """One example per line: source TAB target TAB domain (empty = none)."""
    with open(path, "w", encoding="utf-8") as fh:
        for ex in examples:
            fh.write(f"{' '.join(ex.src)}\t{' '.join(ex.tgt)}\t{ex.label or ''}\n")


def read_corpus_tsv(path) -> list[ParallelExample]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ValueError(f"{path}:{lineno}: expected 3 tab-separated fields")
            src, tgt, label = parts
            out.append(
                ParallelExample(
                    src=tuple(src.split()),
                    tgt=tuple(tgt.split()),
                    label=label or None,
                )
            )
    return out
