"""Token vocabulary with a reserved block for control tokens and domain tags."""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass

PAD, BOS, EOS, UNK = "<pad>", "<bos>", "<eos>", "<unk>"
_BASE_RESERVED = [PAD, BOS, EOS, UNK]


def tag_token(domain_name: str) -> str:
    return f"<{domain_name}>"


@dataclass(frozen=True)
class DomainLabel:
    """A domain's identity across the two conditioning mechanisms."""

    name: str
    tag_id: int  # reserved vocabulary id of the tag token
    row_index: int  # 1-based row in the intervention table (0 is pad)


class Vocabulary:
    """token <-> id bijection; ids 0..3 are pad/bos/eos/unk, then domain tags."""

    pad_id = 0
    bos_id = 1
    eos_id = 2
    unk_id = 3

    def __init__(self, tokens: list[str], domain_names: list[str]):
        if tokens[:4] != _BASE_RESERVED:
            raise ValueError("vocabulary must start with the reserved block")
        expected_tags = [tag_token(d) for d in domain_names]
        if tokens[4 : 4 + len(expected_tags)] != expected_tags:
            raise ValueError("domain tags must follow the base reserved block")
        if len(set(tokens)) != len(tokens):
            raise ValueError("duplicate tokens")
        self.tokens = list(tokens)
        self.domain_names = list(domain_names)
        self.index = {t: i for i, t in enumerate(tokens)}
        self.n_reserved = 4 + len(domain_names)

    def __len__(self):
        return len(self.tokens)

    @classmethod
    def build(cls, corpora, domain_names) -> "Vocabulary":
        """Cover every corpus token; order by descending frequency, ties
        lexicographic, after the reserved block."""
        counts = Counter()
        for examples in corpora:
            for ex in examples:
                counts.update(ex.src)
                counts.update(ex.tgt)
        reserved = _BASE_RESERVED + [tag_token(d) for d in domain_names]
        for tok in counts:
            if tok in reserved:
                raise ValueError(f"reserved token {tok!r} appears in corpus text")
        body = sorted(counts, key=lambda t: (-counts[t], t))
        return cls(reserved + body, list(domain_names))

    def domain_labels(self) -> list[DomainLabel]:
        return [
            DomainLabel(name=d, tag_id=4 + i, row_index=1 + i)
            for i, d in enumerate(self.domain_names)
        ]

    def label(self, name: str) -> DomainLabel:
        try:
            i = self.domain_names.index(name)
        except ValueError:
            raise KeyError(f"unknown domain label {name!r}") from None
        return DomainLabel(name=name, tag_id=4 + i, row_index=1 + i)

    def encode(self, tokens) -> list[int]:
        unk = self.unk_id
        return [self.index.get(t, unk) for t in tokens]

    def decode(self, ids) -> list[str]:
        return [self.tokens[i] for i in ids]

    def fingerprint(self) -> str:
        digest = hashlib.sha256("\n".join(self.tokens).encode("utf-8"))
        return digest.hexdigest()

    def save(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(self.tokens) + "\n")

    @classmethod
    def load(cls, path) -> "Vocabulary":
        with open(path, encoding="utf-8") as fh:
            tokens = [line.rstrip("\n") for line in fh if line.rstrip("\n")]
        domain_names = []
        for tok in tokens[4:]:
            if tok.startswith("<") and tok.endswith(">"):
                domain_names.append(tok[1:-1])
            else:
                break
        return cls(tokens, domain_names)
