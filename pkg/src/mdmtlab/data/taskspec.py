"""Synthetic multi-domain task definitions.

Each domain owns a disjoint inventory of source tokens plus access to a
shared inventory, and maps sources to targets through a deterministic
transformation. Sources drawn from a domain's own inventory identify the
domain by content alone; shared-inventory sentences are ambiguous and
only the provided label disambiguates the expected target.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass, field

_CONSONANTS = "bdfgklmnprstvz"
_VOWELS = "aeiou"
_SUFFIX = "zz"


def _token_inventory():
    syllables = [c + v for c in _CONSONANTS for v in _VOWELS]
    return [a + b for a, b in itertools.product(syllables, repeat=2)]


_ALL_TOKENS = _token_inventory()


def transform_identity(tokens):
    return tuple(tokens)


def transform_upper(tokens):
    return tuple(t.upper() for t in tokens)


def transform_reverse(tokens):
    return tuple(reversed(tokens))


def transform_suffix_cipher(tokens):
    return tuple(t + _SUFFIX for t in tokens)


TRANSFORMS = {
    "identity": transform_identity,
    "upper": transform_upper,
    "reverse": transform_reverse,
    "suffix_cipher": transform_suffix_cipher,
}


def transform_fn(name: str):
    try:
        return TRANSFORMS[name]
    except KeyError:
        raise ValueError(f"unknown transformation {name!r}") from None


@dataclass
class DomainSpec:
    name: str
    transform: str
    train_size: int = 20000
    dev_size: int = 500
    test_size: int = 1000

    def apply(self, src):
        return transform_fn(self.transform)(src)


@dataclass
class SyntheticTaskSpec:
    """Generator configuration for one multi-domain corpus family.

    pool_size is the per-inventory token count (one inventory per domain,
    one shared, one for the general corpus). shared_fraction is the
    per-sentence probability of drawing from the shared inventory instead
    of the domain's own.
    """

    domains: list[DomainSpec] = field(default_factory=list)
    pool_size: int = 64
    min_len: int = 4
    max_len: int = 12
    shared_fraction: float = 0.2
    general_train_size: int = 80000
    general_dev_size: int = 500
    general_test_size: int = 1000

    def __post_init__(self):
        self.domains = [
            DomainSpec(**d) if isinstance(d, dict) else d for d in self.domains
        ]

    def validate(self):
        if not self.domains:
            raise ValueError("at least one domain required")
        names = [d.name for d in self.domains]
        if len(set(names)) != len(names):
            raise ValueError("duplicate domain names")
        for d in self.domains:
            transform_fn(d.transform)
            if not d.name.isidentifier():
                raise ValueError(f"domain name {d.name!r} must be an identifier")
        if not 1 <= self.min_len <= self.max_len:
            raise ValueError("need 1 <= min_len <= max_len")
        if not 0.0 <= self.shared_fraction <= 1.0:
            raise ValueError("shared_fraction must be in [0, 1]")
        needed = (len(self.domains) + 2) * self.pool_size
        if needed > len(_ALL_TOKENS):
            raise ValueError(f"pool_size too large: need {needed} distinct tokens")
        # wrong labels must be detectable: two domains must disagree somewhere
        probe = tuple(self.general_pool()[:2])
        outputs = {d.apply(probe) for d in self.domains}
        if len(outputs) < 2:
            raise ValueError("need two domains whose transformations disagree")

    # inventory layout: [general | domain_0 | domain_1 | ... | shared]
    def general_pool(self):
        return _ALL_TOKENS[: self.pool_size]

    def domain_pool(self, i: int):
        lo = (1 + i) * self.pool_size
        return _ALL_TOKENS[lo : lo + self.pool_size]

    def shared_pool(self):
        lo = (1 + len(self.domains)) * self.pool_size
        return _ALL_TOKENS[lo : lo + self.pool_size]

    def domain_names(self):
        return [d.name for d in self.domains]

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "SyntheticTaskSpec":
        spec = cls(**json.loads(text))
        spec.validate()
        return spec

    def save(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json() + "\n")

    @classmethod
    def load(cls, path) -> "SyntheticTaskSpec":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(fh.read())


def default_spec() -> SyntheticTaskSpec:
    """Four domains: copy, uppercase substitution, reversal, suffix cipher."""
    spec = SyntheticTaskSpec(
        domains=[
            DomainSpec("copy", "identity"),
            DomainSpec("upper", "upper"),
            DomainSpec("rev", "reverse"),
            DomainSpec("cipher", "suffix_cipher"),
        ]
    )
    spec.validate()
    return spec
