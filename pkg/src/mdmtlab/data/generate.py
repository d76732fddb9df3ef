"""Deterministic synthetic corpus generation with per-domain dedup."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .corpus import ParallelExample
from .taskspec import SyntheticTaskSpec


@dataclass
class SplitCorpora:
    train: list = field(default_factory=list)
    dev: list = field(default_factory=list)
    test: list = field(default_factory=list)

    def all_examples(self):
        return self.train + self.dev + self.test


@dataclass
class GeneratedCorpora:
    spec: SyntheticTaskSpec
    seed: int
    domains: dict  # name -> SplitCorpora
    general: SplitCorpora

    def in_domain_train(self):
        out = []
        for name in self.spec.domain_names():
            out.extend(self.domains[name].train)
        return out


def _sentence_space(spec: SyntheticTaskSpec, pools) -> int:
    per_pool = 0
    for length in range(spec.min_len, spec.max_len + 1):
        per_pool += spec.pool_size**length
    return per_pool * len(pools)


def _draw_sentences(spec, pools, pool_probs, count, rng):
    lengths = rng.integers(spec.min_len, spec.max_len + 1, size=count)
    pool_pick = rng.random(count)
    out = []
    for i in range(count):
        pool = pools[0] if pool_pick[i] < pool_probs else pools[-1]
        ids = rng.integers(0, len(pool), size=lengths[i])
        out.append(tuple(pool[j] for j in ids))
    return out


def _dedup_and_split(sources, transform, label, sizes):
    """Drop repeated sources (first occurrence wins), then partition.

    Test is filled first, then dev, then train, so collisions shrink the
    training split rather than the evaluation splits.
    """
    seen = set()
    unique = []
    for s in sources:
        if s not in seen:
            seen.add(s)
            unique.append(s)
    train_size, dev_size, test_size = sizes
    examples = [ParallelExample(src=s, tgt=transform(s), label=label) for s in unique]
    test = examples[:test_size]
    dev = examples[test_size : test_size + dev_size]
    train = examples[test_size + dev_size : test_size + dev_size + train_size]
    return SplitCorpora(train=train, dev=dev, test=test)


def generate_corpus(spec: SyntheticTaskSpec, seed: int) -> GeneratedCorpora:
    """Generate per-domain and general corpora, deterministic in (spec, seed).

    Every domain gets an independent RNG stream derived from the seed, so
    domains could be generated in parallel without changing the output.
    """
    spec.validate()
    streams = np.random.SeedSequence(seed).spawn(len(spec.domains) + 1)

    domains = {}
    for i, dom in enumerate(spec.domains):
        rng = np.random.default_rng(streams[i])
        total = dom.train_size + dom.dev_size + dom.test_size
        pools = [spec.domain_pool(i), spec.shared_pool()]
        if spec.shared_fraction >= 1.0:
            pools = [spec.shared_pool()]
        elif spec.shared_fraction <= 0.0:
            pools = [spec.domain_pool(i)]
        if total > _sentence_space(spec, pools):
            raise ValueError(
                f"domain {dom.name!r} requests {total} unique sentences; "
                "the token space is smaller"
            )
        sources = _draw_sentences(spec, pools, 1.0 - spec.shared_fraction, total, rng)
        domains[dom.name] = _dedup_and_split(
            sources, dom.apply, dom.name, (dom.train_size, dom.dev_size, dom.test_size)
        )

    rng = np.random.default_rng(streams[-1])
    total = spec.general_train_size + spec.general_dev_size + spec.general_test_size
    if total > _sentence_space(spec, [spec.general_pool()]):
        raise ValueError("general corpus requests more unique sentences than possible")
    sources = _draw_sentences(spec, [spec.general_pool()], 1.0, total, rng)
    general = _dedup_and_split(
        sources,
        lambda s: tuple(s),
        None,
        (spec.general_train_size, spec.general_dev_size, spec.general_test_size),
    )
    return GeneratedCorpora(spec=spec, seed=seed, domains=domains, general=general)
