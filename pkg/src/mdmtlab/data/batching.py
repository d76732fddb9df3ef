"""Sharded batch streams with per-epoch seeded shuffling.

The corpus mix is shuffled once and cut greedily into shards bounded by a
target-token budget; a virtual epoch is a single pass over one shard,
cycling through shards in order. Within an epoch, the shard is reshuffled
with a seed derived from (seed, epoch) and partitioned into consecutive
batches, the last of which may be short.
"""

from __future__ import annotations

import numpy as np


class BatchStream:
    def __init__(self, examples, batch_size: int, seed: int, shard_target_tokens: int):
        examples = list(examples)
        if not examples:
            raise ValueError("empty corpus mix")
        if batch_size < 1 or shard_target_tokens < 1:
            raise ValueError("batch_size and shard_target_tokens must be >= 1")
        self.batch_size = batch_size
        self.seed = seed
        order = np.random.default_rng([seed, 0xD5]).permutation(len(examples))
        self.shards = _cut_shards([examples[i] for i in order], shard_target_tokens)

    @property
    def n_shards(self):
        return len(self.shards)

    def epoch(self, epoch_index: int) -> list[list]:
        """Batches of one virtual epoch (epoch_index is 0-based)."""
        shard = self.shards[epoch_index % len(self.shards)]
        rng = np.random.default_rng([self.seed, 0xE7, epoch_index])
        order = rng.permutation(len(shard))
        shuffled = [shard[i] for i in order]
        return [
            shuffled[i : i + self.batch_size]
            for i in range(0, len(shuffled), self.batch_size)
        ]


def _cut_shards(examples, budget):
    """Greedy fill by target-token count; an oversized example sits alone."""
    shards = [[]]
    used = 0
    for ex in examples:
        cost = len(ex.tgt)
        if shards[-1] and used + cost > budget:
            shards.append([])
            used = 0
        shards[-1].append(ex)
        used += cost
    return shards


def make_batches(examples, batch_size: int, seed: int, shard_target_tokens: int) -> BatchStream:
    return BatchStream(examples, batch_size, seed, shard_target_tokens)
