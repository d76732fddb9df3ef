"""Model architecture configuration and presets."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from enum import Enum


class ConditioningMode(str, Enum):
    NONE = "none"
    TAG_PREFIX = "tags"
    ADDITIVE_INTERVENTION = "ints"


@dataclass
class ModelConfig:
    vocab_size: int
    n_domains: int
    enc_layers: int = 4
    dec_layers: int = 2
    attn_heads: int = 4
    d_model: int = 64
    d_ff: int = 256
    dropout: float = 0.1
    mode: ConditioningMode = ConditioningMode.NONE
    mask_probability: float = 0.0  # label masking; AdditiveIntervention only
    max_sequence_length: int = 64
    share_embeddings: bool = False

    def __post_init__(self):
        self.mode = ConditioningMode(self.mode)
        if self.d_model % self.attn_heads != 0:
            raise ValueError("d_model must be divisible by attn_heads")
        if not 0.0 <= self.dropout < 1.0:
            raise ValueError("dropout must be in [0, 1)")
        if not 0.0 <= self.mask_probability <= 1.0:
            raise ValueError("mask_probability must be in [0, 1]")
        if self.mode != ConditioningMode.ADDITIVE_INTERVENTION and self.mask_probability != 0.0:
            raise ValueError("mask_probability is only meaningful with additive interventions")
        for field_name in ("enc_layers", "dec_layers", "attn_heads", "d_model", "d_ff",
                           "vocab_size", "max_sequence_length"):
            if getattr(self, field_name) < 1:
                raise ValueError(f"{field_name} must be positive")
        if self.n_domains < 0:
            raise ValueError("n_domains must be >= 0")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["mode"] = self.mode.value
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ModelConfig":
        return cls(**d)


def desk_config(vocab_size, n_domains, mode=ConditioningMode.NONE, mask_probability=None) -> ModelConfig:
    """Trains in minutes on CPU; keeps the 2:1 encoder/decoder depth ratio."""
    mode = ConditioningMode(mode)
    if mask_probability is None:
        mask_probability = 0.2 if mode == ConditioningMode.ADDITIVE_INTERVENTION else 0.0
    return ModelConfig(
        vocab_size=vocab_size,
        n_domains=n_domains,
        enc_layers=4,
        dec_layers=2,
        attn_heads=4,
        d_model=64,
        d_ff=256,
        dropout=0.1,
        mode=mode,
        mask_probability=mask_probability,
        max_sequence_length=64,
    )


def paper_shape_config(vocab_size, n_domains, mode=ConditioningMode.NONE) -> ModelConfig:
    """Full-size architecture preset (12/6 layers, d=1024, ff=4096, 8 heads)."""
    mode = ConditioningMode(mode)
    return ModelConfig(
        vocab_size=vocab_size,
        n_domains=n_domains,
        enc_layers=12,
        dec_layers=6,
        attn_heads=8,
        d_model=1024,
        d_ff=4096,
        dropout=0.1,
        mode=mode,
        mask_probability=0.2 if mode == ConditioningMode.ADDITIVE_INTERVENTION else 0.0,
        max_sequence_length=1024,
    )


def micro_config(vocab_size, n_domains, mode=ConditioningMode.NONE, mask_probability=None) -> ModelConfig:
    """Tiny shape for gradient checking: 2+2 layers, d_model=8, 2 heads."""
    mode = ConditioningMode(mode)
    if mask_probability is None:
        mask_probability = 0.2 if mode == ConditioningMode.ADDITIVE_INTERVENTION else 0.0
    return ModelConfig(
        vocab_size=vocab_size,
        n_domains=n_domains,
        enc_layers=2,
        dec_layers=2,
        attn_heads=2,
        d_model=8,
        d_ff=16,
        dropout=0.0,
        mode=mode,
        mask_probability=mask_probability,
        max_sequence_length=16,
    )
