"""Bias-corrected Adam over named parameter dicts."""

from __future__ import annotations

import numpy as np


class NonFiniteGradient(RuntimeError):
    """A gradient contained NaN or Inf; the step was aborted untouched."""


class AdamState:
    """First/second moment accumulators, one pair per named parameter."""

    def __init__(self, m: dict, v: dict):
        self.m = m
        self.v = v

    @classmethod
    def zeros_like(cls, params: dict) -> "AdamState":
        return cls(
            {k: np.zeros_like(p) for k, p in params.items()},
            {k: np.zeros_like(p) for k, p in params.items()},
        )


def adam_step(
    params: dict,
    grads: dict,
    state: AdamState,
    lr: float,
    beta1: float = 0.9,
    beta2: float = 0.999,
    eps: float = 1e-8,
    t: int = 1,
):
    """Apply one Adam update in place; t is the 1-based step count.

    All gradients are checked for finiteness before anything is mutated,
    so a non-finite gradient leaves parameters and state untouched.
    """
    if t < 1:
        raise ValueError("adam_step: t must be >= 1")
    for name, g in grads.items():
        if g.shape != params[name].shape:
            raise ValueError(f"adam_step: shape mismatch for {name}")
        if not np.all(np.isfinite(g)):
            raise NonFiniteGradient(f"non-finite gradient for {name}")

    bc1 = 1.0 - beta1**t
    bc2 = 1.0 - beta2**t
    for name, g in grads.items():
        m = state.m[name]
        v = state.v[name]
        m *= beta1
        m += (1.0 - beta1) * g
        v *= beta2
        v += (1.0 - beta2) * (g * g)
        params[name] -= lr * (m / bc1) / (np.sqrt(v / bc2) + eps)
    return params, state
