"""Finite-difference verification of tape gradients."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tensor import Tape, Tensor


@dataclass
class CoordError:
    param: str
    index: tuple
    analytic: float
    numeric: float
    rel_error: float


@dataclass
class GradCheckReport:
    max_rel_error: float
    n_coords: int
    worst: CoordError | None

    def ok(self, tol: float) -> bool:
        return self.max_rel_error < tol


def grad_check(
    f,
    params: dict[str, Tensor],
    h: float = 1e-3,
    rng: np.random.Generator | None = None,
    max_coords: int | None = None,
    denom_floor: float = 1e-2,
) -> GradCheckReport:
    """Compare tape gradients of scalar f(params) against central differences.

    f must be deterministic. Coordinates are sampled without replacement
    across all parameters when max_coords is set; otherwise every coordinate
    is checked. The relative error divides by max(|analytic|, |numeric|,
    denom_floor) so that near-zero gradients are judged on an absolute scale.
    """
    if h <= 0:
        raise ValueError("grad_check: h must be > 0")
    for p in params.values():
        p.zero_grad()
    with Tape() as tape:
        loss = f(params)
        tape.backward(loss)
    analytic = {
        name: (p.grad if p.grad is not None else np.zeros_like(p.data))
        for name, p in params.items()
    }

    coords = []
    for name, p in params.items():
        for idx in np.ndindex(p.data.shape):
            coords.append((name, idx))
    if max_coords is not None and len(coords) > max_coords:
        if rng is None:
            rng = np.random.default_rng(0)
        picked = rng.choice(len(coords), size=max_coords, replace=False)
        coords = [coords[i] for i in sorted(picked)]

    worst = None
    for name, idx in coords:
        p = params[name]
        orig = p.data[idx]
        p.data[idx] = orig + h
        f_plus = float(f(params).data)
        p.data[idx] = orig - h
        f_minus = float(f(params).data)
        p.data[idx] = orig
        numeric = (f_plus - f_minus) / (2.0 * h)
        a = float(analytic[name][idx])
        rel = abs(a - numeric) / max(abs(a), abs(numeric), denom_floor)
        if worst is None or rel > worst.rel_error:
            worst = CoordError(name, idx, a, numeric, rel)
    return GradCheckReport(
        max_rel_error=worst.rel_error if worst else 0.0,
        n_coords=len(coords),
        worst=worst,
    )
