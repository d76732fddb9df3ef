"""Dense float64 tensors with reverse-mode autodiff on an explicit tape.

The op surface is the minimum needed by an encoder-decoder transformer:
elementwise arithmetic, matmul, softmax, layer norm, embedding lookups,
and a label-smoothed cross-entropy head. Everything is eager; when a Tape
is active, each op appends a backward closure, and Tape.backward replays
the closures in exact reverse order.

Backward closures may hand views (e.g. reshaped upstream gradients) to
_accumulate. That is safe because by the time a producer's backward runs,
every consumer of its output has already finished accumulating; closures
must not mutate upstream gradient buffers in place.
"""

from __future__ import annotations

import threading

import numpy as np

_tls = threading.local()


def _tape_stack():
    if not hasattr(_tls, "stack"):
        _tls.stack = []
    return _tls.stack


def current_tape():
    stack = _tape_stack()
    return stack[-1] if stack else None


class ShapeError(ValueError):
    """Operands have incompatible shapes."""


class Tensor:
    """Dense row-major float64 array plus an optional gradient buffer."""

    __slots__ = ("data", "grad", "requires_grad")

    def __init__(self, data, requires_grad=False):
        self.data = np.ascontiguousarray(data, dtype=np.float64)
        self.grad = None
        self.requires_grad = requires_grad

    @property
    def shape(self):
        return self.data.shape

    def zero_grad(self):
        self.grad = None

    def __repr__(self):
        return f"Tensor(shape={self.data.shape}, requires_grad={self.requires_grad})"


class Tape:
    """Ordered record of executed ops; backward visits the reverse order."""

    def __init__(self):
        self._backwards = []

    def __enter__(self):
        _tape_stack().append(self)
        return self

    def __exit__(self, exc_type, exc, tb):
        popped = _tape_stack().pop()
        assert popped is self
        return False

    def __len__(self):
        return len(self._backwards)

    def record(self, backward):
        self._backwards.append(backward)

    def backward(self, loss: Tensor):
        """Seed d(loss)/d(loss) = 1 and propagate through the tape in reverse."""
        if loss.data.shape != ():
            raise ShapeError("backward expects a scalar loss")
        loss.grad = np.array(1.0)
        for fn in reversed(self._backwards):
            fn()


def _accumulate(t: Tensor, g: np.ndarray):
    if not t.requires_grad:
        return
    if t.grad is None:
        t.grad = g
    else:
        t.grad = t.grad + g


def _result(data, inputs, backward_builder):
    """Make the output tensor and, if a tape is live, record the backward."""
    tape = current_tape()
    tracked = tape is not None and any(t.requires_grad for t in inputs)
    out = Tensor.__new__(Tensor)
    out.data = data
    out.grad = None
    out.requires_grad = tracked
    if tracked:
        tape.record(backward_builder(out))
    return out


# ---------------------------------------------------------------------------
# elementwise / structural ops


def add(a: Tensor, b: Tensor) -> Tensor:
    if a.data.shape != b.data.shape:
        raise ShapeError(f"add: {a.data.shape} vs {b.data.shape}")

    def bw(out):
        def fn():
            _accumulate(a, out.grad)
            _accumulate(b, out.grad)
        return fn

    return _result(a.data + b.data, (a, b), bw)


def broadcast_add(h: Tensor, v: Tensor) -> Tensor:
    """h[..., j] + v[j]; the gradient of v sums over all leading axes."""
    if v.data.ndim != 1 or h.data.ndim < 1 or h.data.shape[-1] != v.data.shape[0]:
        raise ShapeError(f"broadcast_add: {h.data.shape} vs {v.data.shape}")
    lead = tuple(range(h.data.ndim - 1))

    def bw(out):
        def fn():
            _accumulate(h, out.grad)
            _accumulate(v, out.grad.sum(axis=lead) if lead else out.grad)
        return fn

    return _result(h.data + v.data, (h, v), bw)


def broadcast_add_rows(h: Tensor, v: Tensor) -> Tensor:
    """h[..., i, j] + v[..., j]: per-example vectors broadcast over the token
    axis; the gradient of v sums over that axis."""
    if h.data.ndim < 2 or v.data.shape != h.data.shape[:-2] + h.data.shape[-1:]:
        raise ShapeError(f"broadcast_add_rows: {h.data.shape} vs {v.data.shape}")

    def bw(out):
        def fn():
            _accumulate(h, out.grad)
            _accumulate(v, out.grad.sum(axis=-2))
        return fn

    return _result(h.data + v.data[..., None, :], (h, v), bw)


def add_const(a: Tensor, c) -> Tensor:
    """Add a constant array or scalar; no gradient flows into the constant."""

    def bw(out):
        def fn():
            _accumulate(a, out.grad)
        return fn

    return _result(a.data + c, (a,), bw)


def mul(a: Tensor, b: Tensor) -> Tensor:
    if a.data.shape != b.data.shape:
        raise ShapeError(f"mul: {a.data.shape} vs {b.data.shape}")

    def bw(out):
        def fn():
            _accumulate(a, out.grad * b.data)
            _accumulate(b, out.grad * a.data)
        return fn

    return _result(a.data * b.data, (a, b), bw)


def mul_const(a: Tensor, c) -> Tensor:
    def bw(out):
        def fn():
            _accumulate(a, out.grad * c)
        return fn

    return _result(a.data * c, (a,), bw)


def matmul(a: Tensor, b: Tensor) -> Tensor:
    """a @ b where either both carry identical leading dims or b is 2-D.

    With b 2-D (the linear-layer case), the gradient of b sums over every
    leading axis of a.
    """
    ad, bd = a.data, b.data
    if ad.ndim < 2 or bd.ndim < 2 or ad.shape[-1] != bd.shape[-2]:
        raise ShapeError(f"matmul: {ad.shape} vs {bd.shape}")
    if bd.ndim != 2 and ad.shape[:-2] != bd.shape[:-2]:
        raise ShapeError(f"matmul: leading dims {ad.shape} vs {bd.shape}")

    def bw(out):
        def fn():
            g = out.grad
            if a.requires_grad:
                _accumulate(a, g @ np.swapaxes(bd, -1, -2))
            if b.requires_grad:
                if bd.ndim == 2:
                    ga = ad.reshape(-1, ad.shape[-1])
                    gg = g.reshape(-1, g.shape[-1])
                    _accumulate(b, ga.T @ gg)
                else:
                    _accumulate(b, np.swapaxes(ad, -1, -2) @ g)
        return fn

    return _result(ad @ bd, (a, b), bw)


def transpose(a: Tensor, axes) -> Tensor:
    axes = tuple(axes)
    inv = tuple(int(np.argsort(axes)[i]) for i in range(len(axes)))

    def bw(out):
        def fn():
            _accumulate(a, np.ascontiguousarray(out.grad.transpose(inv)))
        return fn

    return _result(np.ascontiguousarray(a.data.transpose(axes)), (a,), bw)


def reshape(a: Tensor, shape) -> Tensor:
    shape = tuple(shape)

    def bw(out):
        def fn():
            _accumulate(a, out.grad.reshape(a.data.shape))
        return fn

    return _result(a.data.reshape(shape), (a,), bw)


def relu(a: Tensor) -> Tensor:
    mask = a.data > 0

    def bw(out):
        def fn():
            _accumulate(a, out.grad * mask)
        return fn

    return _result(np.where(mask, a.data, 0.0), (a,), bw)


def sum_all(a: Tensor) -> Tensor:
    def bw(out):
        def fn():
            _accumulate(a, np.full(a.data.shape, out.grad))
        return fn

    return _result(np.asarray(a.data.sum()), (a,), bw)


# ---------------------------------------------------------------------------
# normalization / attention ops


def softmax(a: Tensor, axis: int = -1) -> Tensor:
    """Max-subtracted softmax along one axis."""
    x = a.data
    if not -x.ndim <= axis < x.ndim:
        raise ShapeError(f"softmax: axis {axis} invalid for shape {x.shape}")
    shifted = x - x.max(axis=axis, keepdims=True)
    e = np.exp(shifted)
    p = e / e.sum(axis=axis, keepdims=True)

    def bw(out):
        def fn():
            g = out.grad
            dot = (g * p).sum(axis=axis, keepdims=True)
            _accumulate(a, p * (g - dot))
        return fn

    return _result(p, (a,), bw)


def layer_norm(a: Tensor, gain: Tensor, bias: Tensor, eps: float = 1e-5) -> Tensor:
    """Normalize the last axis to zero mean / unit variance, then affine.

    Population variance with eps stabilization, per row.
    """
    d = a.data.shape[-1]
    if gain.data.shape != (d,) or bias.data.shape != (d,):
        raise ShapeError("layer_norm: gain/bias must match the last axis")
    if eps <= 0 and np.any(a.data.var(axis=-1) == 0):
        raise ValueError("layer_norm: eps must be > 0 for zero-variance rows")
    mean = a.data.mean(axis=-1, keepdims=True)
    centered = a.data - mean
    var = (centered * centered).mean(axis=-1, keepdims=True)
    inv_std = 1.0 / np.sqrt(var + eps)
    norm = centered * inv_std
    lead = tuple(range(a.data.ndim - 1))

    def bw(out):
        def fn():
            g = out.grad
            if gain.requires_grad:
                _accumulate(gain, (g * norm).sum(axis=lead) if lead else g * norm)
            if bias.requires_grad:
                _accumulate(bias, g.sum(axis=lead) if lead else g)
            if a.requires_grad:
                gx = g * gain.data
                da = inv_std * (
                    gx
                    - gx.mean(axis=-1, keepdims=True)
                    - norm * (gx * norm).mean(axis=-1, keepdims=True)
                )
                _accumulate(a, da)
        return fn

    return _result(norm * gain.data + bias.data, (a, gain, bias), bw)


def embedding(table: Tensor, ids: np.ndarray) -> Tensor:
    """Row gather: out[..., :] = table[ids[...]]."""
    ids = np.asarray(ids)
    if ids.size and (ids.min() < 0 or ids.max() >= table.data.shape[0]):
        raise ShapeError("embedding: id out of range")

    def bw(out):
        def fn():
            g = np.zeros_like(table.data)
            np.add.at(g, ids.reshape(-1), out.grad.reshape(-1, table.data.shape[1]))
            _accumulate(table, g)
        return fn

    return _result(table.data[ids], (table,), bw)


def intervention_rows(table: Tensor, rows: np.ndarray) -> Tensor:
    """Gather intervention vectors; row 0 is the frozen pad row.

    Examples that select row 0 receive an exact zero vector and contribute
    no gradient, so the pad row is never read nor updated.
    """
    rows = np.asarray(rows)
    if rows.size and (rows.min() < 0 or rows.max() >= table.data.shape[0]):
        raise ShapeError("intervention_rows: row index out of range")
    live = rows != 0
    data = np.where(live[:, None], table.data[rows], 0.0)

    def bw(out):
        def fn():
            g = np.zeros_like(table.data)
            np.add.at(g, rows[live], out.grad[live])
            _accumulate(table, g)
        return fn

    return _result(data, (table,), bw)


def dropout(a: Tensor, p: float, rng: np.random.Generator) -> Tensor:
    """Inverted dropout; call only on the training path."""
    if p <= 0.0:
        return a
    keep = rng.random(a.data.shape) >= p
    return mul_const(a, keep / (1.0 - p))


# ---------------------------------------------------------------------------
# loss


def cross_entropy_label_smoothed(
    logits: Tensor, targets: np.ndarray, eps_ls: float, pad_id: int
) -> Tensor:
    """Mean label-smoothed cross-entropy over non-pad positions.

    Per position: (1 - eps_ls) * NLL(target) + eps_ls * mean_k NLL(k).
    Positions whose target equals pad_id are excluded from the mean.
    """
    if not 0.0 <= eps_ls < 1.0:
        raise ValueError("eps_ls must be in [0, 1)")
    x = logits.data
    if x.ndim != 2:
        raise ShapeError("cross_entropy expects [n, vocab] logits")
    targets = np.asarray(targets)
    if targets.shape != (x.shape[0],):
        raise ShapeError("targets must be [n]")
    vocab = x.shape[1]
    if targets.size and (targets.min() < 0 or targets.max() >= vocab):
        raise ValueError("target id out of range")
    keep = targets != pad_id
    n_keep = int(keep.sum())
    if n_keep == 0:
        raise ValueError("all positions are padding; loss undefined")

    shifted = x - x.max(axis=1, keepdims=True)
    logz = np.log(np.exp(shifted).sum(axis=1, keepdims=True))
    logp = shifted - logz
    nll_target = -logp[np.arange(x.shape[0]), targets]
    nll_mean = -logp.mean(axis=1)
    per_pos = (1.0 - eps_ls) * nll_target + eps_ls * nll_mean
    value = per_pos[keep].sum() / n_keep

    def bw(out):
        def fn():
            p = np.exp(logp)
            smooth = np.full_like(p, eps_ls / vocab)
            smooth[np.arange(x.shape[0]), targets] += 1.0 - eps_ls
            dlogits = (p - smooth) * (keep[:, None] / n_keep) * out.grad
            _accumulate(logits, dlogits)
        return fn

    return _result(np.asarray(value), (logits,), bw)
