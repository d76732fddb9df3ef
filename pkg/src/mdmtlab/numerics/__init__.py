from .adam import AdamState, NonFiniteGradient, adam_step
from .gradcheck import GradCheckReport, grad_check
from .tensor import (
    ShapeError,
    Tape,
    Tensor,
    add,
    add_const,
    broadcast_add,
    broadcast_add_rows,
    cross_entropy_label_smoothed,
    current_tape,
    dropout,
    embedding,
    intervention_rows,
    layer_norm,
    matmul,
    mul,
    mul_const,
    relu,
    reshape,
    softmax,
    sum_all,
    transpose,
)

__all__ = [
    "AdamState",
    "NonFiniteGradient",
    "adam_step",
    "GradCheckReport",
    "grad_check",
    "ShapeError",
    "Tape",
    "Tensor",
    "add",
    "add_const",
    "broadcast_add",
    "broadcast_add_rows",
    "cross_entropy_label_smoothed",
    "current_tape",
    "dropout",
    "embedding",
    "intervention_rows",
    "layer_norm",
    "matmul",
    "mul",
    "mul_const",
    "relu",
    "reshape",
    "softmax",
    "sum_all",
    "transpose",
]
