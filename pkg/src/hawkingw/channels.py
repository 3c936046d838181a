"""Kraus channels acting qubit-by-qubit on multi-qubit states."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .cxmat import DensityMatrix, as_matrix, tensor_all


@dataclass(frozen=True)
class KrausChannel:
    operators: tuple[np.ndarray, ...]

    def __post_init__(self):
        ops = tuple(as_matrix(e) for e in self.operators)
        if not ops:
            raise ValueError("a channel needs at least one Kraus operator")
        if any(e.shape != ops[0].shape for e in ops):
            raise ValueError("Kraus operators must share one shape")
        object.__setattr__(self, "operators", ops)

    def completeness_error(self) -> float:
        s = sum(e.conj().T @ e for e in self.operators)
        return float(np.max(np.abs(s - np.eye(s.shape[0]))))

    def is_complete(self, tol: float = 1e-12) -> bool:
        return self.completeness_error() <= tol


def ad_kraus(gamma: float) -> KrausChannel:
    """Amplitude damping with decay probability ``gamma``."""
    gamma = float(gamma)
    if not 0.0 <= gamma <= 1.0:
        raise ValueError("damping probability out of range")
    e0 = np.array([[1.0, 0.0], [0.0, math.sqrt(1.0 - gamma)]], dtype=np.complex128)
    e1 = np.array([[0.0, math.sqrt(gamma)], [0.0, 0.0]], dtype=np.complex128)
    return KrausChannel((e0, e1))


def apply_product_channel(rho: DensityMatrix, per_qubit: Sequence[KrausChannel]) -> DensityMatrix:
    """Apply ``per_qubit[k]`` to subsystem ``k`` of ``rho``.

    Kraus index tuples are enumerated in mixed-radix order (last subsystem
    fastest).
    """
    if len(per_qubit) != len(rho.dims):
        raise ValueError(
            f"{len(per_qubit)} channels given for {len(rho.dims)} subsystems"
        )
    for k, (ch, d) in enumerate(zip(per_qubit, rho.dims)):
        if ch.operators[0].shape != (d, d):
            raise ValueError(f"channel {k} acts on dim {ch.operators[0].shape[0]}, subsystem has dim {d}")

    m = rho.matrix
    out = np.zeros_like(m)
    for ops in itertools.product(*(ch.operators for ch in per_qubit)):
        k = tensor_all(ops)
        out += k @ m @ k.conj().T
    # restore exact Hermiticity lost to summation order
    out = 0.5 * (out + out.conj().T)
    return DensityMatrix(out, rho.dims, rho.labels)


def apply_uniform_ad(rho: DensityMatrix, gamma: float) -> DensityMatrix:
    ch = ad_kraus(gamma)
    return apply_product_channel(rho, [ch] * len(rho.dims))
