"""Fermionic mode splitting near a Schwarzschild horizon.

A Kruskal mode seen by an observer hovering outside the horizon splits into
an exterior particle mode (out) and an interior antiparticle mode (in):

    |0>_K -> alpha |0>_out |0>_in + beta |1>_out |1>_in
    |1>_K -> |1>_out |0>_in

with alpha^2 = 1 / (1 + exp(-omega/T)) and beta^2 = 1 / (1 + exp(omega/T)).
Units are natural (G = c = hbar = k_B = 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cxmat import PureState

REGISTER = ("A", "B", "b", "C", "c")


@dataclass(frozen=True)
class ModeParams:
    T: float
    omega: float
    alpha: float
    beta: float


def _logistic(x: float) -> float:
    # 1 / (1 + exp(-x)) without overflow for large |x|
    if x >= 0:
        return 1.0 / (1.0 + math.exp(-x))
    z = math.exp(x)
    return z / (1.0 + z)


def bogoliubov(T: float, omega: float = 1.0) -> ModeParams:
    """Bogoliubov coefficients for Hawking temperature ``T`` and frequency ``omega``.

    ``T = 0`` and ``T = inf`` are exact limits: (1, 0) and (1/sqrt2, 1/sqrt2).
    """
    T = float(T)
    omega = float(omega)
    if not omega > 0 or math.isinf(omega):
        raise ValueError("frequency must be positive")
    if math.isnan(T) or T < 0:
        raise ValueError(f"temperature must be >= 0, got {T!r}")

    if T == 0:
        return ModeParams(T, omega, 1.0, 0.0)
    if math.isinf(T):
        r = math.sqrt(0.5)
        return ModeParams(T, omega, r, r)

    x = omega / T
    alpha2 = _logistic(x)
    beta2 = _logistic(-x)
    return ModeParams(T, omega, math.sqrt(alpha2), math.sqrt(beta2))


def temperature_from_mass(mass: float) -> float:
    """Hawking temperature 1/(8 pi M) of a black hole of mass ``M``."""
    if not mass > 0:
        raise ValueError("mass must be positive")
    return 1.0 / (8.0 * math.pi * mass)


def dilate_mode(psi: PureState, mode_index: int, params: ModeParams,
                label: str | None = None) -> PureState:
    """Split qubit ``mode_index`` of ``psi`` into an (out, in) pair.

    The new interior qubit is inserted right after ``mode_index``. Its label
    defaults to the lower-cased label of the dilated qubit.
    """
    n = psi.n_qubits
    if not 0 <= mode_index < n:
        raise IndexError(f"mode index {mode_index} out of range for {n} qubits")

    a, b = params.alpha, params.beta
    t = np.asarray(psi.amplitudes).reshape((2,) * n)
    zero = np.take(t, 0, axis=mode_index)
    one = np.take(t, 1, axis=mode_index)

    # output axes: ..., out (mode_index), in (mode_index + 1), ...
    shape = list(zero.shape)
    shape[mode_index:mode_index] = [2, 2]
    out = np.zeros(shape, dtype=np.complex128)

    def put(o: int, i: int, block):
        idx = [slice(None)] * len(shape)
        idx[mode_index] = o
        idx[mode_index + 1] = i
        out[tuple(idx)] += block

    put(0, 0, a * zero)
    put(1, 1, b * zero)
    put(1, 0, one)

    labels = list(psi.labels)
    new_label = label if label is not None else labels[mode_index].lower()
    labels.insert(mode_index + 1, new_label)
    return PureState(out.reshape(-1), tuple(labels))


def build_dilated_w(params_B: ModeParams, params_C: ModeParams | None = None) -> PureState:
    """W state shared by A, B, C with B and C dilated; register ``A,B,b,C,c``."""
    from .states import w_state

    if params_C is None:
        params_C = params_B
    psi = dilate_mode(w_state(), 1, params_B)   # A, B, b, C
    psi = dilate_mode(psi, 3, params_C)         # A, B, b, C, c
    assert psi.labels == REGISTER
    return psi
