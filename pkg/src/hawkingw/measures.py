"""Coherence and entanglement measures for three-qubit density matrices.

Concurrence-fill is defined for pure states. It is applied here to mixed
reductions as well, using one-to-rest concurrences ``2 sqrt(det rho_i)`` of
the single-qubit marginals. This follows the published computation and is
not a general mixed-state genuine-multipartite measure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cxmat import DensityMatrix, det2, partial_trace

ROUNDOFF = 1e-12
# |Q - C_i^2| below this is cancellation noise, taken as 0 before the 4th root
FACTOR_EPS = 1e-14


@dataclass(frozen=True)
class MeasureReport:
    c_l1: float
    foc: float
    gc: float
    cf: float
    tradeoff: float
    cf_clamped: bool = False

    def as_dict(self) -> dict:
        return {
            "c_l1": self.c_l1,
            "foc": self.foc,
            "gc": self.gc,
            "cf": self.cf,
            "tradeoff": self.tradeoff,
            "cf_clamped": self.cf_clamped,
        }


def _require_qubits(rho: DensityMatrix):
    if rho.dims != (2, 2, 2):
        raise ValueError(f"expected three qubits, got dims {rho.dims}")


def l1_coherence(rho: DensityMatrix) -> float:
    m = np.abs(rho.matrix)
    return float(m.sum() - np.trace(m))


def foc_single(rho: DensityMatrix) -> float:
    m = rho.matrix
    if m.shape != (2, 2):
        raise ValueError("foc_single needs a qubit state")
    purity = float(np.sum(np.abs(m) ** 2))
    return math.sqrt(max(0.0, 2.0 * purity - 1.0))


def single_qubit_marginals(rho: DensityMatrix) -> list[DensityMatrix]:
    _require_qubits(rho)
    return [partial_trace(rho, [k]) for k in range(3)]


def foc_tripartite(rho: DensityMatrix) -> float:
    ds = [foc_single(r) for r in single_qubit_marginals(rho)]
    return math.sqrt(sum(d * d for d in ds) / 3.0)


def one_to_rest_concurrence(rho: DensityMatrix, which: int) -> float:
    _require_qubits(rho)
    if which not in (0, 1, 2):
        raise IndexError("subsystem out of range")
    return 2.0 * math.sqrt(max(0.0, det2(partial_trace(rho, [which]).matrix)))


def _gc_from_squares(sq: list[float]) -> float:
    return 0.5 * sum(sq)


def _cf_from_squares(sq: list[float]) -> tuple[float, bool]:
    q = _gc_from_squares(sq)
    factors = [q - s for s in sq]
    factors = [0.0 if abs(f) < FACTOR_EPS else f for f in factors]
    radicand = (16.0 / 3.0) * q * factors[0] * factors[1] * factors[2]
    if radicand < 0:
        return 0.0, radicand < -ROUNDOFF
    if radicand == 0:
        return 0.0, False
    return math.exp(math.log(radicand) / 4.0), False


def _concurrence_squares(marginals: list[DensityMatrix]) -> list[float]:
    return [4.0 * max(0.0, det2(r.matrix)) for r in marginals]


def global_concurrence(rho: DensityMatrix) -> float:
    return _gc_from_squares(_concurrence_squares(single_qubit_marginals(rho)))


def concurrence_fill(rho: DensityMatrix) -> tuple[float, bool]:
    """Concurrence-fill and whether a negative radicand was clamped to 0.

    Differences ``Q - C_i^2`` smaller than 1e-14 are taken as exactly zero,
    and round-off negatives of the radicand below 1e-12 in magnitude are
    zeroed without setting the flag.
    """
    return _cf_from_squares(_concurrence_squares(single_qubit_marginals(rho)))


def full_report(rho: DensityMatrix) -> MeasureReport:
    marginals = single_qubit_marginals(rho)
    ds = [foc_single(r) for r in marginals]
    foc = math.sqrt(sum(d * d for d in ds) / 3.0)
    sq = _concurrence_squares(marginals)
    cf, clamped = _cf_from_squares(sq)
    return MeasureReport(
        c_l1=l1_coherence(rho),
        foc=foc,
        gc=_gc_from_squares(sq),
        cf=cf,
        tradeoff=foc * foc + cf,
        cf_clamped=clamped,
    )
