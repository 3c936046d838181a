"""Dense complex linear algebra for small multi-qubit registers.

Matrices are plain ``numpy`` complex arrays. Register layout is
most-significant-qubit-first everywhere: for subsystems ``(d0, d1, ...)``
the basis index of ``|i0 i1 ...>`` is ``i0*d1*d2*... + i1*d2*... + ...``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

import numpy as np

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = -1e-10
JACOBI_TOL = 1e-14


class NotHermitianError(ValueError):
    pass


def as_matrix(m) -> np.ndarray:
    """Return ``m`` as a square complex128 array (copying nothing if already one)."""
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    return arr


def is_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    m = as_matrix(m)
    return bool(np.max(np.abs(m - m.conj().T), initial=0.0) <= tol)


def tensor(a, b) -> np.ndarray:
    """Kronecker product with ``a``'s indices most significant."""
    return np.kron(as_matrix(a), as_matrix(b))


def tensor_all(mats: Iterable) -> np.ndarray:
    out = np.ones((1, 1), dtype=np.complex128)
    for m in mats:
        out = tensor(out, m)
    return out


def det2(m) -> float:
    """Real determinant ``m00*m11 - |m01|^2`` of a 2x2 Hermitian matrix."""
    m = as_matrix(m)
    if m.shape != (2, 2):
        raise ValueError(f"det2 needs a 2x2 matrix, got {m.shape}")
    if not is_hermitian(m):
        raise NotHermitianError("not Hermitian")
    return float(m[0, 0].real * m[1, 1].real - abs(m[0, 1]) ** 2)


def _max_offdiag(a: np.ndarray) -> float:
    n = a.shape[0]
    if n < 2:
        return 0.0
    off = np.abs(a[~np.eye(n, dtype=bool)])
    return float(off.max())


def hermitian_eigenvalues(m, max_sweeps: int = 100) -> list[float]:
    """Eigenvalues of a complex Hermitian matrix by cyclic Jacobi rotations.

    Each rotation zeroes one off-diagonal pair ``(p, q)``; sweeps repeat until
    the largest off-diagonal modulus drops below ``JACOBI_TOL``.

    Returns the eigenvalues in ascending order.

    Raises
    ------
    NotHermitianError
        If ``m`` deviates from its conjugate transpose by more than 1e-12.
    """
    a = as_matrix(m)
    if not is_hermitian(a):
        raise NotHermitianError("not Hermitian")
    a = 0.5 * (a + a.conj().T)
    n = a.shape[0]

    for _ in range(max_sweeps):
        if _max_offdiag(a) < JACOBI_TOL:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mod = abs(apq)
                if mod < JACOBI_TOL:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                # Phase-rotate (p, q) to a real symmetric 2x2 block, then
                # apply the classical real Jacobi angle.
                phase = apq / mod
                theta = (aqq - app) / (2.0 * mod)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # Unitary G acting on columns p, q:
                #   col_p' = c*col_p - s*conj(phase)*col_q
                #   col_q' = s*phase*col_p + c*col_q
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * np.conj(phase) * cq
                a[:, q] = s * phase * cp + c * cq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * phase * rq
                a[q, :] = s * np.conj(phase) * rp + c * rq
                a[p, q] = 0.0
                a[q, p] = 0.0
    else:
        raise RuntimeError("Jacobi iteration did not converge")

    return sorted(float(x) for x in np.real(np.diag(a)))


@dataclass(frozen=True)
class PureState:
    """Normalized amplitude vector over a labelled qubit register."""

    amplitudes: np.ndarray
    labels: tuple[str, ...]

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128).reshape(-1)
        labels = tuple(self.labels)
        if amps.size != 2 ** len(labels):
            raise ValueError(
                f"{amps.size} amplitudes do not fit a {len(labels)}-qubit register"
            )
        norm = float(np.vdot(amps, amps).real)
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"state not normalized (norm^2 = {norm!r})")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "labels", labels)

    @property
    def n_qubits(self) -> int:
        return len(self.labels)

    def amplitude(self, bits: str) -> complex:
        return complex(self.amplitudes[int(bits, 2)])

    def density(self) -> "DensityMatrix":
        v = self.amplitudes
        return DensityMatrix(np.outer(v, v.conj()), (2,) * self.n_qubits, self.labels)


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace matrix over a product of subsystems.

    Hermiticity and trace are enforced on construction. Positivity costs an
    eigen-decomposition, so it is checked on demand by :meth:`validate`.
    """

    matrix: np.ndarray
    dims: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        m = as_matrix(self.matrix).copy()
        dims = tuple(int(d) for d in self.dims)
        if not dims or any(d < 1 for d in dims):
            raise ValueError(f"bad subsystem dims {dims}")
        if prod(dims) != m.shape[0]:
            raise ValueError(f"dims {dims} do not match matrix size {m.shape[0]}")
        if self.labels is not None and len(self.labels) != len(dims):
            raise ValueError("one label per subsystem required")
        if not is_hermitian(m):
            raise NotHermitianError("not Hermitian")
        tr = np.trace(m)
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"trace {tr!r} differs from 1")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", dims)
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def eigenvalues(self) -> list[float]:
        return hermitian_eigenvalues(self.matrix)

    def min_eigenvalue(self) -> float:
        return self.eigenvalues()[0]

    def validate(self) -> None:
        """Raise ``ValueError`` unless the matrix is positive semidefinite."""
        lo = self.min_eigenvalue()
        if lo < PSD_TOL:
            raise ValueError(f"not positive semidefinite (min eigenvalue {lo!r})")

    def is_valid(self) -> bool:
        try:
            self.validate()
        except ValueError:
            return False
        return True


def partial_trace(rho: DensityMatrix, keep: Sequence[int]) -> DensityMatrix:
    """Trace out every subsystem not listed in ``keep``.

    The kept subsystems appear in their original order regardless of the
    order given in ``keep``.
    """
    n = len(rho.dims)
    kept = sorted(set(int(k) for k in keep))
    if not kept:
        raise ValueError("keep must name at least one subsystem")
    if kept[0] < 0 or kept[-1] >= n:
        raise IndexError("subsystem out of range")

    traced = [i for i in range(n) if i not in kept]
    t = rho.matrix.reshape(rho.dims + rho.dims)
    # Contract matching bra/ket axes from the highest index down so earlier
    # axis numbers stay valid.
    for i in reversed(traced):
        cur = t.ndim // 2
        t = np.trace(t, axis1=i, axis2=i + cur)
    kdims = tuple(rho.dims[k] for k in kept)
    d = prod(kdims)
    labels = None if rho.labels is None else tuple(rho.labels[k] for k in kept)
    return DensityMatrix(t.reshape(d, d), kdims, labels)


def permute_subsystems(rho: DensityMatrix, order: Sequence[int]) -> DensityMatrix:
    """Reorder subsystems so that new position ``i`` holds old subsystem ``order[i]``."""
    n = len(rho.dims)
    order = list(order)
    if sorted(order) != list(range(n)):
        raise ValueError(f"{order} is not a permutation of {n} subsystems")
    t = rho.matrix.reshape(rho.dims + rho.dims)
    t = t.transpose(order + [n + i for i in order])
    dims = tuple(rho.dims[i] for i in order)
    labels = None if rho.labels is None else tuple(rho.labels[i] for i in order)
    return DensityMatrix(t.reshape(rho.dim, rho.dim), dims, labels)
