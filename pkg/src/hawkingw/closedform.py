"""Analytic expressions for the dilated W state, used as an independent oracle.

Everything here is transcribed from printed formulas and entry tables. Nothing
is shared with the numeric pipeline (``states``, ``measures``, ``channels``)
apart from the ``DensityMatrix`` / ``MeasureReport`` containers, so a bug in
either route shows up as a disagreement in :func:`verify_point`.

When a printed entry disagrees with the numeric route the harness reports
both values under the entry's symbolic name (``a_46``, ``rho_ABc[3,5]``, ...)
rather than deciding which is right.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .cxmat import DensityMatrix
from .measures import MeasureReport
from .modes import ModeParams

ROUNDOFF = 1e-12
FACTOR_EPS = 1e-14

# which single-mode marginals make up each scenario
SCENARIO_MODES = {
    "ABC": ("A", "B", "C"),
    "Abc": ("A", "b", "c"),
    "ABc": ("A", "B", "c"),
}
TABLE_LETTER = {"ABC": "a", "Abc": "b", "ABc": "c"}


def _label(scenario) -> str:
    label = getattr(scenario, "label", scenario)
    if label not in SCENARIO_MODES:
        raise ValueError(f"no closed form for scenario {label!r}")
    return label


def _symmetric(entries: dict[tuple[int, int], float]) -> np.ndarray:
    """8x8 matrix from 1-indexed upper-triangle entries, mirrored."""
    m = np.zeros((8, 8), dtype=np.complex128)
    for (i, j), v in entries.items():
        m[i - 1, j - 1] = v
        m[j - 1, i - 1] = v
    return m


def _static_entries(label: str, a: float, b: float) -> dict[tuple[int, int], float]:
    if label == "ABC":
        return {
            (2, 2): a**2, (2, 3): a**2, (3, 3): a**2,
            (2, 5): a**3, (3, 5): a**3,
            (4, 4): 2 * b**2, (4, 6): a * b**2, (4, 7): a * b**2,
            (5, 5): a**4,
            (6, 6): a**2 * b**2, (7, 7): a**2 * b**2,
            (8, 8): b**4,
        }
    if label == "Abc":
        return {
            (1, 1): 2 * a**2, (1, 6): a**2 * b, (1, 7): a**2 * b,
            (2, 2): b**2, (2, 3): b**2, (3, 3): b**2,
            (2, 8): b**3, (3, 8): b**3,
            (5, 5): a**4,
            (6, 6): a**2 * b**2, (7, 7): a**2 * b**2,
            (8, 8): b**4,
        }
    return {
        (1, 1): a**2, (1, 4): a * b, (1, 6): a**2 * b,
        (3, 3): 1.0, (3, 5): a**3, (3, 8): b**3,
        (4, 4): b**2, (4, 6): a * b**2,
        (5, 5): a**4,
        (6, 6): a**2 * b**2, (7, 7): a**2 * b**2,
        (8, 8): b**4,
    }


def _evolved_entries(label: str, a: float, b: float, g: float) -> dict[tuple[int, int], float]:
    s = a**2 + b**2 * g
    if label == "ABC":
        diag23 = a**2 * (1 - g) + g * (1 - g) * b**2 * (a**2 + b**2 * g + 2)
        diag67 = (1 - g) ** 2 * b**2 * s
        return {
            (1, 1): g * s**2 + 2 * a**2 * g + 2 * b**2 * g**2,
            (2, 2): diag23, (3, 3): diag23,
            (4, 4): b**2 * (1 - g) ** 2 * (b**2 * g + 2),
            (5, 5): (1 - g) * s**2,
            (6, 6): diag67, (7, 7): diag67,
            (8, 8): (1 - g) ** 3 * b**4,
            (2, 3): (1 - g) * a**2,
            (2, 5): (1 - g) * a * s, (3, 5): (1 - g) * a * s,
            (4, 6): (1 - g) ** 2 * a * b**2, (4, 7): (1 - g) ** 2 * a * b**2,
        }
    if label == "Abc":
        diag23 = b**2 * (1 - g) * (a**2 * g + b**2 * g**2 + 1)
        diag67 = (1 - g) ** 2 * b**2 * s
        return {
            (1, 1): g * s**2 + 2 * a**2 + 2 * b**2 * g,
            (2, 2): diag23, (3, 3): diag23,
            (4, 4): g * (1 - g) ** 2 * b**4,
            (5, 5): (1 - g) * s**2,
            (6, 6): diag67, (7, 7): diag67,
            (8, 8): (1 - g) ** 3 * b**4,
            (2, 3): (1 - g) * b**2,
            (1, 6): (1 - g) * b * s, (1, 7): (1 - g) * b * s,
            (2, 8): (1 - g) ** 2 * b**3, (3, 8): (1 - g) ** 2 * b**3,
        }
    diag67 = (1 - g) ** 2 * b**2 * s
    return {
        (1, 1): g * s**2 + a**2 + g + b**2 * g**2,
        (2, 2): g * (1 - g) * b**2 * (a**2 * g + b**2 * g**2 + 1),
        (3, 3): g * (1 - g) * b**2 * (a**2 * g + b**2 * g**2 + 1) + 1 - g,
        (4, 4): (1 - g) ** 2 * b**2 * (1 + b**2 * g),
        (5, 5): (1 - g) * s**2,
        (6, 6): diag67, (7, 7): diag67,
        (8, 8): (1 - g) ** 3 * b**4,
        (1, 4): (1 - g) * a * b,
        (1, 6): (1 - g) * b * s,
        (3, 5): (1 - g) * a * s,
        (3, 8): (1 - g) ** 2 * b**3,
        (4, 6): (1 - g) ** 2 * a * b**2,
    }


def entry_name(scenario, i: int, j: int, gamma: float | None = None) -> str:
    """Symbolic name of 0-indexed entry ``(i, j)``."""
    label = _label(scenario)
    if gamma is None:
        return f"rho_{label}[{i + 1},{j + 1}]"
    return f"{TABLE_LETTER[label]}_{i + 1}{j + 1}"


def cf_matrix_raw(scenario, params: ModeParams) -> np.ndarray:
    label = _label(scenario)
    return _symmetric(_static_entries(label, params.alpha, params.beta)) / 3.0


def cf_evolved_matrix_raw(scenario, params: ModeParams, gamma: float) -> np.ndarray:
    """Printed evolved matrix as a bare array, with no validity checks."""
    label = _label(scenario)
    if not 0.0 <= gamma <= 1.0:
        raise ValueError("damping probability out of range")
    return _symmetric(_evolved_entries(label, params.alpha, params.beta, gamma)) / 3.0


def cf_matrix(scenario, params: ModeParams) -> DensityMatrix:
    return DensityMatrix(cf_matrix_raw(scenario, params), (2, 2, 2), SCENARIO_MODES[_label(scenario)])


def cf_evolved_matrix(scenario, params: ModeParams, gamma: float) -> DensityMatrix:
    """Evolved matrix from the printed tables.

    Raises ``ValueError`` if the tables produce something that is not a
    density matrix (use :func:`cf_evolved_matrix_raw` to inspect it).
    """
    label = _label(scenario)
    return DensityMatrix(cf_evolved_matrix_raw(label, params, gamma), (2, 2, 2), SCENARIO_MODES[label])


def cf_reduced_single(mode: str, params: ModeParams, gamma: float | None = None) -> np.ndarray:
    """Diagonal single-mode state for ``mode`` in {A, B, b, C, c}."""
    a2 = params.alpha**2
    b2 = params.beta**2
    g = 0.0 if gamma is None else float(gamma)
    if mode == "A":
        d = (2 + g, 1 - g)
    elif mode in ("B", "C"):
        d = (2 * a2 + g * (1 + 2 * b2), (1 - g) * (1 + 2 * b2))
    elif mode in ("b", "c"):
        d = (1 + 2 * a2 + 2 * b2 * g, 2 * b2 * (1 - g))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return np.diag(np.array(d, dtype=np.complex128)) / 3.0


def _snap(x: float) -> float:
    return 0.0 if abs(x) < FACTOR_EPS else x


def _fill(f4: float) -> tuple[float, bool]:
    # f4 is the fourth power of the concurrence-fill
    if f4 < 0:
        return 0.0, f4 < -ROUNDOFF
    if f4 == 0:
        return 0.0, False
    return math.exp(math.log(f4) / 4.0), False


def _static_measures(label: str, a: float, b: float) -> MeasureReport:
    if label == "ABC":
        c_l1 = (2 / 3) * (a**2 + 2 * a)
        d = (1 / 3) * math.sqrt(max(0.0, (16 * (a**4 + b**2 + b**4) - 13) / 3))
        q = (4 / 9) * (1 + 2 * a**2 * (1 + 2 * b**2))
        f, clamped = _fill((4 / 3) ** 4 * (1 / 3) * q * _snap(q - 8 / 9))
    elif label == "Abc":
        c_l1 = (2 / 3) * (b**2 + 2 * b)
        d = (1 / 3) * math.sqrt(max(0.0, (16 * (a**4 + a**2 + b**4) - 13) / 3))
        q = (4 / 9) * (1 + 2 * b**2 * (1 + 2 * a**2))
        f, clamped = _fill((4 / 3) ** 4 * (1 / 3) * q * _snap(q - 8 / 9))
    else:
        c_l1 = (2 / 3) * (a + b + a * b)
        d = (1 / 3) * math.sqrt(max(0.0, (16 * (a**4 + b**4) - 5) / 3))
        q = (8 / 9) * (1 + 2 * a**2 * b**2)
        f, clamped = (4 / 3) * a * b * ((64 / 27) * q) ** 0.25, False
    return MeasureReport(c_l1, d, q, f, d * d + f, clamped)


def _evolved_measures(label: str, params: ModeParams, gamma: float) -> MeasureReport:
    m = cf_evolved_matrix_raw(label, params, gamma)
    c_l1 = 0.0
    for i in range(8):
        for j in range(8):
            if i != j:
                c_l1 += abs(m[i, j])

    d2 = []
    c2 = []
    for mode in SCENARIO_MODES[label]:
        p0, p1 = np.real(np.diag(cf_reduced_single(mode, params, gamma)))
        d2.append(max(0.0, 2 * (p0**2 + p1**2) - 1))
        c2.append(4 * max(0.0, p0 * p1))
    d = math.sqrt(sum(d2) / 3)
    q = 0.5 * sum(c2)
    f, clamped = _fill((16 / 3) * q * _snap(q - c2[0]) * _snap(q - c2[1]) * _snap(q - c2[2]))
    return MeasureReport(c_l1, d, q, f, d * d + f, clamped)


def cf_measures(scenario, params: ModeParams, gamma: float | None = None) -> MeasureReport:
    """All five scalars from closed forms.

    Without ``gamma`` the per-scenario formulas in alpha, beta are used. With
    ``gamma`` the coherence comes from the printed evolved matrix and the
    remaining measures from the printed single-mode evolved marginals.
    """
    label = _label(scenario)
    if gamma is None:
        return _static_measures(label, params.alpha, params.beta)
    return _evolved_measures(label, params, gamma)


def _plain(x):
    x = complex(x)
    return x.real if x.imag == 0 else x


@dataclass
class Discrepancy:
    quantity: str
    numeric: complex | float
    closed: complex | float

    def __post_init__(self):
        self.numeric = _plain(self.numeric)
        self.closed = _plain(self.closed)

    @property
    def deviation(self) -> float:
        return abs(self.numeric - self.closed)


@dataclass
class VerifyReport:
    scenario: str
    T: float
    gamma: float | None
    deviations: dict[str, float] = field(default_factory=dict)
    entries: list[Discrepancy] = field(default_factory=list)

    @property
    def max_deviation(self) -> float:
        return max(self.deviations.values(), default=0.0)

    def failures(self, tol: float) -> list[Discrepancy]:
        """Every entry or scalar whose two routes differ by ``tol`` or more."""
        return [d for d in self.entries if d.deviation >= tol]


def verify_point(scenario, params: ModeParams, gamma: float | None = None) -> VerifyReport:
    """Compare the numeric pipeline and the closed forms at one parameter point."""
    from .channels import apply_uniform_ad
    from .cxmat import partial_trace
    from .measures import full_report
    from .states import reduce

    label = _label(scenario)
    rho = reduce(label, params)
    if gamma is not None:
        rho = apply_uniform_ad(rho, gamma)
        closed_m = cf_evolved_matrix_raw(label, params, gamma)
    else:
        closed_m = cf_matrix_raw(label, params)

    rep = VerifyReport(label, params.T, gamma)

    entries = [
        Discrepancy(entry_name(label, i, j, gamma), complex(rho.matrix[i, j]), complex(closed_m[i, j]))
        for i in range(8)
        for j in range(8)
    ]
    rep.deviations["matrix"] = max(e.deviation for e in entries)

    prime = "'" if gamma is not None else ""
    red_dev = 0.0
    for k, mode in enumerate(SCENARIO_MODES[label]):
        num = partial_trace(rho, [k]).matrix
        cl = cf_reduced_single(mode, params, gamma)
        for i in range(2):
            for j in range(2):
                d = Discrepancy(f"rho{prime}_{mode}[{i + 1},{j + 1}]", num[i, j], cl[i, j])
                entries.append(d)
                red_dev = max(red_dev, d.deviation)
    rep.deviations["reduced"] = red_dev

    num_r = full_report(rho)
    cl_r = cf_measures(label, params, gamma)
    for name in ("c_l1", "foc", "gc", "cf", "tradeoff"):
        d = Discrepancy(name, getattr(num_r, name), getattr(cl_r, name))
        entries.append(d)
        rep.deviations[name] = d.deviation
    d = Discrepancy("cf_clamped", float(num_r.cf_clamped), float(cl_r.cf_clamped))
    entries.append(d)
    rep.deviations["cf_clamped"] = d.deviation

    rep.entries = entries
    return rep
