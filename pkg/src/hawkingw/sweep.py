"""Temperature sweeps, CSV rows and a minimal SVG line chart."""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

import numpy as np

from .channels import apply_uniform_ad
from .measures import MeasureReport, full_report
from .modes import bogoliubov
from .states import get_scenario, reduce

CSV_HEADER = "T,alpha,beta,c_l1,foc,gc,cf,tradeoff,cf_clamped"
QUANTITIES = ("c_l1", "foc", "gc", "cf", "tradeoff")

DEFAULT_T_MIN = 0.05
DEFAULT_T_MAX = 10.0
DEFAULT_T_POINTS = 50


def fmt(x: float) -> str:
    """Shortest decimal string that parses back to ``x``."""
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return repr(x)


def temperature_grid(t_min: float = DEFAULT_T_MIN, t_max: float = DEFAULT_T_MAX,
                     points: int = DEFAULT_T_POINTS, scale: str = "log") -> np.ndarray:
    if not 0 <= t_min < t_max:
        raise ValueError(f"need 0 <= t_min < t_max, got {t_min}, {t_max}")
    if points < 2:
        raise ValueError("need at least two grid points")
    if scale == "log":
        if t_min <= 0:
            raise ValueError("log grid needs t_min > 0")
        return np.geomspace(t_min, t_max, points)
    if scale == "linear":
        return np.linspace(t_min, t_max, points)
    raise ValueError(f"unknown scale {scale!r}")


def standard_temperatures() -> list[float]:
    """Default grid plus the two exact limits, in increasing order."""
    return [0.0, *temperature_grid().tolist(), math.inf]


def evaluate(scenario, T: float, omega: float = 1.0, gamma: float | None = None):
    """``(ModeParams, MeasureReport)`` for one parameter point."""
    params = bogoliubov(T, omega)
    rho = reduce(get_scenario(scenario), params)
    if gamma is not None:
        rho = apply_uniform_ad(rho, gamma)
    return params, full_report(rho)


@dataclass
class SweepConfig:
    scenario: str = "ABC"
    omega: float = 1.0
    t_min: float = DEFAULT_T_MIN
    t_max: float = DEFAULT_T_MAX
    t_points: int = DEFAULT_T_POINTS
    t_scale: str = "log"
    gamma: float | None = None
    limits: bool = False
    output: str | None = None
    format: str = "csv"

    def __post_init__(self):
        get_scenario(self.scenario)
        if self.gamma is not None and not 0.0 <= self.gamma <= 1.0:
            raise ValueError("damping probability out of range")
        if self.format not in ("csv", "svg"):
            raise ValueError(f"unknown format {self.format!r}")
        # validates range, size and scale
        temperature_grid(self.t_min, self.t_max, self.t_points, self.t_scale)

    def temperatures(self) -> list[float]:
        ts = temperature_grid(self.t_min, self.t_max, self.t_points, self.t_scale).tolist()
        if self.limits:
            if ts[0] > 0:
                ts.insert(0, 0.0)
            ts.append(math.inf)
        return ts


@dataclass
class SweepRow:
    T: float
    alpha: float
    beta: float
    report: MeasureReport

    def csv(self) -> str:
        r = self.report
        fields = [self.T, self.alpha, self.beta, r.c_l1, r.foc, r.gc, r.cf, r.tradeoff]
        return ",".join(fmt(v) for v in fields) + f",{int(r.cf_clamped)}"


@dataclass
class Sweep:
    config: SweepConfig
    rows: list[SweepRow] = field(default_factory=list)

    def column(self, name: str, finite_only: bool = False) -> np.ndarray:
        rows = [r for r in self.rows if not finite_only or (0 < r.T < math.inf)]
        if name in ("T", "alpha", "beta"):
            return np.array([getattr(r, name) for r in rows])
        return np.array([getattr(r.report, name) for r in rows], dtype=float)

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(CSV_HEADER + "\n")
        for row in self.rows:
            buf.write(row.csv() + "\n")
        return buf.getvalue()


def run_sweep(config: SweepConfig) -> Sweep:
    sweep = Sweep(config)
    for T in config.temperatures():
        params, rep = evaluate(config.scenario, T, config.omega, config.gamma)
        sweep.rows.append(SweepRow(T, params.alpha, params.beta, rep))
    return sweep


# --- SVG -------------------------------------------------------------------

_COLORS = {
    "c_l1": "#1f77b4",
    "foc": "#ff7f0e",
    "gc": "#2ca02c",
    "cf": "#d62728",
    "tradeoff": "#9467bd",
}
_NAMES = {
    "c_l1": "C_l1",
    "foc": "D",
    "gc": "Q",
    "cf": "F",
    "tradeoff": "D^2+F",
}


def to_svg(sweep: Sweep, title: str | None = None, width: int = 640, height: int = 420) -> str:
    """Self-contained SVG line chart of every measure against T.

    Only finite, positive temperatures are drawn; a log grid gets a log x axis.
    """
    ts = sweep.column("T", finite_only=True)
    if ts.size < 2:
        raise ValueError("nothing to plot")
    logx = sweep.config.t_scale == "log"
    xs = np.log10(ts) if logx else ts
    series = {q: sweep.column(q, finite_only=True) for q in QUANTITIES}

    left, right, top, bottom = 60, 130, 40, 50
    pw = width - left - right
    ph = height - top - bottom
    x0, x1 = float(xs.min()), float(xs.max())
    y_hi = max(float(np.max(v)) for v in series.values())
    y0, y1 = 0.0, max(1.0, math.ceil(y_hi * 10) / 10)

    def px(x):
        return left + (x - x0) / (x1 - x0) * pw

    def py(y):
        return top + (1 - (y - y0) / (y1 - y0)) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    if title:
        out.append(f'<text x="{left + pw / 2:.2f}" y="{top - 14}" text-anchor="middle" '
                   f'font-size="14">{escape(title)}</text>')

    for k in range(6):
        y = y0 + (y1 - y0) * k / 5
        out.append(f'<line x1="{left - 4}" y1="{py(y):.2f}" x2="{left}" y2="{py(y):.2f}" stroke="black"/>')
        out.append(f'<text x="{left - 8}" y="{py(y) + 4:.2f}" text-anchor="end">{y:.2g}</text>')
    if logx:
        ticks = [10.0 ** e for e in range(math.floor(x0), math.ceil(x1) + 1)
                 if x0 - 1e-9 <= e <= x1 + 1e-9]
    else:
        ticks = [float(t) for t in np.linspace(ts.min(), ts.max(), 6)]
    for t in ticks:
        x = px(math.log10(t) if logx else t)
        out.append(f'<line x1="{x:.2f}" y1="{top + ph}" x2="{x:.2f}" y2="{top + ph + 4}" stroke="black"/>')
        out.append(f'<text x="{x:.2f}" y="{top + ph + 18}" text-anchor="middle">{t:.3g}</text>')

    out.append(f'<text x="{left + pw / 2:.2f}" y="{height - 10}" text-anchor="middle">'
               f'Hawking temperature T{" (log scale)" if logx else ""}</text>')
    out.append(f'<text x="16" y="{top + ph / 2:.2f}" text-anchor="middle" '
               f'transform="rotate(-90 16 {top + ph / 2:.2f})">value</text>')

    for i, q in enumerate(QUANTITIES):
        pts = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, series[q]))
        out.append(f'<polyline fill="none" stroke="{_COLORS[q]}" stroke-width="1.5" points="{pts}"/>')
        ly = top + 14 + 18 * i
        lx = left + pw + 12
        out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 22}" y2="{ly}" stroke="{_COLORS[q]}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 28}" y="{ly + 4}">{escape(_NAMES[q])}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"
