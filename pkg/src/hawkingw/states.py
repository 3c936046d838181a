"""The W state and its three-mode reductions after horizon dilation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cxmat import DensityMatrix, PureState, partial_trace
from .modes import REGISTER, ModeParams, build_dilated_w


@dataclass(frozen=True)
class Scenario:
    label: str
    kept_modes: tuple[int, ...]

    def __post_init__(self):
        km = tuple(self.kept_modes)
        if len(km) != 3 or list(km) != sorted(set(km)) or not all(0 <= k < 5 for k in km):
            raise ValueError(f"bad kept modes {km}: need three distinct register positions in order")
        object.__setattr__(self, "kept_modes", km)

    @property
    def mode_labels(self) -> tuple[str, ...]:
        return tuple(REGISTER[k] for k in self.kept_modes)


ABC = Scenario("ABC", (0, 1, 3))   # all three exterior modes
Abc = Scenario("Abc", (0, 2, 4))   # Alice plus both interior modes
ABc = Scenario("ABc", (0, 1, 4))   # traces out b and C
# B<->C mirror image of ABc; same measures, not separately tabulated
AbC = Scenario("AbC", (0, 2, 3))

SCENARIOS = {s.label: s for s in (ABC, Abc, ABc)}
ALIASES = {"AbC": AbC}


def get_scenario(label) -> Scenario:
    if isinstance(label, Scenario):
        return label
    try:
        return SCENARIOS[label]
    except KeyError:
        pass
    try:
        return ALIASES[label]
    except KeyError:
        raise ValueError(f"unknown scenario {label!r}; choose from {sorted(SCENARIOS)}") from None


def w_state() -> PureState:
    amps = np.zeros(8, dtype=np.complex128)
    amps[[1, 2, 4]] = 1 / np.sqrt(3)
    return PureState(amps, ("A", "B", "C"))


def dilated_density(params: ModeParams, params_C: ModeParams | None = None) -> DensityMatrix:
    return build_dilated_w(params, params_C).density()


def reduce(scenario, params: ModeParams, params_C: ModeParams | None = None) -> DensityMatrix:
    """Three-mode state for ``scenario``, by partial trace of the dilated W state."""
    sc = get_scenario(scenario)
    return partial_trace(dilated_density(params, params_C), sc.kept_modes)
