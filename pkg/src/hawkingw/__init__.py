"""W-state coherence and entanglement near a Schwarzschild horizon."""

from .channels import KrausChannel, ad_kraus, apply_product_channel, apply_uniform_ad
from .cxmat import (
    DensityMatrix,
    NotHermitianError,
    PureState,
    det2,
    hermitian_eigenvalues,
    partial_trace,
    tensor,
)
from .measures import (
    MeasureReport,
    concurrence_fill,
    foc_single,
    foc_tripartite,
    full_report,
    global_concurrence,
    l1_coherence,
    one_to_rest_concurrence,
)
from .modes import ModeParams, bogoliubov, build_dilated_w, dilate_mode, temperature_from_mass
from .states import ABC, Abc, ABc, AbC, SCENARIOS, Scenario, get_scenario, reduce, w_state

__version__ = "0.1.0"
