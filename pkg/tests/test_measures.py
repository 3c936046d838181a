import math

import numpy as np
import pytest

from hawkingw.channels import apply_uniform_ad
from hawkingw.cxmat import DensityMatrix
from hawkingw.measures import (
    concurrence_fill,
    foc_single,
    foc_tripartite,
    full_report,
    global_concurrence,
    l1_coherence,
    one_to_rest_concurrence,
)
from hawkingw.modes import bogoliubov
from hawkingw.states import reduce, w_state

from conftest import GAMMAS, SCENARIO_LABELS, finite_grid, random_density

COLD = bogoliubov(0.0)
HOT = bogoliubov(math.inf)


def qubit(m):
    return DensityMatrix(np.asarray(m, dtype=complex), (2,))


def test_l1_examples():
    assert l1_coherence(DensityMatrix(np.diag([0.1, 0.2, 0.3, 0.4]), (2, 2))) == 0.0
    assert l1_coherence(w_state().density()) == pytest.approx(2.0, abs=1e-14)
    # (2/3)(alpha^2 + 2 alpha) at alpha^2 = 1/(1+e^-1), 30-digit mpmath
    assert l1_coherence(reduce("ABC", bogoliubov(1.0))) == pytest.approx(1.6273985676203281, abs=1e-14)


def test_foc_single_examples():
    assert foc_single(qubit(np.eye(2) / 2)) == 0.0
    v = np.array([math.cos(0.3), math.sin(0.3) * 1j])
    assert foc_single(qubit(np.outer(v, v.conj()))) == pytest.approx(1.0, abs=1e-15)
    assert foc_single(qubit(np.diag([2 / 3, 1 / 3]))) == pytest.approx(1 / 3, abs=1e-15)


@pytest.mark.parametrize("label, expected", [
    ("ABC", 1 / 3),
    ("Abc", math.sqrt(19 / 27)),
    ("ABc", math.sqrt(11 / 27)),
])
def test_foc_cold(label, expected):
    assert foc_tripartite(reduce(label, COLD)) == pytest.approx(expected, abs=1e-12)


def test_one_to_rest():
    for label in SCENARIO_LABELS:
        for T in (0.0, 0.7, math.inf):
            c = one_to_rest_concurrence(reduce(label, bogoliubov(T)), 0)
            assert c == pytest.approx(2 * math.sqrt(2) / 3, abs=1e-14)
    prod = np.zeros(8)
    prod[0] = 1
    assert one_to_rest_concurrence(DensityMatrix(np.diag(prod), (2, 2, 2)), 1) == 0.0
    # (2/3) sqrt(2 alpha^2 (1 + 2 beta^2)) at T = 1, 30-digit mpmath
    c_b = one_to_rest_concurrence(reduce("ABC", bogoliubov(1.0)), 1)
    assert c_b == pytest.approx(0.99968103584780974, abs=1e-14)
    with pytest.raises(IndexError):
        one_to_rest_concurrence(reduce("ABC", COLD), 3)


@pytest.mark.parametrize("label, expected", [("ABC", 4 / 3), ("Abc", 4 / 9), ("ABc", 8 / 9)])
def test_gc_cold(label, expected):
    assert global_concurrence(reduce(label, COLD)) == pytest.approx(expected, abs=1e-12)


def test_cf_cold():
    f, clamped = concurrence_fill(reduce("ABC", COLD))
    assert f == pytest.approx(8 / 9, abs=1e-12) and not clamped
    f, _ = concurrence_fill(reduce("ABc", COLD))
    assert f == 0.0
    f, clamped = concurrence_fill(reduce("Abc", COLD))
    assert f == 0.0 and clamped


def test_cf_abc_threshold_boundary():
    # beta^2 (1 + 2 alpha^2) = 1/2 gives Q = 8/9 exactly: T = 1/ln(2+sqrt5)
    p = bogoliubov(1 / math.log(2 + math.sqrt(5)))
    rho = reduce("Abc", p)
    assert global_concurrence(rho) == pytest.approx(8 / 9, abs=1e-14)
    assert concurrence_fill(rho) == (0.0, False)


def test_full_report_cold():
    r = full_report(reduce("ABC", COLD))
    assert r.tradeoff == pytest.approx(1.0, abs=1e-12)
    r = full_report(reduce("ABc", COLD))
    assert r.tradeoff == pytest.approx(11 / 27, abs=1e-12)


@pytest.mark.parametrize("seed", range(5))
def test_tradeoff_is_definitional(seed):
    rho = DensityMatrix(random_density(np.random.default_rng(seed)), (2, 2, 2))
    r = full_report(rho)
    assert r.tradeoff == r.foc**2 + r.cf
    assert r.c_l1 == l1_coherence(rho)
    assert r.gc == global_concurrence(rho)


def test_perfect_tradeoff_limits():
    assert full_report(reduce("ABC", COLD)).tradeoff == pytest.approx(1.0, abs=1e-12)
    assert full_report(reduce("Abc", HOT)).tradeoff == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("label", SCENARIO_LABELS)
@pytest.mark.parametrize("gamma", GAMMAS)
def test_tradeoff_bound(label, gamma):
    for T in [0.0, *np.geomspace(0.01, 100, 50), math.inf]:
        rho = reduce(label, bogoliubov(T))
        if gamma is not None:
            rho = apply_uniform_ad(rho, gamma)
        assert full_report(rho).tradeoff <= 1 + 1e-9


def _series(label, quantity, grid=None):
    grid = finite_grid() if grid is None else grid
    return np.array([getattr(full_report(reduce(label, bogoliubov(T))), quantity) for T in grid])


# trends read off the three no-noise figures
MONOTONE = [
    ("ABC", "c_l1", "strict_dec"),
    ("Abc", "c_l1", "inc"), ("Abc", "gc", "inc"), ("Abc", "cf", "inc"),
    ("ABc", "c_l1", "inc"), ("ABc", "gc", "inc"), ("ABc", "cf", "inc"),
    ("Abc", "foc", "dec"), ("ABc", "foc", "dec"),
]


@pytest.mark.parametrize("label, quantity, trend", MONOTONE)
def test_monotone_trends(label, quantity, trend):
    d = np.diff(_series(label, quantity))
    if trend == "strict_dec":
        assert np.all(d < 0)
    elif trend == "dec":
        assert np.all(d <= 0)
    else:
        assert np.all(d >= 0)


def test_gc_abc_peak():
    grid = np.geomspace(0.05, 10, 500)
    q = _series("ABC", "gc", grid)
    i = int(np.argmax(q))
    assert q[i] == pytest.approx(13 / 9, abs=1e-6)
    step = max(grid[i] - grid[i - 1], grid[i + 1] - grid[i])
    assert abs(grid[i] - 1 / math.log(3)) <= step


@pytest.mark.parametrize("label", SCENARIO_LABELS)
@pytest.mark.parametrize("quantity", ["c_l1", "foc", "gc", "cf", "tradeoff"])
def test_measures_stabilize_at_high_temperature(label, quantity):
    a = getattr(full_report(reduce(label, bogoliubov(100.0))), quantity)
    b = getattr(full_report(reduce(label, bogoliubov(1000.0))), quantity)
    assert abs(a - b) < 1e-3
