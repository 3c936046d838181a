import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hawkingw.cxmat import PureState, partial_trace
from hawkingw.modes import (
    REGISTER,
    ModeParams,
    bogoliubov,
    build_dilated_w,
    dilate_mode,
    temperature_from_mass,
)
from hawkingw.states import w_state

# 30-digit mpmath: 1 / (1 + e^-1)
ALPHA2_T1 = 0.73105857863000487925
BETA2_T1 = 0.26894142136999512075


def test_bogoliubov_limits():
    p = bogoliubov(0.0, 1.0)
    assert (p.alpha, p.beta) == (1.0, 0.0)
    p = bogoliubov(math.inf, 1.0)
    assert p.alpha == p.beta == pytest.approx(1 / math.sqrt(2), abs=1e-15)


def test_bogoliubov_t1():
    p = bogoliubov(1.0, 1.0)
    assert p.alpha**2 == pytest.approx(ALPHA2_T1, abs=1e-15)
    assert p.beta**2 == pytest.approx(BETA2_T1, abs=1e-15)


def test_bogoliubov_tiny_temperature_does_not_overflow():
    p = bogoliubov(1e-6, 1.0)
    assert p.alpha == 1.0 and p.beta == 0.0


@pytest.mark.parametrize("T, omega", [(1.0, 0.0), (1.0, -1.0), (-0.1, 1.0), (math.nan, 1.0)])
def test_bogoliubov_rejects(T, omega):
    with pytest.raises(ValueError):
        bogoliubov(T, omega)


def test_bogoliubov_frequency_message():
    with pytest.raises(ValueError, match="frequency must be positive"):
        bogoliubov(1.0, 0.0)


temps = st.one_of(st.just(0.0), st.just(math.inf), st.floats(1e-4, 1e4))
omegas = st.floats(1e-3, 1e3)


@settings(max_examples=200, deadline=None)
@given(temps, omegas)
def test_unit_circle_and_ordering(T, omega):
    p = bogoliubov(T, omega)
    assert abs(p.alpha**2 + p.beta**2 - 1) < 1e-14
    assert p.alpha >= p.beta


@settings(max_examples=100, deadline=None)
@given(st.floats(1e-3, 1e3), st.floats(1e-3, 1e3), st.floats(1.0, 10.0))
def test_monotone_in_T_and_omega(T, omega, k):
    base = bogoliubov(T, omega)
    hotter = bogoliubov(T * k, omega)
    assert hotter.alpha <= base.alpha and hotter.beta >= base.beta
    faster = bogoliubov(T, omega * k)
    assert faster.alpha >= base.alpha and faster.beta <= base.beta


def test_mass_helper():
    assert temperature_from_mass(1 / (8 * math.pi)) == pytest.approx(1.0)


def _ket(bits, labels):
    v = np.zeros(2 ** len(bits))
    v[int(bits, 2)] = 1
    return PureState(v, labels)


def test_dilate_examples():
    cold = bogoliubov(0.0)
    hot = bogoliubov(math.inf)
    warm = bogoliubov(1.0)
    assert np.allclose(dilate_mode(_ket("0", ("B",)), 0, cold).amplitudes, [1, 0, 0, 0])
    for p in (cold, warm, hot):
        out = dilate_mode(_ket("1", ("B",)), 0, p)
        assert np.allclose(out.amplitudes, [0, 0, 1, 0])
    out = dilate_mode(_ket("0", ("B",)), 0, hot)
    assert np.allclose(out.amplitudes, np.array([1, 0, 0, 1]) / math.sqrt(2))
    assert out.labels == ("B", "b")


def test_dilate_bad_index():
    with pytest.raises(IndexError):
        dilate_mode(w_state(), 3, bogoliubov(1.0))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1), st.floats(0.0, math.pi / 4), st.integers(0, 2))
def test_dilate_preserves_norm(seed, theta, idx):
    rng = np.random.default_rng(seed)
    v = rng.normal(size=8) + 1j * rng.normal(size=8)
    psi = PureState(v / np.linalg.norm(v), ("x", "y", "z"))
    p = ModeParams(1.0, 1.0, math.cos(theta), math.sin(theta))
    out = dilate_mode(psi, idx, p)
    assert out.n_qubits == 4
    assert abs(np.vdot(out.amplitudes, out.amplitudes).real - 1) < 1e-12


def test_dilated_w_amplitudes_match_printed_state():
    p = bogoliubov(1.0)
    a, b = p.alpha, p.beta
    psi = build_dilated_w(p, p)
    assert psi.labels == REGISTER
    expected = {
        "00010": a, "01110": b, "01000": a, "01011": b,
        "10000": a**2, "11111": b**2, "10011": a * b, "11100": a * b,
    }
    full = np.zeros(32)
    for bits, amp in expected.items():
        full[int(bits, 2)] = amp / math.sqrt(3)
    assert np.allclose(psi.amplitudes, full, atol=1e-15)
    # beta^2 / sqrt(3), 30-digit mpmath
    assert psi.amplitude("11111").real == pytest.approx(0.15527340202420725, abs=1e-15)


def test_dilated_w_cold_limit():
    psi = build_dilated_w(bogoliubov(0.0))
    nz = {format(i, "05b") for i in np.flatnonzero(np.abs(psi.amplitudes) > 0)}
    assert nz == {"00010", "01000", "10000"}
    assert np.allclose(np.abs(psi.amplitudes[[2, 8, 16]]), 1 / math.sqrt(3))


def test_dilated_w_cold_reduces_to_w_exactly():
    rho = partial_trace(build_dilated_w(bogoliubov(0.0)).density(), [0, 1, 3])
    assert np.max(np.abs(rho.matrix - w_state().density().matrix)) < 1e-14


def test_distinct_mode_frequencies_supported():
    pb, pc = bogoliubov(1.0, 1.0), bogoliubov(1.0, 3.0)
    psi = build_dilated_w(pb, pc)
    assert abs(np.linalg.norm(psi.amplitudes) - 1) < 1e-14
    assert psi.amplitude("11111").real == pytest.approx(pb.beta * pc.beta / math.sqrt(3))
