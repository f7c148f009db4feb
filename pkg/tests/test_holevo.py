import numpy as np
import pytest
from hypothesis import given, strategies as st

from qswitch.blocks import ChannelParams
from qswitch.holevo import (
    holevo,
    holevo_batch,
    holevo_curve,
    holevo_m6_analytic,
    m6_control_eigenvalues,
    von_neumann_entropy,
    xlogx_sum,
)
from qswitch.switch import OrderConfiguration, control_output, equiprobable

ALL = equiprobable(range(1, 7))


def test_entropy_basics():
    assert von_neumann_entropy(np.eye(4) / 4) == 2.0
    assert von_neumann_entropy(np.diag([1.0, 0.0])) == 0.0
    assert abs(xlogx_sum([0.5, 0.25], [1, 2]) - 1.5) < 1e-15


def test_m6_frozen_q0_d2():
    # chi for all six orders at q=0, d=2, rebuilt from the frozen spectra
    k1 = np.array([11, 5, 2, 2, 2, 2]) / 48
    k0 = np.array([7, 4, 4, 4, 4, 1]) / 48
    hm = -np.sum(k1 * np.log2(k1)) - np.sum(k0 * np.log2(k0))
    hc = von_neumann_entropy(control_output(ALL, ChannelParams(0.0, 2)))
    assert abs(holevo(ALL, ChannelParams(0.0, 2)).chi - (1 + hc - hm)) < 1e-14


@given(st.floats(0, 1), st.integers(2, 6))
def test_m6_control_spectrum(q, d):
    p = ChannelParams(q, d)
    num = np.linalg.eigvalsh(control_output(ALL, p))
    assert np.abs(np.sort(m6_control_eigenvalues(p)) - num).max() < 1e-12


@given(st.floats(0, 1), st.integers(2, 6))
def test_m6_analytic(q, d):
    p = ChannelParams(q, d)
    a, n = holevo_m6_analytic(p), holevo(ALL, p)
    assert abs(a.chi - n.chi) < 1e-9
    assert abs(a.h_min - n.h_min) < 1e-9 and abs(a.h_control - n.h_control) < 1e-9


@given(st.lists(st.floats(0, 1), min_size=6, max_size=6).filter(lambda v: sum(v) > 1e-3),
       st.floats(0, 1), st.integers(2, 6))
def test_chi_bounds(v, q, d):
    c = OrderConfiguration.from_array(np.array(v) / sum(v))
    r = holevo(c, ChannelParams(q, d))
    assert -1e-12 <= r.chi <= np.log2(d) + np.log2(6) + 1e-9
    assert r.h_min >= 0 and r.h_control >= 0


def test_batch_matches_single():
    probs = np.random.default_rng(7).dirichlet(np.ones(6), size=20)
    p = ChannelParams(0.2, 3)
    chi, hm, hc = holevo_batch(probs, p)
    for i, row in enumerate(probs):
        r = holevo(OrderConfiguration.from_array(row), p)
        assert abs(chi[i] - r.chi) < 1e-12 and abs(hm[i] - r.h_min) < 1e-12 and abs(hc[i] - r.h_control) < 1e-12


def test_curve_endpoints():
    chi = holevo_curve(equiprobable([1, 2]), [0.0, 1.0], 3)
    assert abs(chi[-1] - np.log2(3)) < 1e-12


def test_jacobi_path():
    c = equiprobable([1, 4, 5])
    p = ChannelParams(0.6, 4)
    assert abs(holevo(c, p, "jacobi").chi - holevo(c, p).chi) < 1e-12
