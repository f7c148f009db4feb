import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qswitch.blocks import ChannelParams, block_coefficients
from qswitch.holevo import holevo
from qswitch.oracle import (
    KrausSet,
    depolarizing_kraus,
    holevo_bruteforce,
    order_products,
    output_block,
    switch_output,
    trace_control,
    trace_target,
    weyl_operators,
)
from qswitch.switch import CANONICAL_PATTERN, ORDERS, OrderConfiguration, control_output, equiprobable


def _density(rng, d):
    g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    r = g @ g.conj().T
    return r / np.trace(r)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_weyl_basis_orthogonal(d):
    w = weyl_operators(d)
    gram = np.einsum("aij,bij->ab", w.conj(), w)
    assert np.abs(gram - d * np.eye(d * d)).max() < 1e-12


@given(st.floats(0, 1), st.integers(2, 4))
def test_kraus_complete_and_depolarizing(q, d):
    k = depolarizing_kraus(ChannelParams(q, d))
    assert k.completeness_error() < 1e-12
    rho = _density(np.random.default_rng(0), d)
    assert np.abs(k.apply(rho) - (q * rho + (1 - q) * np.eye(d) / d)).max() < 1e-12


def test_order_products_compose_in_label_order():
    # random non-commuting operators so that any wrong ordering shows up
    K = np.random.default_rng(5).normal(size=(4, 3, 3))
    prods = order_products(KrausSet(K))
    # channel 1 uses K[1], channel 2 K[2], channel 3 K[3]
    flat = np.ravel_multi_index((1, 2, 3), (4, 4, 4))
    for n, (a, b, c) in ORDERS.items():
        want = K[a] @ K[b] @ K[c]
        assert np.abs(prods[n - 1, flat] - want).max() < 1e-12


@settings(max_examples=25, deadline=None)
@given(st.lists(st.floats(0, 1), min_size=6, max_size=6).filter(lambda v: sum(v) > 1e-3),
       st.floats(0, 1), st.sampled_from([2, 3]))
def test_blocks_match_pattern(v, q, d):
    c = OrderConfiguration.from_array(np.array(v) / sum(v))
    p = ChannelParams(q, d)
    rho = _density(np.random.default_rng(1), d)
    state = switch_output(c, p, rho)
    assert abs(np.trace(state) - 1) < 1e-12
    amp = np.sqrt(c.as_array())
    for n in range(1, 7):
        for n2 in range(1, 7):
            co = block_coefficients(CANONICAL_PATTERN[n, n2], p)
            want = amp[n - 1] * amp[n2 - 1] * (co.rho_coeff * rho + co.id_coeff * np.eye(d) / d)
            assert np.abs(output_block(state, d, n, n2) - want).max() < 1e-10
    assert np.abs(trace_target(state, d) - control_output(c, p)).max() < 1e-10
    # tracing out the control leaves sum_n P_n A(rho), the serial composition
    serial = q**3 * rho + (1 - q**3) * np.eye(d) / d
    assert np.abs(trace_control(state, d) - serial).max() < 1e-10


def test_trace_control_single_order():
    # one definite order is just the composed channel
    rho = _density(np.random.default_rng(2), 3)
    p = ChannelParams(0.4, 3)
    out = trace_control(switch_output(equiprobable([2]), p, rho), 3)
    assert np.abs(out - (p.q**3 * rho + (1 - p.q**3) * np.eye(3) / 3)).max() < 1e-12


@pytest.mark.parametrize("support", [(1, 2), (1, 4, 5), (1, 2, 3, 4, 5, 6)])
def test_bruteforce_chi(support):
    c = equiprobable(support)
    for d in (2, 3):
        p = ChannelParams(0.35, d)
        assert abs(holevo_bruteforce(c, p).chi - holevo(c, p).chi) < 1e-8


def test_dimension_guard():
    with pytest.raises(ValueError):
        switch_output(equiprobable([1]), ChannelParams(0.5, 4), np.eye(4) / 4)
    out = switch_output(equiprobable([1]), ChannelParams(0.5, 4), np.eye(4) / 4, max_dim=4)
    assert out.shape == (24, 24)
    with pytest.raises(ValueError):
        switch_output(equiprobable([1]), ChannelParams(0.5, 2), np.eye(3) / 3)
