import numpy as np
import pytest
from hypothesis import given, strategies as st

from qswitch.blocks import BlockKind, ChannelParams
from qswitch.switch import (
    CANONICAL_PATTERN,
    ORDERS,
    OrderConfiguration,
    control_matrices,
    control_output,
    equiprobable,
    reduced_matrices,
    reduced_matrix,
)

prob_vectors = st.lists(st.floats(0.0, 1.0), min_size=6, max_size=6).filter(lambda v: sum(v) > 1e-3).map(
    lambda v: np.array(v) / sum(v)
)


def test_orders_are_permutations():
    assert sorted(ORDERS) == [1, 2, 3, 4, 5, 6]
    assert sorted(ORDERS.values()) == sorted(__import__("itertools").permutations((1, 2, 3)))


def test_pattern_shape():
    pat = CANONICAL_PATTERN
    for i in range(1, 7):
        assert pat[i, i] is BlockKind.A
        for j in range(1, 7):
            assert pat[i, j] is pat[j, i]
    # orders differing by one swap of adjacent channels share a B block
    assert pat[1, 2] is BlockKind.B and pat[1, 6] is BlockKind.F and pat[1, 4] is BlockKind.D
    # each row has one A, two B, two D, one F
    for i in range(1, 7):
        row = [pat[i, j] for j in range(1, 7)]
        assert [row.count(k) for k in (BlockKind.A, BlockKind.B, BlockKind.D, BlockKind.F)] == [1, 2, 2, 1]


def test_pattern_replace_checks_symmetry():
    bad = CANONICAL_PATTERN.replace(1, 6, "B")
    assert bad[6, 1] is BlockKind.B
    with pytest.raises(ValueError):
        CANONICAL_PATTERN.replace(2, 2, "B")


@pytest.mark.parametrize("probs", [(0.5, 0.5, 0, 0, 0), (0.5, 0.6, 0, 0, 0, 0), (-0.1, 1.1, 0, 0, 0, 0)])
def test_bad_configuration(probs):
    with pytest.raises(ValueError):
        OrderConfiguration(probs)


def test_equiprobable():
    c = equiprobable([2, 5, 6])
    assert c.support == frozenset({2, 5, 6})
    assert abs(c.m - 3) < 1e-12
    assert np.abs(c.as_array() - np.array([0, 1, 0, 0, 1, 1]) / 3).max() < 1e-15
    with pytest.raises(ValueError):
        equiprobable([0, 1])


def test_single_order_is_rank_one():
    c = equiprobable([4])
    for k in (0, 1):
        m = reduced_matrix(c, ChannelParams(0.3, 3), k).entries
        assert np.count_nonzero(np.abs(m) > 1e-15) == 1


@given(prob_vectors, st.floats(0, 1), st.integers(2, 6))
def test_reduced_matrix_symmetric_psd(p, q, d):
    params = ChannelParams(q, d)
    c = OrderConfiguration.from_array(p)
    for k in (0, 1):
        m = reduced_matrix(c, params, k).entries
        assert np.abs(m - m.T).max() < 1e-15
        assert np.linalg.eigvalsh(m).min() > -1e-12
    ctrl = control_output(c, params)
    assert abs(np.trace(ctrl) - 1) < 1e-12


@given(prob_vectors, st.floats(0, 1), st.integers(2, 6))
def test_trace_normalisation(p, q, d):
    # (d-1) Tr M_0 + Tr M_1 = 1: the output state has unit trace
    params = ChannelParams(q, d)
    c = OrderConfiguration.from_array(p)
    t = (d - 1) * np.trace(reduced_matrix(c, params, 0).entries) + np.trace(reduced_matrix(c, params, 1).entries)
    assert abs(t - 1) < 1e-12


def test_batched_equals_single():
    rng = np.random.default_rng(3)
    probs = rng.dirichlet(np.ones(6), size=7)
    params = ChannelParams(0.37, 4)
    stack = reduced_matrices(probs, params, 1)
    ctrl = control_matrices(probs, params)
    for i, p in enumerate(probs):
        c = OrderConfiguration.from_array(p)
        assert np.abs(stack[i] - reduced_matrix(c, params, 1).entries).max() < 1e-15
        assert np.abs(ctrl[i] - control_output(c, params)).max() < 1e-15
