from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from qswitch.blocks import (
    BlockKind,
    ChannelParams,
    all_coefficients,
    block_coefficients,
    control_trace_value,
    eigen_branch_value,
)

qs = st.floats(0.0, 1.0, allow_nan=False)
ds = st.integers(2, 8)

# (rho, id) coefficients at q=1/2, d=2, read off the Kraus brute force by hand
FROZEN_HALF_D2 = {
    BlockKind.A: (Fraction(1, 8), Fraction(7, 8)),
    BlockKind.B: (Fraction(5, 32), Fraction(21, 32)),
    BlockKind.D: (Fraction(7, 32), Fraction(1, 2)),
    BlockKind.F: (Fraction(7, 32), Fraction(13, 32)),
}


def test_frozen_coefficients():
    p = ChannelParams(0.5, 2)
    for kind, (r, i) in FROZEN_HALF_D2.items():
        c = block_coefficients(kind, p)
        assert abs(c.rho_coeff - float(r)) < 1e-15
        assert abs(c.id_coeff - float(i)) < 1e-15


def test_string_kind():
    p = ChannelParams(0.3, 3)
    assert block_coefficients("D", p) == block_coefficients(BlockKind.D, p)


@pytest.mark.parametrize("q,d", [(-0.1, 2), (1.1, 2), (0.5, 1), (0.5, 2.5)])
def test_params_rejected(q, d):
    with pytest.raises(ValueError):
        ChannelParams(q, d)


def test_branch_value_rejects_bad_k():
    c = block_coefficients(BlockKind.A, ChannelParams(0.2, 2))
    with pytest.raises(ValueError):
        eigen_branch_value(c, 2, 2)


@given(ds)
def test_noiseless_channels(d):
    # q=1: every block is the identity map on rho
    for c in all_coefficients(ChannelParams(1.0, d)).values():
        assert abs(c.rho_coeff - 1) < 1e-15 and abs(c.id_coeff) < 1e-15


@given(qs, ds)
def test_diagonal_block_is_trace_preserving(q, d):
    assert abs(control_trace_value(block_coefficients(BlockKind.A, ChannelParams(q, d))) - 1) < 1e-12


@given(qs, ds)
def test_off_diagonal_traces_bounded(q, d):
    # |Tr X_ij| <= 1 for a contraction of density operators
    for c in all_coefficients(ChannelParams(q, d)).values():
        t = control_trace_value(c)
        assert -1e-12 <= t <= 1 + 1e-12


@given(qs, ds)
def test_branch_values_match_matrix_eigenvalues(q, d):
    # X(rho) for rho = |0><0| has eigenvalue rho_coeff + id_coeff/d once and id_coeff/d (d-1 times)
    for c in all_coefficients(ChannelParams(q, d)).values():
        x = c.rho_coeff * np.diag([1.0] + [0.0] * (d - 1)) + c.id_coeff * np.eye(d) / d
        ev = np.sort(np.diag(x))
        assert abs(ev[-1] - eigen_branch_value(c, 1, d)) < 1e-14
        assert abs(ev[0] - eigen_branch_value(c, 0, d)) < 1e-14
