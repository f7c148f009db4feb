from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qswitch.blocks import ChannelParams
from qswitch.classifier import published_support
from qswitch.spectrum import (
    UNCATALOGED,
    ConvergenceError,
    SwitchSpectrum,
    char_poly,
    clamp_nonnegative,
    closed_form_char_poly,
    cyclic_m3_eigenvalues,
    eigenvalues_analytic,
    eigenvalues_numeric,
    invariant_signature,
    jacobi_eigvalsh,
    m6_eigenvalues,
    signatures_match,
    switch_spectrum,
)
from qswitch.switch import OrderConfiguration, equiprobable, reduced_matrix

sym6 = st.lists(st.floats(-10, 10), min_size=21, max_size=21)


def _sym(entries, n=6):
    a = np.zeros((n, n))
    a[np.triu_indices(n)] = entries
    return a + np.triu(a, 1).T


def test_frozen_m6_spectrum():
    # q=0, d=2, all six orders: k=1 branch {11/48, 5/48, 1/24 x4}
    lam = switch_spectrum(equiprobable(range(1, 7)), ChannelParams(0.0, 2)).lambdas
    expected = sorted([Fraction(11, 48), Fraction(5, 48)] + [Fraction(1, 24)] * 4, reverse=True)
    assert np.abs(lam[:, 1] - np.array([float(x) for x in expected])).max() < 1e-15


@settings(max_examples=60)
@given(sym6)
def test_jacobi_matches_lapack(entries):
    a = _sym(entries)
    assert np.abs(jacobi_eigvalsh(a) - np.linalg.eigvalsh(a)[::-1]).max() < 1e-10 * max(1, np.abs(a).max())


def test_jacobi_input_checks():
    with pytest.raises(ValueError):
        jacobi_eigvalsh(np.ones((2, 3)))
    with pytest.raises(ValueError):
        jacobi_eigvalsh(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(ConvergenceError):
        jacobi_eigvalsh(_sym(np.arange(21.0)), max_sweeps=1)


def test_jacobi_diagonal_is_fixed():
    assert np.abs(jacobi_eigvalsh(np.diag([3.0, -1.0, 2.0])) - [3, 2, -1]).max() == 0


def test_numeric_methods_agree_on_switch():
    c = OrderConfiguration.from_array(np.random.default_rng(1).dirichlet(np.ones(6)))
    p = ChannelParams(0.42, 3)
    a = switch_spectrum(c, p, "lapack").lambdas
    b = switch_spectrum(c, p, "jacobi").lambdas
    assert np.abs(a - b).max() < 1e-13
    with pytest.raises(ValueError):
        eigenvalues_numeric(np.eye(6), "power")


def test_clamp():
    assert np.abs(clamp_nonnegative([-1e-13, 0.5]) - [0, 0.5]).max() == 0
    with pytest.raises(ValueError):
        clamp_nonnegative([-1e-6, 1.0])
    with pytest.raises(ValueError):
        SwitchSpectrum(np.zeros((5, 2)), 2)


@pytest.mark.parametrize("class_id", [(1, 1), (2, 1), (2, 2), (2, 3), (3, 1), (3, 3), (4, 1), (4, 3), (6, 1)])
@pytest.mark.parametrize("q,d", [(0.0, 2), (0.3, 3), (0.77, 5)])
def test_closed_forms(class_id, q, d):
    m, label = class_id
    cfg = equiprobable(published_support(m, label))
    for k in (0, 1):
        num = eigenvalues_numeric(reduced_matrix(cfg, ChannelParams(q, d), k))
        assert np.abs(eigenvalues_analytic(class_id, ChannelParams(q, d), k) - num).max() < 1e-12


def test_uncataloged_returns_none():
    for cid in UNCATALOGED:
        assert eigenvalues_analytic(cid, ChannelParams(0.5, 2), 0) is None
    with pytest.raises(ValueError):
        eigenvalues_analytic((2, 4), ChannelParams(0.5, 2), 0)
    with pytest.raises(ValueError):
        closed_form_char_poly((2, 1), ChannelParams(0.5, 2), 0)


@given(st.floats(0, 1), st.integers(2, 6), st.sampled_from([0, 1]))
def test_direct_q_forms(q, d, k):
    p = ChannelParams(q, d)
    assert np.abs(cyclic_m3_eigenvalues(p, k) - eigenvalues_analytic((3, 3), p, k)).max() < 1e-12
    assert np.abs(m6_eigenvalues(p, k) - eigenvalues_analytic((6, 1), p, k)).max() < 1e-12


@given(st.floats(0, 1), st.integers(2, 6), st.sampled_from([0, 1]))
def test_char_poly_roots(q, d, k):
    p = ChannelParams(q, d)
    for cid in UNCATALOGED + ((4, 1), (6, 1)):
        cfg = equiprobable(published_support(*cid))
        poly = closed_form_char_poly(cid, p, k)
        for lam in eigenvalues_numeric(reduced_matrix(cfg, p, k)):
            assert abs(poly(lam)) < 1e-9


def test_char_poly_monic():
    a = _sym(np.linspace(0, 1, 21))
    c = char_poly(a)
    assert c[0] == 1 and abs(-c[1] - np.trace(a)) < 1e-12 and abs(c[-1] - np.linalg.det(a)) < 1e-10


def test_signature():
    # permuting order labels inside a class leaves the signature alone
    assert signatures_match(invariant_signature(equiprobable([1, 2])), invariant_signature(equiprobable([5, 6])))
    assert not signatures_match(invariant_signature(equiprobable([1, 2])), invariant_signature(equiprobable([1, 6])))
    assert not signatures_match([1.0, 2.0], [1.0])
    with pytest.raises(ValueError):
        invariant_signature(equiprobable([1]), ())
