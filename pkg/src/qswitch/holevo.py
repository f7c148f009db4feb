"""Holevo information of the 3-switch, ``chi = log d + H(control) - H_min``.

All logarithms are base 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blocks import ChannelParams
from .spectrum import NEGATIVE_TOL, SwitchSpectrum, batched_spectra, clamp_nonnegative, switch_spectrum
from .switch import (
    CANONICAL_PATTERN,
    BlockPattern,
    OrderConfiguration,
    control_matrices,
    control_output,
    equiprobable,
)

CONTROL_NEGATIVE_TOL = 1e-10
CHI_TOL = 1e-9


@dataclass(frozen=True)
class HolevoResult:
    chi: float
    h_min: float
    h_control: float
    params: ChannelParams
    config: OrderConfiguration | None = None


def xlogx_sum(values, weights=None) -> float:
    """``-sum w * x * log2(x)`` with ``0 log 0 = 0``."""
    x = np.asarray(values, dtype=float)
    w = np.ones_like(x) if weights is None else np.broadcast_to(np.asarray(weights, dtype=float), x.shape)
    pos = x > 0.0
    return float(-np.sum(w[pos] * x[pos] * np.log2(x[pos])))


def von_neumann_entropy(rho, tol: float = CONTROL_NEGATIVE_TOL) -> float:
    """Entropy in bits of a Hermitian PSD matrix."""
    evals = clamp_nonnegative(np.linalg.eigvalsh(np.asarray(rho)), tol)
    return max(0.0, xlogx_sum(evals))


def h_min(spectrum: SwitchSpectrum) -> float:
    """Minimum output entropy from the two-branch spectrum."""
    weights = np.array([spectrum.d - 1, 1], dtype=float)
    # a pure output gives -0 up to round-off
    return max(0.0, xlogx_sum(spectrum.lambdas, weights[None, :]))


def h_control(control) -> float:
    return von_neumann_entropy(control, CONTROL_NEGATIVE_TOL)


def _assemble_chi(d: int, hc, hm):
    chi = np.log2(d) + np.asarray(hc) - np.asarray(hm)
    if np.any(chi < -CHI_TOL):
        raise ValueError(f"negative Holevo information {np.min(chi):.3e}")
    return np.maximum(chi, 0.0)


def holevo(config: OrderConfiguration, params: ChannelParams, method: str = "lapack",
           pattern: BlockPattern = CANONICAL_PATTERN) -> HolevoResult:
    """Holevo information of the switch driven by `config` at ``(q, d)``."""
    hm = h_min(switch_spectrum(config, params, method, pattern))
    hc = h_control(control_output(config, params, pattern))
    chi = float(_assemble_chi(params.d, hc, hm))
    return HolevoResult(chi, hm, hc, params, config)


def holevo_batch(probs, params: ChannelParams) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized pipeline over a stack of probability vectors.

    Returns ``(chi, h_min, h_control)`` arrays of length N.
    """
    probs = np.atleast_2d(np.asarray(probs, dtype=float))
    lam = batched_spectra(probs, params)
    if lam.min(initial=0.0) < -NEGATIVE_TOL:
        raise ValueError(f"switch eigenvalue {lam.min():.3e} below tolerance")
    lam = np.where(lam > 0.0, lam, 0.0)
    weights = np.array([params.d - 1, 1.0])
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(lam > 0.0, lam * np.log2(lam), 0.0)
    hm = np.maximum(-np.einsum("nsk,k->n", terms, weights), 0.0)

    cev = np.linalg.eigvalsh(control_matrices(probs, params))
    if cev.min(initial=0.0) < -CONTROL_NEGATIVE_TOL:
        raise ValueError(f"control eigenvalue {cev.min():.3e} below tolerance")
    cev = np.where(cev > 0.0, cev, 0.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        hc = np.maximum(-np.sum(np.where(cev > 0.0, cev * np.log2(cev), 0.0), axis=-1), 0.0)
    return _assemble_chi(params.d, hc, hm), hm, hc


def holevo_curve(config: OrderConfiguration, qs, d: int) -> np.ndarray:
    return np.array([holevo(config, ChannelParams(q, d)).chi for q in qs])


# ---------------------------------------------------------------------------
# closed forms for the equiprobable superposition of all six orders

def m6_control_elements(params: ChannelParams) -> tuple[float, float, float, float]:
    """``(alpha, beta, gamma, delta)``: the distinct entries of the output
    control matrix (diagonal, B-, D- and F-coupled positions)."""
    q, d = params.q, params.d
    p = 1 - q
    d2 = d * d
    alpha = (q**3 + 3 * q**2 * p + p**3 + 3 * q * p**2) / 6
    beta = (d2 * q**3 + 3 * d2 * q**2 * p + 2 * d2 * q * p**2 + p**3 + q * p**2) / (6 * d2)
    gamma = (d2 * q**3 + 3 * d2 * q**2 * p + d2 * q * p**2 + p**3 + 2 * q * p**2) / (6 * d2)
    delta = (d2 * q**3 + 3 * d2 * q**2 * p + p**3 + 3 * q * p**2) / (6 * d2)
    return alpha, beta, gamma, delta


def m6_control_eigenvalues(params: ChannelParams) -> np.ndarray:
    a, b, g, dl = m6_control_elements(params)
    return np.array([
        a + b - g - dl,
        a + b - g - dl,
        a - 2 * b + 2 * g - dl,
        a - b - g + dl,
        a - b - g + dl,
        a + 2 * b + 2 * g + dl,
    ])


def _weighted_log_terms(terms) -> float:
    """``-prefactor * sum c * log2(x)`` over ``(c, x)`` pairs, skipping c == 0."""
    return float(sum(c * np.log2(x) for c, x in terms if c != 0.0))


def m6_h_min(params: ChannelParams) -> float:
    q, d = params.q, params.d
    p = 1 - q
    d3 = 6 * d**3
    top = 6 * d**3 * q**3 + d * d * (2 * q + 1) * (5 * q + 1) * p + d * (7 * q + 2) * p**2 + 3 * p**3
    mid = p * (d * d * (2 * q + 1) * (5 * q + 1) + 3 * p**2)
    terms = [
        ((d - 1) * p**2 * (d - 3 * q + 3), (d - 1) * p**2 * (d - 3 * q + 3) / d3),
        (2 * (d - 1) * d * p**3, (d - 1) * p**3 / (6 * d * d)),
        (2 * (d - 1) * d * d * p**3, p**3 / (6 * d)),
        (2 * (d - 1) * d * (3 * q + 1) * p**2, (d - 1) * p**2 * (3 * q + 1) / (6 * d * d)),
        (2 * (d - 1) * d * d * (3 * q + 1) * p**2, p**2 * (3 * q + 1) / (6 * d)),
        ((d - 1) * p**2 * (d * d + 3 * q - 3), p**2 * (d * d + 3 * q - 3) / d3),
        ((d - 1) * mid, mid / d3),
        (top, top / d3),
    ]
    return -_weighted_log_terms(terms) / d3


def m6_h_control(params: ChannelParams) -> float:
    # prefactor is 1/(6 d^2) and the spectrum has four distinct values
    q, d = params.q, params.d
    d2 = d * d
    s = 6 * d2
    base = (d2 - 1) * (q - 1) ** 2
    top = d2 * (q * ((3 - 4 * q) * q + 6) + 1) + (q - 1) ** 2 * (4 * q + 5)
    terms = [
        (base, base / s),
        (2 * base * (1 - q), base * (1 - q) / s),
        (2 * base * (3 * q + 1), base * (3 * q + 1) / s),
        (top, top / s),
    ]
    return -_weighted_log_terms(terms) / s


def holevo_m6_analytic(params: ChannelParams) -> HolevoResult:
    """Closed-form Holevo information of the equiprobable six-order switch."""
    hm = m6_h_min(params)
    hc = m6_h_control(params)
    chi = float(_assemble_chi(params.d, hc, hm))
    return HolevoResult(chi, hm, hc, params, equiprobable(range(1, 7)))
