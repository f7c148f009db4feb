"""Brute-force 3-switch built from explicit Kraus operators.

Independent of the block-coefficient pipeline: the switch output is summed
over every Kraus triple with the channel order selected by the control, and
the full ``6d x 6d`` state is diagonalized directly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blocks import ChannelParams
from .holevo import HolevoResult, von_neumann_entropy
from .switch import N_ORDERS, ORDERS, OrderConfiguration

DEFAULT_MAX_DIM = 3


@dataclass(frozen=True)
class KrausSet:
    operators: np.ndarray   # (n, d, d) complex

    def completeness_error(self) -> float:
        d = self.operators.shape[-1]
        total = np.einsum("kba,kbc->ac", self.operators.conj(), self.operators)
        return float(np.abs(total - np.eye(d)).max())

    def apply(self, rho) -> np.ndarray:
        return np.einsum("kab,bc,kdc->ad", self.operators, rho, self.operators.conj())


def weyl_operators(d: int) -> np.ndarray:
    """The d^2 Heisenberg-Weyl unitaries ``X^a Z^b``, identity first."""
    shift = np.roll(np.eye(d), 1, axis=0)
    clock = np.diag(np.exp(2j * np.pi * np.arange(d) / d))
    return np.array([
        np.linalg.matrix_power(shift, a) @ np.linalg.matrix_power(clock, b)
        for a in range(d) for b in range(d)
    ])


def depolarizing_kraus(params: ChannelParams) -> KrausSet:
    q, d = params.q, params.d
    w = weyl_operators(d)
    weights = np.full(d * d, (1 - q) / d**2)
    weights[0] += q
    return KrausSet(np.sqrt(weights)[:, None, None] * w)


def order_products(kraus: KrausSet) -> np.ndarray:
    """``T[n, (i, j, l)]``: composite Kraus operator for control label n+1.

    Indices i, j, l run over the Kraus sets of channels 1, 2, 3; label ``n``
    with order ``(a, b, c)`` composes ``K^(a) K^(b) K^(c)`` (channel ``c``
    acts first).
    """
    K = kraus.operators
    r, d = K.shape[0], K.shape[-1]
    letters = {1: "i", 2: "j", 3: "l"}
    out = np.empty((N_ORDERS, r**3, d, d), dtype=complex)
    for label, (a, b, c) in ORDERS.items():
        spec = f"{letters[a]}pq,{letters[b]}qr,{letters[c]}rs->ijlps"
        out[label - 1] = np.einsum(spec, K, K, K).reshape(r**3, d, d)
    return out


def switch_output(config: OrderConfiguration, params: ChannelParams, target, *,
                  max_dim: int = DEFAULT_MAX_DIM, kraus: KrausSet | None = None) -> np.ndarray:
    """Output ``S(target (x) psi_c psi_c^dag)`` as a ``6d x 6d`` matrix.

    Control-major ordering: block ``(n, n')`` occupies rows ``n*d:(n+1)*d``.
    """
    d = params.d
    if d > max_dim:
        raise ValueError(f"d={d} exceeds the brute-force cap max_dim={max_dim}")
    target = np.asarray(target, dtype=complex)
    if target.shape != (d, d):
        raise ValueError(f"target must be {d}x{d}, got {target.shape}")
    kraus = kraus or depolarizing_kraus(params)
    T = order_products(kraus)
    amp = np.sqrt(np.asarray(config.probs))
    # each K_ijk is block diagonal in the control basis, so the sum over
    # triples factorizes into one d x d sum per block
    left = np.einsum("ntab,bc->ntac", T, target)
    blocks = np.einsum("ntac,mtdc->nmad", left, T.conj())
    blocks *= (amp[:, None] * amp[None, :])[:, :, None, None]
    return blocks.transpose(0, 2, 1, 3).reshape(N_ORDERS * d, N_ORDERS * d)


def output_block(state: np.ndarray, d: int, n: int, n2: int) -> np.ndarray:
    """Block ``(n, n2)`` (1-based control labels) of a full output state."""
    return state[(n - 1) * d:n * d, (n2 - 1) * d:n2 * d]


def trace_target(state: np.ndarray, d: int) -> np.ndarray:
    return state.reshape(N_ORDERS, d, N_ORDERS, d).trace(axis1=1, axis2=3)


def trace_control(state: np.ndarray, d: int) -> np.ndarray:
    return state.reshape(N_ORDERS, d, N_ORDERS, d).trace(axis1=0, axis2=2)


def holevo_bruteforce(config: OrderConfiguration, params: ChannelParams, *,
                      max_dim: int = DEFAULT_MAX_DIM) -> HolevoResult:
    """Holevo information from full output states of basis-state inputs."""
    d = params.d
    kraus = depolarizing_kraus(params)
    entropies = []
    control = None
    for t in range(d):
        target = np.zeros((d, d))
        target[t, t] = 1.0
        state = switch_output(config, params, target, max_dim=max_dim, kraus=kraus)
        entropies.append(von_neumann_entropy(0.5 * (state + state.conj().T)))
        if control is None:
            control = trace_target(state, d)
    hm = min(entropies)
    hc = von_neumann_entropy(0.5 * (control + control.conj().T))
    chi = np.log2(d) + hc - hm
    return HolevoResult(max(float(chi), 0.0) if chi > -1e-9 else float(chi), hm, hc, params, config)
