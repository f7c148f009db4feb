"""Fractional causal order and the flat-simplex Monte-Carlo scan.

The fractional order of a probability vector is the exponential of its
order-2 Renyi entropy, ``1 / sum P_k^2``; it equals m on an equiprobable
configuration with m orders.

Random streams: the sample is cut into chunks of ``CHUNK`` configurations and
chunk ``c`` draws from ``PCG64(SeedSequence(seed, spawn_key=(c,)))``.  The
output therefore does not depend on how chunks are distributed over workers.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .blocks import ChannelParams
from .holevo import holevo_batch
from .switch import N_ORDERS, OrderConfiguration

CHUNK = 4096
DEFAULT_BINS = 100
M_RANGE = (1.0, float(N_ORDERS))


def fractional_order(config: OrderConfiguration | np.ndarray) -> float | np.ndarray:
    p = config.as_array() if isinstance(config, OrderConfiguration) else np.asarray(config, dtype=float)
    out = 1.0 / np.sum(p * p, axis=-1)
    # equal nonzero weights: the value is their count, returned without round-off
    nz = p > 0
    top = np.max(p, axis=-1, keepdims=True)
    flat = np.all(~nz | (p == top), axis=-1)
    out = np.where(flat, np.count_nonzero(nz, axis=-1), out).astype(float)
    return float(out) if np.ndim(out) == 0 else out


def _chunk_rng(seed: int, chunk: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(chunk,))))


def _chunk_sizes(count: int) -> list[int]:
    full, rest = divmod(count, CHUNK)
    return [CHUNK] * full + ([rest] if rest else [])


def _draw_chunk(seed: int, chunk: int, size: int) -> np.ndarray:
    e = _chunk_rng(seed, chunk).standard_exponential((size, N_ORDERS))
    return e / e.sum(axis=1, keepdims=True)


def sample_simplex_array(count: int, seed: int) -> np.ndarray:
    """``(count, 6)`` probability vectors, uniform on the 5-simplex."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    return np.concatenate([_draw_chunk(seed, c, n) for c, n in enumerate(_chunk_sizes(count))])


def sample_simplex(count: int, seed: int) -> list[OrderConfiguration]:
    return [OrderConfiguration(tuple(row)) for row in sample_simplex_array(count, seed)]


@dataclass(frozen=True)
class FractionalSample:
    config: OrderConfiguration
    m_frac: float
    chi: float
    d: int


@dataclass
class ScanResult:
    probs: np.ndarray
    m_frac: np.ndarray
    chi: np.ndarray
    bin_edges: np.ndarray
    density: np.ndarray
    params: ChannelParams
    seed: int
    meta: dict = field(default_factory=dict)

    @property
    def samples(self) -> list[FractionalSample]:
        return [
            FractionalSample(OrderConfiguration(tuple(p)), float(m), float(c), self.params.d)
            for p, m, c in zip(self.probs, self.m_frac, self.chi)
        ]

    def histogram_integral(self) -> float:
        return float(np.sum(self.density * np.diff(self.bin_edges)))


def sigma_m(m_frac: np.ndarray, bins: int = DEFAULT_BINS) -> tuple[np.ndarray, np.ndarray]:
    """Density histogram of fractional orders over ``[1, 6]``."""
    density, edges = np.histogram(m_frac, bins=bins, range=M_RANGE, density=True)
    return edges, density


def lower_frontier(m_frac: np.ndarray, chi: np.ndarray, bins: int = DEFAULT_BINS) -> tuple[np.ndarray, np.ndarray]:
    """Per-bin minimum of chi over uniform m bins; NaN where a bin is empty.

    A post-processing view of the scatter, not part of the scan itself.
    """
    edges = np.linspace(*M_RANGE, bins + 1)
    idx = np.clip(np.digitize(m_frac, edges) - 1, 0, bins - 1)
    lo = np.full(bins, np.nan)
    for b in range(bins):
        sel = chi[idx == b]
        if sel.size:
            lo[b] = sel.min()
    return edges, lo


def _scan_chunk(seed: int, chunk: int, size: int, params: ChannelParams):
    probs = _draw_chunk(seed, chunk, size)
    chi, _, _ = holevo_batch(probs, params)
    return probs, chi


def scan(count: int = 10_000, d: int = 2, q: float = 0.0, seed: int = 0,
         bins: int = DEFAULT_BINS, workers: int = 1) -> ScanResult:
    """Holevo information against fractional order for a flat-simplex sample."""
    params = ChannelParams(q, d)
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    jobs = list(enumerate(_chunk_sizes(count)))
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda job: _scan_chunk(seed, job[0], job[1], params), jobs))
    else:
        parts = [_scan_chunk(seed, c, n, params) for c, n in jobs]
    probs = np.concatenate([p for p, _ in parts])
    chi = np.concatenate([c for _, c in parts])
    m_frac = fractional_order(probs)
    edges, density = sigma_m(m_frac, bins)
    meta = {"count": count, "d": d, "q": q, "seed": seed, "bins": bins,
            "generator": "PCG64", "chunk": CHUNK}
    return ScanResult(probs, m_frac, chi, edges, density, params, seed, meta)
