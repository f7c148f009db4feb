"""Order configurations and the 6x6 switch matrices built from them.

Control labels are 1-based everywhere in the public API::

    1 -> N1 o N2 o N3      4 -> N2 o N3 o N1
    2 -> N1 o N3 o N2      5 -> N3 o N1 o N2
    3 -> N2 o N1 o N3      6 -> N3 o N2 o N1
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .blocks import (
    BlockKind,
    ChannelParams,
    block_coefficients,
    control_trace_value,
    eigen_branch_value,
)

N_ORDERS = 6

ORDERS: dict[int, tuple[int, int, int]] = {
    1: (1, 2, 3),
    2: (1, 3, 2),
    3: (2, 1, 3),
    4: (2, 3, 1),
    5: (3, 1, 2),
    6: (3, 2, 1),
}

# upper triangle of the switch matrix, 1-based (i, j) -> block kind
_UPPER = {
    (1, 2): "B", (1, 3): "B", (1, 4): "D", (1, 5): "D", (1, 6): "F",
    (2, 3): "D", (2, 4): "F", (2, 5): "B", (2, 6): "D",
    (3, 4): "B", (3, 5): "F", (3, 6): "D",
    (4, 5): "D", (4, 6): "B",
    (5, 6): "B",
}


@dataclass(frozen=True)
class OrderConfiguration:
    """Probability vector over the six causal orders.

    The control state is ``sum_n sqrt(P_n) |n>``.
    """

    probs: tuple[float, ...]

    def __post_init__(self):
        p = tuple(float(x) for x in self.probs)
        if len(p) != N_ORDERS:
            raise ValueError(f"expected {N_ORDERS} probabilities, got {len(p)}")
        if min(p) < 0.0:
            raise ValueError(f"probabilities must be non-negative: {p}")
        if abs(sum(p) - 1.0) > 1e-12:
            raise ValueError(f"probabilities must sum to 1, got {sum(p)!r}")
        object.__setattr__(self, "probs", p)

    @property
    def support(self) -> frozenset[int]:
        """1-based labels of the orders with non-zero weight."""
        return frozenset(i + 1 for i, p in enumerate(self.probs) if p > 0.0)

    @property
    def m(self) -> int:
        return len(self.support)

    def as_array(self) -> np.ndarray:
        return np.array(self.probs)

    @classmethod
    def from_array(cls, probs) -> "OrderConfiguration":
        return cls(tuple(np.asarray(probs, dtype=float)))

    def __str__(self):
        return "P=(" + ", ".join(f"{p:.6g}" for p in self.probs) + ")"


def equiprobable(support: Iterable[int]) -> OrderConfiguration:
    """Configuration with ``P_n = 1/m`` on the given 1-based labels."""
    labels = sorted(set(support))
    if not labels or labels[0] < 1 or labels[-1] > N_ORDERS:
        raise ValueError(f"support must be a non-empty subset of 1..6, got {labels}")
    p = [0.0] * N_ORDERS
    for n in labels:
        p[n - 1] = 1.0 / len(labels)
    # 1/m summed m times can miss 1 by an ulp; the validator allows 1e-12
    return OrderConfiguration(tuple(p))


class BlockPattern:
    """Symmetric 6x6 arrangement of block kinds, A on the diagonal.

    Indexing with ``pattern[i, j]`` uses 1-based control labels; ``kinds``
    holds the 0-based nested tuple.
    """

    def __init__(self, kinds: Sequence[Sequence[BlockKind]]):
        grid = tuple(tuple(BlockKind(k) for k in row) for row in kinds)
        if len(grid) != N_ORDERS or any(len(r) != N_ORDERS for r in grid):
            raise ValueError("block pattern must be 6x6")
        for i in range(N_ORDERS):
            if grid[i][i] is not BlockKind.A:
                raise ValueError("diagonal of the block pattern must be A")
            for j in range(N_ORDERS):
                if grid[i][j] is not grid[j][i]:
                    raise ValueError("block pattern must be symmetric")
        self.kinds = grid

    def __getitem__(self, ij: tuple[int, int]) -> BlockKind:
        i, j = ij
        return self.kinds[i - 1][j - 1]

    def __eq__(self, other):
        return isinstance(other, BlockPattern) and self.kinds == other.kinds

    def __hash__(self):
        return hash(self.kinds)

    def replace(self, i: int, j: int, kind: BlockKind | str) -> "BlockPattern":
        """Copy with the (i, j) and (j, i) entries set to `kind` (1-based)."""
        rows = [list(r) for r in self.kinds]
        rows[i - 1][j - 1] = rows[j - 1][i - 1] = BlockKind(kind)
        return BlockPattern(rows)

    def value_matrix(self, values: dict[BlockKind, float]) -> np.ndarray:
        return np.array([[values[k] for k in row] for row in self.kinds])

    def __repr__(self):
        return "BlockPattern(\n" + "\n".join(" ".join(str(k) for k in r) for r in self.kinds) + ")"


def canonical_pattern() -> BlockPattern:
    rows = [[BlockKind.A] * N_ORDERS for _ in range(N_ORDERS)]
    for (i, j), kind in _UPPER.items():
        rows[i - 1][j - 1] = rows[j - 1][i - 1] = BlockKind(kind)
    return BlockPattern(rows)


CANONICAL_PATTERN = canonical_pattern()


@dataclass(frozen=True)
class ReducedMatrix:
    """Scalar 6x6 switch matrix on the ``k`` branch of the target."""

    entries: np.ndarray
    k: int
    params: ChannelParams

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)


def branch_values(params: ChannelParams, k: int, pattern: BlockPattern = CANONICAL_PATTERN) -> np.ndarray:
    """6x6 matrix of per-block eigenvalues on the ``k`` branch (no P weights)."""
    values = {kind: eigen_branch_value(block_coefficients(kind, params), k, params.d) for kind in BlockKind}
    return pattern.value_matrix(values)


def trace_values(params: ChannelParams, pattern: BlockPattern = CANONICAL_PATTERN) -> np.ndarray:
    values = {kind: control_trace_value(block_coefficients(kind, params)) for kind in BlockKind}
    return pattern.value_matrix(values)


def _amplitude_outer(probs: np.ndarray) -> np.ndarray:
    amp = np.sqrt(np.asarray(probs, dtype=float))
    return amp[..., :, None] * amp[..., None, :]


def reduced_matrices(probs: np.ndarray, params: ChannelParams, k: int,
                     pattern: BlockPattern = CANONICAL_PATTERN) -> np.ndarray:
    """Batched `reduced_matrix`: ``probs`` of shape (..., 6) -> (..., 6, 6)."""
    return _amplitude_outer(probs) * branch_values(params, k, pattern)


def control_matrices(probs: np.ndarray, params: ChannelParams,
                     pattern: BlockPattern = CANONICAL_PATTERN) -> np.ndarray:
    """Batched `control_output`: ``probs`` of shape (..., 6) -> (..., 6, 6)."""
    return _amplitude_outer(probs) * trace_values(params, pattern)


def reduced_matrix(config: OrderConfiguration, params: ChannelParams, k: int,
                   pattern: BlockPattern = CANONICAL_PATTERN) -> ReducedMatrix:
    """Entries ``sqrt(P_i P_j) * X_ij`` evaluated on the ``k`` branch."""
    if k not in (0, 1):
        raise ValueError(f"target index k must be 0 or 1, got {k}")
    return ReducedMatrix(reduced_matrices(config.as_array(), params, k, pattern), k, params)


def control_output(config: OrderConfiguration, params: ChannelParams,
                   pattern: BlockPattern = CANONICAL_PATTERN) -> np.ndarray:
    """Output control state (target traced out) as a 6x6 real array."""
    return control_matrices(config.as_array(), params, pattern)
