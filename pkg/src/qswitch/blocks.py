"""Depolarizing-channel model and the four block elements of the 3-switch.

Every block of the switch output is a linear combination of the input state
``rho`` and the maximally mixed state ``1/d``.  A block is therefore stored as
the pair ``(rho_coeff, id_coeff)`` meaning ``rho_coeff * rho + id_coeff * 1/d``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple


@dataclass(frozen=True)
class ChannelParams:
    """Depolarizing strength ``q`` (0 = fully noisy, 1 = transparent) and
    target dimension ``d``."""

    q: float
    d: int

    def __post_init__(self):
        if not 0.0 <= self.q <= 1.0:
            raise ValueError(f"depolarizing strength q must lie in [0, 1], got {self.q}")
        if int(self.d) != self.d or self.d < 2:
            raise ValueError(f"dimension d must be an integer >= 2, got {self.d}")
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "q", float(self.q))


class BlockKind(enum.Enum):
    A = "A"
    B = "B"
    D = "D"
    F = "F"

    def __str__(self):
        return self.value


class BlockCoefficients(NamedTuple):
    rho_coeff: float
    id_coeff: float


def block_coefficients(kind: BlockKind | str, params: ChannelParams) -> BlockCoefficients:
    """Return the ``(rho, 1/d)`` coefficient pair of block `kind` at ``(q, d)``.

    A sits on the diagonal (definite orders), B couples orders related by an
    adjacent transposition, D by a cyclic shift and F by the reversal.
    """
    kind = BlockKind(kind)
    q, d = params.q, params.d
    d2 = d * d
    if kind is BlockKind.A:
        return BlockCoefficients(q**3, 1.0 - q**3)
    if kind is BlockKind.D:
        return BlockCoefficients(
            ((d2 + 1) * q**3 - q**2 - q + 1) / d2,
            -2 * q**3 + q**2 + q,
        )
    if kind is BlockKind.B:
        return BlockCoefficients(
            q * ((d2 + 1) * q**2 - 2 * q + 1) / d2,
            -(q - 1) * ((d2 + 1) * q**2 + 2 * (d2 - 1) * q + 1) / d2,
        )
    # F: identity part (1/d^3)(...) * 1 written as (1/d^2)(...) * 1/d
    return BlockCoefficients(
        (d2 * q**3 + 3 * (q - 1) ** 2 * q) / d2,
        ((1 - q) ** 3 - 3 * d2 * (q - 1) * q**2) / d2,
    )


def eigen_branch_value(coeffs: BlockCoefficients, k: int, d: int) -> float:
    """Scalar value of a block on the common eigenvector where ``rho`` has
    eigenvalue ``k`` (0 or 1)."""
    if k not in (0, 1):
        raise ValueError(f"target index k must be 0 or 1, got {k}")
    return coeffs.rho_coeff * k + coeffs.id_coeff / d


def control_trace_value(coeffs: BlockCoefficients) -> float:
    """Trace of the block over the target (``Tr rho = Tr 1/d = 1``)."""
    return coeffs.rho_coeff + coeffs.id_coeff


def all_coefficients(params: ChannelParams) -> dict[BlockKind, BlockCoefficients]:
    return {kind: block_coefficients(kind, params) for kind in BlockKind}
