"""Holevo information of three depolarizing channels in a superposition of
causal orders (the quantum 3-switch)."""

__version__ = "0.1.0"

from .blocks import (
    BlockCoefficients,
    BlockKind,
    ChannelParams,
    block_coefficients,
    control_trace_value,
    eigen_branch_value,
)
from .switch import (
    ORDERS,
    BlockPattern,
    OrderConfiguration,
    ReducedMatrix,
    canonical_pattern,
    control_output,
    equiprobable,
    reduced_matrix,
)
from .spectrum import (
    SwitchSpectrum,
    char_poly,
    eigenvalues_analytic,
    eigenvalues_numeric,
    invariant_signature,
    signatures_match,
    jacobi_eigvalsh,
    switch_spectrum,
)
from .holevo import HolevoResult, h_control, h_min, holevo, holevo_batch, holevo_m6_analytic
from .classifier import ClassTable, classify, enumerate_configs, verify_against_published
from .oracle import depolarizing_kraus, holevo_bruteforce, switch_output
from .fractional import ScanResult, fractional_order, sample_simplex, scan
