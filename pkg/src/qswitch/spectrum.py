"""Eigenvalues of the reduced switch matrices.

Two independent routes are provided: a numeric symmetric eigensolver (LAPACK,
or a cyclic Jacobi sweep) and closed-form eigenvalues for the equivalence
classes where they are known.  Characteristic-polynomial coefficients built
from the numeric spectrum serve as the class invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .blocks import BlockKind, ChannelParams, block_coefficients, eigen_branch_value
from .switch import (
    CANONICAL_PATTERN,
    BlockPattern,
    OrderConfiguration,
    ReducedMatrix,
    reduced_matrices,
    reduced_matrix,
)

NEGATIVE_TOL = 1e-12
JACOBI_TOL = 1e-14

# q avoids 0 and 1, where distinct classes can share a spectrum
DEFAULT_SAMPLE_POINTS: tuple[tuple[float, int, int], ...] = tuple(
    (q, d, k) for q in (0.15, 0.45, 0.85) for d in (2, 3) for k in (0, 1)
)
SIGNATURE_RTOL = 1e-9
SIGNATURE_ZERO = 1e-13


class ConvergenceError(RuntimeError):
    pass


def jacobi_eigvalsh(a, tol: float = JACOBI_TOL, max_sweeps: int = 64) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps stop once the Frobenius norm of the off-diagonal part falls below
    ``tol * max(1, ||a||_F)``.  Returned in descending order.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.allclose(a, a.T, atol=1e-13, rtol=0):
        raise ValueError("matrix is not symmetric")
    a = 0.5 * (a + a.T)
    threshold = tol * max(1.0, float(np.linalg.norm(a)))
    off_mask = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        # summed directly; ||a||^2 - ||diag||^2 cancels badly near convergence
        if np.sqrt(np.sum(a[off_mask] ** 2)) <= threshold:
            return np.sort(np.diag(a))[::-1]
        for p in range(n - 1):
            for r in range(p + 1, n):
                apr = a[p, r]
                if abs(apr) <= 1e-300:
                    continue
                diff = a[r, r] - a[p, p]
                if abs(apr) < 1e-18 * abs(diff):
                    t = apr / diff
                else:
                    theta = diff / (2.0 * apr)
                    t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0)) if theta != 0 else 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                ap = a[:, p].copy()
                ar = a[:, r].copy()
                a[:, p] = c * ap - s * ar
                a[:, r] = s * ap + c * ar
                ap = a[p, :].copy()
                ar = a[r, :].copy()
                a[p, :] = c * ap - s * ar
                a[r, :] = s * ap + c * ar
                a[p, r] = a[r, p] = 0.0
    raise ConvergenceError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def clamp_nonnegative(values: np.ndarray, tol: float = NEGATIVE_TOL) -> np.ndarray:
    """Zero out eigenvalues in ``[-tol, 0)``; anything more negative is a fault."""
    values = np.asarray(values, dtype=float)
    worst = values.min(initial=0.0)
    if worst < -tol:
        raise ValueError(f"eigenvalue {worst:.3e} is below the tolerance -{tol:g}")
    return np.where(values < 0.0, 0.0, values)


def eigenvalues_numeric(mat, method: str = "lapack") -> np.ndarray:
    """Six eigenvalues of a reduced matrix, descending."""
    a = np.asarray(mat.entries if isinstance(mat, ReducedMatrix) else mat, dtype=float)
    if method == "lapack":
        return np.linalg.eigvalsh(a)[::-1]
    if method == "jacobi":
        return jacobi_eigvalsh(a)
    raise ValueError(f"unknown eigensolver {method!r}")


@dataclass(frozen=True)
class SwitchSpectrum:
    """``lambdas[s, k]``: eigenvalue ``s`` of the branch-``k`` reduced matrix.

    The ``k = 0`` column occurs with multiplicity ``d - 1`` in the full
    output, the ``k = 1`` column once.
    """

    lambdas: np.ndarray
    d: int

    def __post_init__(self):
        lam = clamp_nonnegative(self.lambdas)
        if lam.shape != (6, 2):
            raise ValueError(f"spectrum must have shape (6, 2), got {lam.shape}")
        object.__setattr__(self, "lambdas", lam)

    def total_weight(self) -> float:
        return float((self.d - 1) * self.lambdas[:, 0].sum() + self.lambdas[:, 1].sum())


def switch_spectrum(config: OrderConfiguration, params: ChannelParams, method: str = "lapack",
                    pattern: BlockPattern = CANONICAL_PATTERN) -> SwitchSpectrum:
    cols = [eigenvalues_numeric(reduced_matrix(config, params, k, pattern), method) for k in (0, 1)]
    return SwitchSpectrum(np.column_stack(cols), params.d)


def batched_spectra(probs: np.ndarray, params: ChannelParams) -> np.ndarray:
    """Eigenvalues for a stack of configurations: (N, 6) -> (N, 6, 2)."""
    return np.stack(
        [np.linalg.eigvalsh(reduced_matrices(probs, params, k)) for k in (0, 1)], axis=-1
    )


# ---------------------------------------------------------------------------
# closed forms, keyed by (m, class label of the published class table)

def branch_scalars(params: ChannelParams, k: int) -> tuple[float, float, float, float]:
    """``(A_k, B_k, D_k, F_k)``: the block values on the branch ``k``."""
    return tuple(
        eigen_branch_value(block_coefficients(kind, params), k, params.d)
        for kind in (BlockKind.A, BlockKind.B, BlockKind.D, BlockKind.F)
    )


def _m1(A, B, D, F):
    return [A, 0, 0, 0, 0, 0]


def _m2(X):
    return lambda A, B, D, F: [(A - X(B, D, F)) / 2, (A + X(B, D, F)) / 2, 0, 0, 0, 0]


def _m3_class1(A, B, D, F):
    root = np.sqrt(D * D + 8 * B * B)
    return [(A - D) / 3, (2 * A + D - root) / 6, (2 * A + D + root) / 6, 0, 0, 0]


def _m3_class3(A, B, D, F):
    return [(A - D) / 3, (A - D) / 3, (A + 2 * D) / 3, 0, 0, 0]


def _m4_class1(A, B, D, F):
    # each pair has its own discriminant: the sign of the 8DB term follows the
    # sign of B + F in the pair (a single shared root does not solve the quartic)
    g_minus = np.sqrt(max(4 * D * D + 5 * B * B - 8 * D * B - 2 * B * F + F * F, 0.0))
    g_plus = np.sqrt(max(4 * D * D + 5 * B * B + 8 * D * B - 2 * B * F + F * F, 0.0))
    return [
        (2 * A - g_minus - B - F) / 8,
        (2 * A + g_minus - B - F) / 8,
        (2 * A - g_plus + B + F) / 8,
        (2 * A + g_plus + B + F) / 8,
        0,
        0,
    ]


def _m4_class3(A, B, D, F):
    return [
        (A - D + B - F) / 4,
        (A + D - B - F) / 4,
        (A - D - B + F) / 4,
        (A + D + B + F) / 4,
        0,
        0,
    ]


def _m6(A, B, D, F):
    return [
        (A - D + B - F) / 6,
        (A - D + B - F) / 6,
        (A + 2 * D - 2 * B - F) / 6,
        (A - D - B + F) / 6,
        (A - D - B + F) / 6,
        (A + 2 * D + 2 * B + F) / 6,
    ]


_ANALYTIC: dict[tuple[int, int], Callable] = {
    (1, 1): _m1,
    (2, 1): _m2(lambda B, D, F: B),
    (2, 2): _m2(lambda B, D, F: D),
    (2, 3): _m2(lambda B, D, F: F),
    (3, 1): _m3_class1,
    (3, 3): _m3_class3,
    (4, 1): _m4_class1,
    (4, 3): _m4_class3,
    (6, 1): _m6,
}
# roots not available in closed form; checked against their polynomials instead
UNCATALOGED: tuple[tuple[int, int], ...] = ((3, 2), (4, 2), (5, 1))
KNOWN_CLASSES = tuple(sorted(set(_ANALYTIC) | set(UNCATALOGED)))


def eigenvalues_analytic(class_id: tuple[int, int], params: ChannelParams, k: int) -> np.ndarray | None:
    """Closed-form eigenvalues (descending) of class ``(m, label)`` or ``None``
    when no closed form exists for that class."""
    class_id = tuple(class_id)
    if class_id not in KNOWN_CLASSES:
        raise ValueError(f"unknown class {class_id}")
    if class_id in UNCATALOGED:
        return None
    vals = _ANALYTIC[class_id](*branch_scalars(params, k))
    return np.sort(np.asarray(vals, dtype=float))[::-1]


def cyclic_m3_eigenvalues(params: ChannelParams, k: int) -> np.ndarray:
    """Eigenvalues of the three-cyclic-order switch written directly in (q, d)."""
    q, d = params.q, params.d
    pair = (d - k) * (q - 1) ** 2 * (q + 1) / (3 * d * d)
    top = (3 * d * d * k * q**3 + d * (-5 * q**3 + 2 * q**2 + 2 * q + 1) + 2 * k * (q - 1) ** 2 * (q + 1)) / (3 * d * d)
    return np.sort([pair, pair, top, 0.0, 0.0, 0.0])[::-1]


def m6_eigenvalues(params: ChannelParams, k: int) -> np.ndarray:
    """Eigenvalues of the all-orders switch written directly in (q, d)."""
    q, d = params.q, params.d
    pair1 = (q - 1) ** 2 * (3 * q + 1) * (d - k) / (6 * d**2)
    single = (q - 1) ** 2 * (d * d + d * k * (2 - 3 * q) + 3 * (q - 1)) / (6 * d**3)
    pair2 = -((q - 1) ** 3) * (d - k) / (6 * d**2)
    top = (
        6 * d**3 * k * q**3
        + d * d * (-10 * q**3 + 3 * q**2 + 6 * q + 1)
        + d * k * (7 * q + 2) * (q - 1) ** 2
        - 3 * (q - 1) ** 3
    ) / (6 * d**3)
    return np.sort([pair1, pair1, single, pair2, pair2, top])[::-1]


# characteristic polynomials det(M - lambda) of each class representative

def _cp_m3_class2(A, B, D, F, x):
    s = D * D + B * B + F * F
    return x**3 * (-A**3 + 9 * A * A * x + A * (s - 27 * x * x) + 27 * x**3 - 3 * x * s - 2 * D * B * F) / 27


def _cp_m4_class2(A, B, D, F, x):
    cubic = (
        A**3
        + A * A * (D - 12 * x)
        - A * (2 * D * D + 8 * D * x - 48 * x * x + 2 * B * B + F * F)
        + 16 * D * x * x
        - 64 * x**3
        + 4 * x * (2 * (D * D + B * B) + F * F)
        + D * F * (4 * B - F)
    )
    return x**2 * (A - D - 4 * x) * cubic / 4**4


def _cp_m5(A, B, D, F, x):
    xi = A**3 + 2 * A * A * D - A * (D * D + 3 * B * B + 2 * B * F + F * F) + 2 * D * (-D * D + B * B + 2 * B * F)
    beta = -15 * A * A - 20 * A * D + 5 * (D * D + 3 * B * B + 2 * B * F + F * F)
    return (
        -x
        * (A - D - 5 * x + B - F)
        * (A - D - 5 * x - B + F)
        * (xi + x * beta + x * x * (75 * A + 50 * D) - 125 * x**3)
        / 5**5
    )


def _cp_m4_class1(A, B, D, F, x):
    left = A * A + A * (-8 * x + B + F) - D * D + 16 * x * x - B * B - 2 * D * B - 4 * x * (B + F) + B * F
    right = A * A - A * (8 * x + B + F) - D * D - B * B + B * (2 * D + 4 * x + F) + 4 * x * (4 * x + F)
    return x**2 * left * right / 4**4


def _cp_m6(A, B, D, F, x):
    return (
        (A + 2 * D - 6 * x - 2 * B - F)
        * (A + 2 * D - 6 * x + 2 * B + F)
        * (-A + D + 6 * x + B - F) ** 2
        * (-A + D + 6 * x - B + F) ** 2
        / 6**6
    )


_CHAR_POLY: dict[tuple[int, int], Callable] = {
    (3, 2): _cp_m3_class2,
    (4, 1): _cp_m4_class1,
    (4, 2): _cp_m4_class2,
    (5, 1): _cp_m5,
    (6, 1): _cp_m6,
}


def closed_form_char_poly(class_id: tuple[int, int], params: ChannelParams, k: int) -> Callable[[float], float]:
    """``lambda -> det(M - lambda)`` for a class with a published polynomial."""
    class_id = tuple(class_id)
    if class_id not in _CHAR_POLY:
        raise ValueError(f"no closed-form characteristic polynomial for class {class_id}")
    A, B, D, F = branch_scalars(params, k)
    poly = _CHAR_POLY[class_id]
    return lambda x: poly(A, B, D, F, x)


def char_poly_residuals(class_id: tuple[int, int], params: ChannelParams, k: int,
                        lambdas: Sequence[float]) -> np.ndarray:
    p = closed_form_char_poly(class_id, params, k)
    return np.array([p(x) for x in lambdas])


def char_poly(mat) -> np.ndarray:
    """Monic coefficients of ``det(lambda - M)``, highest degree first.

    Built from the numeric eigenvalues, which is better conditioned than
    expanding the determinant for these small symmetric matrices.
    """
    a = np.asarray(mat.entries if isinstance(mat, ReducedMatrix) else mat, dtype=float)
    return np.poly(np.linalg.eigvalsh(a)).real


def invariant_signature(config: OrderConfiguration,
                        sample_points: Sequence[tuple[float, int, int]] = DEFAULT_SAMPLE_POINTS) -> tuple[float, ...]:
    """Char-poly coefficients at each ``(q, d, k)`` sample; values below
    ``SIGNATURE_ZERO`` are set to 0.  Compare with `signatures_match`."""
    if not sample_points:
        raise ValueError("at least one sample point is required")
    sig: list[float] = []
    for q, d, k in sample_points:
        coeffs = char_poly(reduced_matrix(config, ChannelParams(q, d), k))
        sig.extend(0.0 if abs(c) < SIGNATURE_ZERO else float(c) for c in coeffs)
    return tuple(sig)


def signatures_match(a: Sequence[float], b: Sequence[float], rtol: float = SIGNATURE_RTOL) -> bool:
    """Equal spectra at every sample point, up to round-off.

    A tolerance test rather than rounding to fixed digits: rounding puts a
    hard boundary somewhere, and equal coefficients that straddle it by one
    ulp would land in different classes.
    """
    a, b = np.asarray(a), np.asarray(b)
    return a.shape == b.shape and bool(np.all(np.abs(a - b) <= rtol * np.maximum(np.abs(a), np.abs(b)) + SIGNATURE_ZERO))
