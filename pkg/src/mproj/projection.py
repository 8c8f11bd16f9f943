"""Orthogonal and masked projections and the cosine-sine quantities behind them.

For a complete orthonormal basis ``[U1 U2]`` and a mask ``P`` with
invertible ``P^T U1``:

* orthogonal projection ``f_hat = U1 U1^T f``,
* masked projection ``f_tilde = U1 (P^T U1)^{-1} P^T f``,
* ``f - f_hat`` lies in range(U2) and ``f_tilde - f_hat`` in range(U1), so
  ``||f - f_tilde||^2 = ||f - f_hat||^2 + ||f_tilde - f_hat||^2``.

The CS decomposition of the row-permuted orthogonal matrix gives
``P^T U1 = Z1 C V1^T`` and ``P^T U2 = Z1 [S 0] V2^T``. Only the first block
row is needed. ``Z1^T P^T U2 = [S 0] V2^T`` is kept as the ``coupling``
matrix so ``V2`` is never formed. The masked-minus-orthogonal gap is then
``||C^{-1} coupling U2^T f||^2``, which equals
``sum_i ((1 - sigma_i^2) / sigma_i^2) y_i^2`` with ``y = V2^T U2^T f``.
"""

import warnings
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .errors import DimensionError, SingularMaskError
from .numerics import svd_full
from .selection import INVERTIBLE_ATOL, select_rows


@dataclass(frozen=True)
class CsFactors:
    """First block row of the CS decomposition of ``[P P']^T [U1 U2]``.

    ``coupling`` is ``Z1^T (P^T U2) = [S 0] V2^T`` (shape ``m x (n - m)``);
    its i-th row has norm ``s[i]``.
    """

    sigma: np.ndarray
    s: np.ndarray
    z1: np.ndarray = field(repr=False)
    v1: np.ndarray = field(repr=False)
    coupling: np.ndarray = field(repr=False)
    block_shape_ok: bool = True

    @property
    def c(self):
        return self.sigma

    @property
    def amplification(self):
        """``(1 - sigma_i^2) / sigma_i^2 = sigma_i^{-2} - 1`` per direction."""
        return self.s**2 / self.sigma**2


@dataclass(frozen=True)
class ProjectionPair:
    f: np.ndarray = field(repr=False)
    f_hat: np.ndarray = field(repr=False)
    f_tilde: np.ndarray = field(repr=False)
    err_orth_sq: float
    gap_sq: float
    err_masked_sq: float


def _check_f(basis, f):
    f = np.asarray(f, dtype=np.float64)
    if f.shape[0] != basis.n:
        raise DimensionError(f"sample has length {f.shape[0]}, basis has n={basis.n}")
    return f


def orthogonal_project(basis, f):
    """``U1 (U1^T f)``. ``f`` may be a vector or a matrix of column samples."""
    f = _check_f(basis, f)
    return basis.u1 @ (basis.u1.T @ f)


def _mask_lu(basis, p):
    if p.n != basis.n or p.m != basis.m:
        raise DimensionError(
            f"mask (n={p.n}, m={p.m}) does not match basis (n={basis.n}, m={basis.m})"
        )
    block = select_rows(p, basis.u1)
    sigma_min = np.linalg.svd(block, compute_uv=False)[-1]
    if not sigma_min > INVERTIBLE_ATOL:
        raise SingularMaskError(f"P^T U1 is numerically singular (sigma_m = {sigma_min:.3e})")
    return scipy.linalg.lu_factor(block)


def masked_project(basis, p, f):
    """``U1 (P^T U1)^{-1} P^T f`` via a pivoted LU solve.

    ``f`` may be a vector or a matrix of column samples.
    """
    f = _check_f(basis, f)
    lu = _mask_lu(basis, p)
    return basis.u1 @ scipy.linalg.lu_solve(lu, select_rows(p, f))


def projection_pair(basis, p, f):
    f = _check_f(basis, f)
    if f.ndim != 1:
        raise DimensionError("projection_pair takes a single sample vector")
    f_hat = orthogonal_project(basis, f)
    f_tilde = masked_project(basis, p, f)
    return ProjectionPair(
        f=f,
        f_hat=f_hat,
        f_tilde=f_tilde,
        err_orth_sq=float(np.sum((f - f_hat) ** 2)),
        gap_sq=float(np.sum((f_tilde - f_hat) ** 2)),
        err_masked_sq=float(np.sum((f - f_tilde) ** 2)),
    )


def cs_factors(basis, p):
    """CS quantities for the pair ``(basis, p)``.

    When ``n < 2m`` the textbook block layout of the decomposition does not
    apply. The coupling matrix is still well defined, so a ``RuntimeWarning``
    is issued and ``block_shape_ok`` is set to False.
    """
    q11 = select_rows(p, basis.u1)
    if q11.shape[0] != q11.shape[1]:
        raise DimensionError(f"P^T U1 must be square, got {q11.shape}")
    svd = svd_full(q11)
    sigma = svd.values
    if not sigma[-1] > INVERTIBLE_ATOL:
        raise SingularMaskError(f"P^T U1 is numerically singular (sigma_m = {sigma[-1]:.3e})")
    m, n = basis.m, basis.n
    block_ok = n >= 2 * m
    if not block_ok:
        warnings.warn(
            f"n={n} < 2m={2 * m}: CS block layout degenerates; using coupling matrix only",
            RuntimeWarning,
            stacklevel=2,
        )
    # singular values of a row block of an orthonormal matrix are <= 1 up to rounding
    s = np.sqrt(np.clip(1.0 - sigma**2, 0.0, None))
    coupling = svd.left.T @ select_rows(p, basis.u2)
    return CsFactors(
        sigma=sigma, s=s, z1=svd.left, v1=svd.right, coupling=coupling, block_shape_ok=block_ok
    )


def gap_identity_rhs(cs, basis, f):
    """``||C^{-1} coupling U2^T f||^2``, the exact masked-vs-orthogonal gap.

    Returns a float for a vector ``f`` and one value per column for a
    matrix of samples.
    """
    f = _check_f(basis, f)
    w = (cs.coupling @ (basis.u2.T @ f)) / (cs.sigma if f.ndim == 1 else cs.sigma[:, None])
    out = np.sum(w * w, axis=0)
    return float(out) if f.ndim == 1 else out
