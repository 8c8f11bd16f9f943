"""Dense decompositions used by the rest of the package.

All matrices are plain ``numpy.ndarray`` objects of dtype ``float64`` in
numpy's default (row-major) layout. The heavy lifting is delegated to LAPACK
through ``numpy.linalg``; this module pins down the conventions the other
modules rely on:

* singular values and eigenvalues are always returned in **descending** order,
* singular vector signs are arbitrary (every consumer uses squares or norms),
* non-finite input is rejected instead of propagated.
"""

from dataclasses import dataclass

import numpy as np

from .errors import AsymmetryError, DimensionError, NonFiniteError

SYMMETRY_RTOL = 1e-10


def as_dense(a, name="matrix", ndim=2):
    """Return ``a`` as a finite float64 array with ``ndim`` dimensions."""
    arr = np.asarray(a, dtype=np.float64)
    if arr.ndim != ndim:
        raise DimensionError(f"{name} must be {ndim}-D, got shape {arr.shape}")
    if arr.size == 0:
        raise DimensionError(f"{name} is empty (shape {arr.shape})")
    if not np.all(np.isfinite(arr)):
        bad = int(np.count_nonzero(~np.isfinite(arr)))
        raise NonFiniteError(f"{name} has {bad} non-finite entries")
    return arr


@dataclass(frozen=True)
class SvdFactors:
    """``A = left[:, :k] @ diag(values) @ right.T`` with ``k = len(values)``.

    ``right`` always has ``k`` columns; ``left`` has ``n`` columns when
    ``full_left`` is set.
    """

    left: np.ndarray
    values: np.ndarray
    right: np.ndarray
    full_left: bool


@dataclass(frozen=True)
class EigFactors:
    values: np.ndarray
    vectors: np.ndarray


def svd_full(a):
    """SVD with the complete ``n x n`` orthonormal left factor.

    The extra ``n - min(n, k)`` left columns complete the column space to
    an orthonormal basis of R^n. ``numpy.linalg.LinAlgError`` from the
    backend is not caught.
    """
    a = as_dense(a)
    left, values, right_t = np.linalg.svd(a, full_matrices=True)
    return SvdFactors(left=left, values=values, right=right_t[: values.size].T, full_left=True)


def svd_values(a):
    """Singular values of ``a``, descending. No factors are formed."""
    a = as_dense(a)
    return np.linalg.svd(a, compute_uv=False)


def sym_eig_desc(a):
    """Eigen-decomposition of a symmetric matrix, eigenvalues descending.

    The input is symmetrized as ``(A + A^T)/2`` before factoring; an input
    whose asymmetry exceeds ``1e-10 * ||A||_F`` is rejected.
    """
    a = as_dense(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"matrix must be square, got {a.shape}")
    scale = np.linalg.norm(a)
    skew = np.linalg.norm(a - a.T)
    if skew > SYMMETRY_RTOL * scale:
        raise AsymmetryError(f"||A - A^T||_F = {skew:.3e} exceeds {SYMMETRY_RTOL:g} * ||A||_F")
    values, vectors = np.linalg.eigh(0.5 * (a + a.T))
    return EigFactors(values=values[::-1].copy(), vectors=vectors[:, ::-1].copy())
