"""Error bounds for masked projections.

With ``sigma_1 >= ... >= sigma_m`` the singular values of ``P^T U1``,
``e_i = ||(I - U1 U1^T) f_i||^2`` the orthogonal-projection errors of
``N`` samples, and ``X = U2^T [f_1 ... f_N]``:

``b_thm1``
    ``(1/N) (1 + sum_j (1 - sigma_j^2)/sigma_j^2) sum_i e_i``
``b_thm2``
    ``(1/N) sum_i e_i + (1/N) sum_{i<=m} (sigma_{m-i+1}^{-2} - 1) lambda_i(X X^T)``
    (the largest amplification, from the smallest sigma, meets the
    largest eigenvalue)
``b_qdeim``
    ``(1/N) (1 + m (n - m)) sum_i e_i``

All three bound the average squared masked-projection error; ``b_qdeim``
only holds for masks with ``sigma_m^{-2} <= 1 + m(n - m)``.
"""

import time
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import DimensionError, MprojError
from .numerics import sym_eig_desc
from .projection import masked_project
from .selection import mask_condition
from .snapshot import SnapshotMatrix

SIGMA_UPPER_SLACK = 1e-12


@dataclass(frozen=True)
class ErrorSummary:
    n_samples: int
    avg_err_masked: float
    avg_err_orth: float
    avg_gap: float


@dataclass(frozen=True)
class SpectralData:
    x_gram_eigs: np.ndarray = field(repr=False)
    sigma: np.ndarray


@dataclass
class BoundReport:
    """One table row. ``failure`` is set (and numbers are NaN) for failed rows."""

    m: int
    avg_err: float
    b_thm1: float
    b_thm2: float
    b_qdeim: float
    sigma_min: float
    n: int
    n_samples: int
    runtime_ms: float
    failure: str | None = None

    @classmethod
    def failed(cls, m, n, n_samples, reason):
        nan = float("nan")
        return cls(m, nan, nan, nan, nan, nan, n, n_samples, 0.0, reason)

    @property
    def ok(self):
        return self.failure is None

    def to_dict(self):
        return asdict(self)


def _sample_matrix(samples):
    if isinstance(samples, SnapshotMatrix):
        return samples.data
    f = np.asarray(samples, dtype=np.float64)
    if f.ndim == 1:
        f = f[:, None]
    if f.ndim != 2 or f.shape[1] < 1:
        raise DimensionError(f"samples must be an n x N matrix with N >= 1, got {f.shape}")
    return f


def _check_sigma(sigma):
    sigma = np.asarray(sigma, dtype=np.float64)
    if sigma.ndim != 1 or sigma.size == 0:
        raise MprojError("sigma must be a non-empty vector")
    if np.any(sigma <= 0.0) or np.any(sigma > 1.0 + SIGMA_UPPER_SLACK):
        raise MprojError(f"singular values of P^T U1 must lie in (0, 1]; got {sigma}")
    return sigma


def orth_errors(basis, samples):
    """Per-sample ``||(I - U1 U1^T) f_i||^2``."""
    f = _sample_matrix(samples)
    if f.shape[0] != basis.n:
        raise DimensionError(f"samples have n={f.shape[0]}, basis has n={basis.n}")
    r = f - basis.u1 @ (basis.u1.T @ f)
    return np.sum(r * r, axis=0)


def thm1_multiplier(sigma):
    sigma = _check_sigma(sigma)
    return 1.0 + float(np.sum((1.0 - sigma**2) / sigma**2))


def bound_thm1_single(sigma, basis, f):
    f = np.asarray(f, dtype=np.float64)
    if f.ndim != 1:
        raise DimensionError("bound_thm1_single takes one sample vector")
    return thm1_multiplier(sigma) * float(orth_errors(basis, f)[0])


def bound_thm1_avg(sigma, basis, samples):
    e = orth_errors(basis, samples)
    return thm1_multiplier(sigma) * float(np.sum(e)) / e.size


def spectral_data(basis, samples, sigma):
    """Eigenvalues of ``X X^T`` for ``X = U2^T F``, descending, length ``n - m``.

    The smaller Gram matrix is factored (``X^T X`` when ``N < n - m``); the
    nonzero spectra coincide and the rest is padded with zeros.
    """
    sigma = _check_sigma(sigma)
    f = _sample_matrix(samples)
    x = basis.u2.T @ f
    k, n_samples = x.shape
    gram = x.T @ x if n_samples < k else x @ x.T
    eigs = np.clip(sym_eig_desc(gram).values, 0.0, None)
    if eigs.size < k:
        eigs = np.concatenate([eigs, np.zeros(k - eigs.size)])
    return SpectralData(x_gram_eigs=eigs, sigma=sigma)


def gap_bound_thm2(spec, n_samples):
    """Spectral bound on the average masked-vs-orthogonal gap."""
    sigma = _check_sigma(spec.sigma)
    if n_samples < 1:
        raise MprojError("n_samples must be >= 1")
    lam = np.asarray(spec.x_gram_eigs, dtype=np.float64)
    if np.any(np.diff(lam) > 0):
        raise MprojError("x_gram_eigs must be sorted descending")
    amp = sigma[::-1] ** -2 - 1.0  # largest first
    k = min(amp.size, lam.size)
    return float(np.dot(amp[:k], lam[:k])) / n_samples


def bound_thm2_avg(spec, basis, samples):
    e = orth_errors(basis, samples)
    return float(np.sum(e)) / e.size + gap_bound_thm2(spec, e.size)


def bound_qdeim_avg(basis, samples, m):
    n = basis.n
    if not 1 <= m < n:
        raise DimensionError(f"need 1 <= m < n, got m={m}, n={n}")
    e = orth_errors(basis, samples)
    return (1.0 + m * (n - m)) * float(np.sum(e)) / e.size


def sota_slack_alpha(sigma, basis, f, n, m):
    """Margin by which the loosened single-sample bound beats the QDEIM bound.

    ``alpha = m ((n - m + 1) - sigma_m^{-2}) ||(I - U1 U1^T) f||^2``; positive
    alpha means ``(1 + m (sigma_m^{-2} - 1)) e < (1 + m (n - m)) e``.
    """
    sigma_min = float(np.min(sigma))
    if not sigma_min > 0:
        raise MprojError("sigma_m must be positive")
    e = float(orth_errors(basis, np.asarray(f, dtype=np.float64))[0])
    return m * ((n - m + 1) - sigma_min**-2) * e


def evaluate_all(basis, p, test):
    """Average error and all three bounds for one ``(basis, mask)`` pair.

    Returns ``(BoundReport, ErrorSummary, SpectralData)``.
    """
    t0 = time.perf_counter()
    f = _sample_matrix(test)
    sigma = mask_condition(p, basis.u1)
    f_hat = basis.u1 @ (basis.u1.T @ f)
    f_tilde = masked_project(basis, p, f)
    n_samples = f.shape[1]
    err_masked = np.sum((f - f_tilde) ** 2, axis=0)
    err_orth = np.sum((f - f_hat) ** 2, axis=0)
    gap = np.sum((f_tilde - f_hat) ** 2, axis=0)
    summary = ErrorSummary(
        n_samples=n_samples,
        avg_err_masked=float(np.sum(err_masked)) / n_samples,
        avg_err_orth=float(np.sum(err_orth)) / n_samples,
        avg_gap=float(np.sum(gap)) / n_samples,
    )
    spec = spectral_data(basis, f, sigma)
    m, n = basis.m, basis.n
    orth = summary.avg_err_orth
    report = BoundReport(
        m=m,
        avg_err=summary.avg_err_masked,
        b_thm1=thm1_multiplier(sigma) * orth,
        b_thm2=orth + gap_bound_thm2(spec, n_samples),
        b_qdeim=(1.0 + m * (n - m)) * orth,
        sigma_min=float(sigma[-1]),
        n=n,
        n_samples=n_samples,
        runtime_ms=(time.perf_counter() - t0) * 1e3,
    )
    return report, summary, spec
