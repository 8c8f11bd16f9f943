"""POD basis with an explicit orthogonal complement.

The error bounds need a *complete* orthonormal basis ``U = [U1 U2]`` of
R^n. ``U1`` holds the leading ``m`` left singular vectors of the snapshot
matrix. ``U2`` holds the remaining ``n - m`` columns of the full left SVD
factor, which extends the snapshot column space to all of R^n. Snapshots
are neither mean-centred nor weighted.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, RankDeficiencyError
from .numerics import SvdFactors, as_dense, svd_full
from .snapshot import SnapshotMatrix, write_matrix_csv

RANK_RTOL = 1e-12


@dataclass(frozen=True)
class PodBasis:
    u1: np.ndarray = field(repr=False)
    u2: np.ndarray = field(repr=False)
    snapshot_values: np.ndarray = field(repr=False)
    m: int

    @property
    def n(self):
        return self.u1.shape[0]

    @property
    def u(self):
        return np.hstack([self.u1, self.u2])


def _data(snapshots):
    if isinstance(snapshots, SnapshotMatrix):
        return snapshots.data
    return as_dense(snapshots, "snapshots")


def pod_factors(snapshots):
    """Full SVD of the snapshot matrix, reusable across several ``m``."""
    return svd_full(_data(snapshots))


def pod_basis(snapshots, m, factors=None):
    """Split the full left factor of ``snapshots`` at rank ``m``.

    Parameters
    ----------
    snapshots : SnapshotMatrix or ndarray
        ``n x N`` training data.
    m : int
        Basis dimension, ``1 <= m < n``.
    factors : SvdFactors, optional
        Precomputed :func:`pod_factors` result for the same snapshots.

    Raises
    ------
    DimensionError
        If ``m`` is outside ``[1, n)``.
    RankDeficiencyError
        If the m-th snapshot singular value is not above
        ``1e-12 * sigma_1`` (or ``m`` exceeds the number of snapshots).
    """
    if factors is None:
        factors = pod_factors(snapshots)
    if not isinstance(factors, SvdFactors) or not factors.full_left:
        raise DimensionError("pod_basis needs factors from svd_full")
    n = factors.left.shape[0]
    m = int(m)
    if not 1 <= m < n:
        raise DimensionError(f"need 1 <= m < n, got m={m}, n={n}")
    values = factors.values
    if m > values.size:
        raise RankDeficiencyError(
            f"m={m} exceeds the {values.size} available snapshot singular values"
        )
    if not values[m - 1] > RANK_RTOL * values[0]:
        raise RankDeficiencyError(
            f"snapshot singular value {m} is {values[m - 1]:.3e} "
            f"(<= {RANK_RTOL:g} * {values[0]:.3e}); basis direction is void"
        )
    return PodBasis(
        u1=factors.left[:, :m],
        u2=factors.left[:, m:],
        snapshot_values=values,
        m=m,
    )


def save_basis(path, basis):
    """Export ``[U1 U2]`` in the snapshot CSV layout (layout tag ``pod-m=<m>``)."""
    write_matrix_csv(path, basis.u, f"pod-m={basis.m}")
