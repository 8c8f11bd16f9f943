"""Selection (mask) operators and the DEIM greedy index selection.

A selection operator ``P`` is an ``n x m`` matrix made of distinct identity
columns. It is stored as its index list only. ``P^T A`` is row extraction
and ``P`` is never formed densely. Indices are 0-based in code and 1-based
in the CSV line format.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DimensionError, MprojError, SingularMaskError
from .numerics import as_dense, svd_values

INVERTIBLE_ATOL = 1e-12
DEIM_RESIDUAL_ATOL = 1e-12
TIE_RTOL = 1e-12


@dataclass(frozen=True)
class SelectionOperator:
    indices: tuple
    n: int

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        if len(set(idx)) != len(idx):
            raise MprojError(f"selection indices must be distinct: {idx}")
        if any(i < 0 or i >= self.n for i in idx):
            raise MprojError(f"selection indices must lie in [0, {self.n}): {idx}")
        if len(idx) > self.n:
            raise MprojError("more selected rows than the ambient dimension")
        object.__setattr__(self, "indices", idx)

    @property
    def m(self):
        return len(self.indices)

    def dense(self):
        """The explicit ``n x m`` matrix. For testing and small examples only."""
        p = np.zeros((self.n, self.m))
        p[list(self.indices), np.arange(self.m)] = 1.0
        return p

    def to_csv_line(self):
        return ",".join(str(i + 1) for i in self.indices)

    @classmethod
    def from_csv_line(cls, line, n):
        parts = [s.strip() for s in line.strip().split(",") if s.strip()]
        return cls(tuple(int(s) - 1 for s in parts), n)


def select_rows(p, a):
    """``P^T a``: the rows ``p.indices`` of ``a``, in mask order."""
    a = np.asarray(a, dtype=np.float64)
    if a.shape[0] != p.n:
        raise DimensionError(f"mask is for n={p.n} but operand has {a.shape[0]} rows")
    return a[list(p.indices)]


def first_max(values):
    """Smallest index whose value is within ``TIE_RTOL`` of the maximum."""
    top = values.max()
    return int(np.flatnonzero(values >= top * (1.0 - TIE_RTOL))[0])


def deim_select(u1):
    """Greedy DEIM interpolation indices for the columns of ``u1``.

    The first index maximizes ``|u1[:, 0]|``. At step ``k`` the ``k``-th
    basis vector is interpolated at the indices chosen so far using the
    previous ``k`` columns, and the next index is the arg-max of the
    absolute interpolation residual. Entries within a relative ``1e-12``
    of the maximum count as tied and the smallest row index wins, so
    exact ties are not decided by rounding.

    Raises
    ------
    SingularMaskError
        If the residual vanishes (max ``|r| <= 1e-12``) at some step,
        i.e. the columns are numerically dependent.
    """
    u1 = np.asarray(u1, dtype=np.float64)
    u1 = as_dense(u1[:, None] if u1.ndim == 1 else u1, "u1")
    n, m = u1.shape
    if m > n:
        raise DimensionError(f"basis has more columns ({m}) than rows ({n})")
    r = np.abs(u1[:, 0])
    if r.max() <= DEIM_RESIDUAL_ATOL:
        raise SingularMaskError("DEIM step 1: first basis vector is numerically zero")
    idx = [first_max(r)]
    for k in range(1, m):
        c = scipy.linalg.solve(u1[idx, :k], u1[idx, k])
        res = np.abs(u1[:, k] - u1[:, :k] @ c)
        j = first_max(res)
        if res[j] <= DEIM_RESIDUAL_ATOL:
            raise SingularMaskError(
                f"DEIM step {k + 1}: residual is numerically zero (max |r| = {res[j]:.3e})"
            )
        idx.append(j)
    return SelectionOperator(tuple(idx), n)


def mask_condition(p, u1):
    """Singular values of ``P^T U1``, descending.

    The caller decides what to do with them; the mask is usable when the
    last value exceeds :data:`INVERTIBLE_ATOL`.
    """
    u1 = np.asarray(u1, dtype=np.float64)
    if p.m != u1.shape[1]:
        raise DimensionError(f"mask selects {p.m} rows but basis has {u1.shape[1]} columns")
    return svd_values(select_rows(p, u1))


def is_invertible(sigma):
    return bool(sigma[-1] > INVERTIBLE_ATOL)
