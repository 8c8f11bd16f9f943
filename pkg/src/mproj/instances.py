"""Random problem instances for property checks.

Bases come from the QR factorization of Gaussian matrices. Masks are either
DEIM masks (the default) or uniformly random index sets.
"""

from dataclasses import dataclass, field

import numpy as np

from .pod import PodBasis
from .projection import cs_factors
from .selection import SelectionOperator, deim_select, mask_condition


@dataclass(frozen=True)
class Instance:
    basis: PodBasis
    mask: SelectionOperator
    samples: np.ndarray = field(repr=False)


def random_orthonormal(rng, n):
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diag(r))


def basis_from_orthonormal(u, m):
    return PodBasis(u1=u[:, :m], u2=u[:, m:], snapshot_values=np.empty(0), m=m)


def random_mask(rng, basis, tries=50):
    """Uniform random mask with ``sigma_m(P^T U1) > 1e-6``."""
    for _ in range(tries):
        idx = rng.choice(basis.n, size=basis.m, replace=False)
        mask = SelectionOperator(tuple(idx), basis.n)
        if mask_condition(mask, basis.u1)[-1] > 1e-6:
            return mask
    return deim_select(basis.u1)


def random_instance(rng, n, m, n_samples, mask="deim"):
    basis = basis_from_orthonormal(random_orthonormal(rng, n), m)
    p = deim_select(basis.u1) if mask == "deim" else random_mask(rng, basis)
    # mix of generic samples and samples close to range(U1)
    coeffs = rng.standard_normal((n, n_samples))
    coeffs[m:] *= rng.choice([1.0, 1e-3], size=n_samples)
    samples = np.hstack([basis.u1, basis.u2]) @ coeffs * rng.uniform(0.1, 10.0)
    return Instance(basis=basis, mask=p, samples=samples)


def instance_family(seed=0, count=200, n_range=(6, 40), max_m=8, max_samples=10, mask="deim"):
    """``count`` instances with ``n`` in ``n_range``, ``1 <= m <= min(max_m, n // 2)``."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        m = int(rng.integers(1, min(max_m, n // 2) + 1))
        n_samples = int(rng.integers(1, max_samples + 1))
        yield random_instance(rng, n, m, n_samples, mask=mask)


def equality_instance(rng, n, m, extra=0):
    """Instance whose samples attain the spectral gap bound exactly.

    With ``Z1^T P^T U2 = [S 0] V2^T`` the rows of the coupling matrix,
    divided by ``s_i``, are the coupled columns ``v_i`` of ``V2``. Sample
    ``j`` (``j = 1..m``) gets ``U2^T f_j = sqrt(lambda_j) v_{m-j+1}`` with
    ``lambda`` descending. The top eigenvectors of ``X X^T`` are then the
    coupled directions in reverse sigma order, which is where the trace
    inequality is tight. ``extra`` further samples point along directions
    orthogonal to every ``v_i``, with eigenvalues below ``lambda_m``.
    """
    for _ in range(100):
        basis = basis_from_orthonormal(random_orthonormal(rng, n), m)
        p = deim_select(basis.u1)
        cs = cs_factors(basis, p)
        if cs.s.min() > 1e-3 and cs.sigma.min() > 1e-3:
            break
    else:  # pragma: no cover - generic instances essentially always qualify
        raise RuntimeError("could not draw a well-separated instance")
    v = cs.coupling / cs.s[:, None]  # m x (n - m), orthonormal rows
    lam = np.sort(rng.uniform(1.0, 10.0, size=m))[::-1]
    cols = [np.sqrt(lam[j]) * v[m - 1 - j] for j in range(m)]
    if extra:
        if n - m < m + extra:
            raise ValueError("not enough free directions for the extra samples")
        # orthonormal directions orthogonal to the coupled rows
        q, _ = np.linalg.qr(np.hstack([v.T, rng.standard_normal((n - m, extra))]))
        free = q[:, m:m + extra]
        small = rng.uniform(0.05, 0.9, size=extra) * lam[-1]
        cols += [np.sqrt(small[j]) * free[:, j] for j in range(extra)]
    x = np.column_stack(cols)
    c = rng.standard_normal((m, x.shape[1]))
    samples = basis.u1 @ c + basis.u2 @ x
    return Instance(basis=basis, mask=p, samples=samples)
