import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mproj.errors import DimensionError, SingularMaskError
from mproj.instances import basis_from_orthonormal, random_mask, random_orthonormal
from mproj.projection import (
    cs_factors,
    gap_identity_rhs,
    masked_project,
    orthogonal_project,
    projection_pair,
)
from mproj.selection import SelectionOperator, deim_select


def _basis(seed, n, m):
    return basis_from_orthonormal(random_orthonormal(np.random.default_rng(seed), n), m)


def adjugate_inverse(a):
    """Explicit inverse through cofactors, independent of any LU solve."""
    k = a.shape[0]
    if k == 1:
        return np.array([[1.0 / a[0, 0]]])
    cof = np.empty_like(a)
    for i in range(k):
        for j in range(k):
            minor = np.delete(np.delete(a, i, 0), j, 1)
            cof[i, j] = (-1) ** (i + j) * np.linalg.det(minor)
    return cof.T / np.linalg.det(a)


def test_orthogonal_project_examples():
    b = _basis(0, 7, 3)
    c = np.array([1.0, -2.0, 0.5])
    np.testing.assert_allclose(orthogonal_project(b, b.u1 @ c), b.u1 @ c, atol=1e-10)
    np.testing.assert_allclose(orthogonal_project(b, b.u2[:, 0]), np.zeros(7), atol=1e-10)
    f = np.random.default_rng(1).standard_normal(7)
    coef, *_ = np.linalg.lstsq(b.u1, f, rcond=None)
    np.testing.assert_allclose(orthogonal_project(b, f), b.u1 @ coef, atol=1e-12)
    once = orthogonal_project(b, f)
    np.testing.assert_allclose(orthogonal_project(b, once), once, atol=1e-10)


def test_masked_project_examples():
    b = _basis(2, 6, 2)
    p = deim_select(b.u1)
    f = b.u1 @ np.array([0.3, -1.2])
    np.testing.assert_allclose(masked_project(b, p, f), f, atol=1e-8)

    full = basis_from_orthonormal(random_orthonormal(np.random.default_rng(3), 5), 4)
    # m = n - 1 is the largest allowed; with the last direction absent f lies in range(U1)
    g = full.u1 @ np.ones(4)
    np.testing.assert_allclose(masked_project(full, deim_select(full.u1), g), g, atol=1e-10)

    f = np.random.default_rng(4).standard_normal(6)
    pd = p.dense()
    expected = b.u1 @ adjugate_inverse(pd.T @ b.u1) @ pd.T @ f
    np.testing.assert_allclose(masked_project(b, p, f), expected, atol=1e-12)


def test_masked_project_full_selection_is_identity():
    u = random_orthonormal(np.random.default_rng(5), 4)
    f = np.random.default_rng(6).standard_normal(4)
    # with U1 square the masked projection reproduces f for any permutation mask
    p = SelectionOperator((2, 0, 3, 1), 4)
    np.testing.assert_allclose(u @ np.linalg.solve(p.dense().T @ u, p.dense().T @ f), f, atol=1e-12)


def test_masked_project_rejects_singular():
    e = np.eye(4)
    b = basis_from_orthonormal(e, 2)
    with pytest.raises(SingularMaskError, match="sigma_m"):
        masked_project(b, SelectionOperator([2, 3], 4), np.ones(4))
    with pytest.raises(DimensionError):
        masked_project(b, SelectionOperator([0], 4), np.ones(4))
    with pytest.raises(DimensionError):
        masked_project(b, SelectionOperator([0, 1], 4), np.ones(5))


def test_projection_pair_examples():
    b = _basis(7, 8, 3)
    p = deim_select(b.u1)
    pair = projection_pair(b, p, b.u1 @ np.array([1.0, 2, 3]))
    assert pair.err_orth_sq == pytest.approx(0, abs=1e-20)
    assert pair.gap_sq == pytest.approx(0, abs=1e-16)
    assert pair.err_masked_sq == pytest.approx(0, abs=1e-16)

    # perfectly conditioned mask: U1 = first columns of I, f orthogonal to them
    e = basis_from_orthonormal(np.eye(6), 2)
    f = np.array([0, 0, 1.0, -2, 0, 3])
    pair = projection_pair(e, SelectionOperator([0, 1], 6), f)
    assert pair.gap_sq == 0
    assert pair.err_orth_sq == pair.err_masked_sq == pytest.approx(14.0)

    f = np.random.default_rng(8).standard_normal(8)
    pair = projection_pair(b, p, f)
    direct = np.sum((f - masked_project(b, p, f)) ** 2)
    assert pair.err_masked_sq == pytest.approx(direct, rel=1e-12)


def test_cs_factors_examples():
    e = basis_from_orthonormal(np.eye(6), 2)
    cs = cs_factors(e, SelectionOperator([0, 1], 6))
    np.testing.assert_allclose(cs.sigma, [1, 1])
    np.testing.assert_allclose(cs.s, [0, 0])
    assert np.all(cs.coupling == 0)

    b = _basis(9, 6, 2)
    p = deim_select(b.u1)
    cs = cs_factors(b, p)
    q11 = b.u1[list(p.indices)]
    assert np.linalg.norm(q11 - cs.z1 @ np.diag(cs.sigma) @ cs.v1.T) <= 1e-10
    np.testing.assert_allclose(cs.sigma, np.linalg.svd(q11, compute_uv=False), atol=1e-14)
    np.testing.assert_allclose(cs.sigma**2 + cs.s**2, 1, atol=1e-12)
    np.testing.assert_allclose(np.linalg.norm(cs.coupling, axis=1), cs.s, atol=1e-8)
    assert cs.block_shape_ok


def test_cs_factors_flags_wide_mask():
    b = _basis(10, 5, 3)
    with pytest.warns(RuntimeWarning, match="n=5 < 2m=6"):
        cs = cs_factors(b, deim_select(b.u1))
    assert not cs.block_shape_ok
    f = np.random.default_rng(11).standard_normal(5)
    assert gap_identity_rhs(cs, b, f) == pytest.approx(projection_pair(b, deim_select(b.u1), f).gap_sq, rel=1e-8)


def test_gap_identity_examples():
    b = _basis(12, 8, 3)
    p = deim_select(b.u1)
    cs = cs_factors(b, p)
    assert gap_identity_rhs(cs, b, b.u1 @ np.ones(3)) == pytest.approx(0, abs=1e-20)
    e = basis_from_orthonormal(np.eye(8), 3)
    cs_e = cs_factors(e, SelectionOperator([0, 1, 2], 8))
    assert gap_identity_rhs(cs_e, e, np.arange(8.0)) == 0
    f = np.random.default_rng(13).standard_normal(8)
    assert gap_identity_rhs(cs, b, f) == pytest.approx(projection_pair(b, p, f).gap_sq, rel=1e-8)


def test_gap_identity_sum_form():
    # sum_i (1 - sigma_i^2)/sigma_i^2 y_i^2 with y the coordinates along the coupled V2 columns
    b = _basis(14, 9, 3)
    p = deim_select(b.u1)
    cs = cs_factors(b, p)
    f = np.random.default_rng(15).standard_normal(9)
    v = cs.coupling / cs.s[:, None]
    y = v @ (b.u2.T @ f)
    expected = np.sum((1 - cs.sigma**2) / cs.sigma**2 * y**2)
    assert gap_identity_rhs(cs, b, f) == pytest.approx(expected, rel=1e-10)


instances = dict(
    n=st.integers(6, 40),
    data=st.data(),
    seed=st.integers(0, 2**32 - 1),
    deim=st.booleans(),
)


@settings(max_examples=150, deadline=None)
@given(**instances)
def test_projection_identities(n, data, seed, deim):
    m = data.draw(st.integers(1, n // 2))
    rng = np.random.default_rng(seed)
    b = basis_from_orthonormal(random_orthonormal(rng, n), m)
    p = deim_select(b.u1) if deim else random_mask(rng, b)
    f = rng.standard_normal(n) * rng.uniform(0.1, 10)
    pair = projection_pair(b, p, f)
    scale = max(1.0, pair.err_masked_sq)
    assert abs(pair.err_masked_sq - pair.err_orth_sq - pair.gap_sq) <= 1e-8 * scale
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        cs = cs_factors(b, p)
    assert abs(gap_identity_rhs(cs, b, f) - pair.gap_sq) <= 1e-8 * max(1.0, pair.gap_sq)
    fnorm = np.linalg.norm(f)
    idx = list(p.indices)
    assert np.linalg.norm(pair.f_tilde[idx] - f[idx]) <= 1e-8 * fnorm
    twice = masked_project(b, p, pair.f_tilde)
    assert np.linalg.norm(twice - pair.f_tilde) <= 1e-8 * fnorm
    in_range = b.u1 @ rng.standard_normal(m)
    assert np.linalg.norm(masked_project(b, p, in_range) - in_range) <= 1e-8 * np.linalg.norm(in_range)
