"""Walk through one masked projection of a 1-D parametric snapshot.

Builds a POD basis from Gaussian bumps, picks DEIM rows, and splits the
masked error into the orthogonal error plus the gap between the two
projections. The gap is then recomputed from the CS-decomposition factors.
"""

import numpy as np

from mproj import (
    build_snapshots_ex2,
    cs_factors,
    deim_select,
    gap_identity_rhs,
    grid_1d,
    pod_basis,
    projection_pair,
)
from mproj.snapshot import EX2_PARAMS

train = build_snapshots_ex2(100, grid_1d(*EX2_PARAMS, 50))
basis = pod_basis(train, 8)
mask = deim_select(basis.u1)
print("interpolation rows:", mask.indices)

f = build_snapshots_ex2(100, np.array([1.234])).data[:, 0]
pair = projection_pair(basis, mask, f)
print(f"masked error     {pair.err_masked_sq:.6e}")
print(f"orthogonal error {pair.err_orth_sq:.6e}")
print(f"gap              {pair.gap_sq:.6e}")
print(f"orth + gap       {pair.err_orth_sq + pair.gap_sq:.6e}")

cs = cs_factors(basis, mask)
print("sigma (cosines):", np.array2string(cs.sigma, precision=4))
print(f"gap from CS factors {gap_identity_rhs(cs, basis, f):.6e}")
