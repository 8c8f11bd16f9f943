"""Samples for which the spectral gap bound holds with equality.

The test samples are aligned so that the top eigenvectors of their
complement-space Gram matrix hit the coupled directions with the smallest
cosines first. For such data the averaged gap equals the bound.
"""

import numpy as np

from mproj.bounds import evaluate_all, gap_bound_thm2
from mproj.instances import equality_instance, random_instance

rng = np.random.default_rng(3)
tight = equality_instance(rng, n=30, m=5)
loose = random_instance(rng, n=30, m=5, n_samples=5)

for name, inst in [("aligned", tight), ("generic", loose)]:
    report, summary, spec = evaluate_all(inst.basis, inst.mask, inst.samples)
    bound = gap_bound_thm2(spec, summary.n_samples)
    print(f"{name:8s} avg gap {summary.avg_gap:.6e}  bound {bound:.6e}  ratio {summary.avg_gap / bound:.6f}")
