"""Run the bound sweep on snapshot matrices supplied as CSV files.

Any n x N matrix works; here a damped travelling pulse is written to disk
and fed back through the same path the CLI uses for ``--example external``.
"""

import tempfile
from pathlib import Path

import numpy as np

from mproj import ExperimentConfig, run_experiment
from mproj.snapshot import from_array, save_snapshots


def wave(x, t):
    return np.exp(-0.5 * t) * np.exp(-((x[:, None] - 0.2 - 0.3 * t) ** 2) / 0.01)


x = np.linspace(0, 1, 150)
with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    save_snapshots(tmp / "train.csv", from_array(wave(x, np.linspace(0, 2, 40))))
    save_snapshots(tmp / "test.csv", from_array(wave(x, np.linspace(0.01, 1.99, 25))))
    cfg = ExperimentConfig(example="external", train_file=str(tmp / "train.csv"),
                           test_file=str(tmp / "test.csv"), m_list=[2, 4, 6, 8])
    for r in run_experiment(cfg):
        print(f"m={r.m:<3} avg_err={r.avg_err:.3e}  b_thm2={r.b_thm2:.3e}  b_qdeim={r.b_qdeim:.3e}")
