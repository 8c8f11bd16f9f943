"""Reproduce the four benchmark tables and print them side by side.

Usage: python3 demos/reproduce_tables.py [table ...]
"""

import sys

from mproj import run_experiment, table_config

tables = [int(a) for a in sys.argv[1:]] or [1, 2, 3, 4]
for number in tables:
    cfg = table_config(number)
    print(f"\nTable {number}: example {cfg.example}, n={cfg.n}, "
          f"{cfg.n_train} training / {cfg.n_test} test parameters")
    print(f"{'m':>4} {'avg_err':>11} {'b_thm1':>11} {'b_thm2':>11} {'b_qdeim':>11} {'sigma_min':>10}")
    for r in run_experiment(cfg):
        print(f"{r.m:>4} {r.avg_err:>11.4g} {r.b_thm1:>11.4g} {r.b_thm2:>11.4g} "
              f"{r.b_qdeim:>11.4g} {r.sigma_min:>10.4f}")
