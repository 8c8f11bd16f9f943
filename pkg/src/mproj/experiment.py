"""Experiment runner: snapshot generation, POD, DEIM and bound evaluation per m."""

import csv
import json
import math
from dataclasses import dataclass, field

from .bounds import BoundReport, evaluate_all
from .errors import MprojError
from .pod import pod_basis, pod_factors
from .selection import deim_select
from .snapshot import (
    EX1_PARAMS,
    EX2_PARAMS,
    build_snapshots_ex1,
    build_snapshots_ex2,
    grid_1d,
    load_snapshots,
)

CSV_HEADER = ["m", "avg_err", "b_thm1", "b_thm2", "b_qdeim", "sigma_min", "n", "N", "runtime_ms"]


@dataclass
class ExperimentConfig:
    example: str  # "1", "2" or "external"
    nx: int = 0
    ny: int | None = None
    n_train: int = 0
    n_test: int = 0
    m_list: list = field(default_factory=list)
    output: str | None = None
    format: str = "csv"
    seed: int = 0
    train_file: str | None = None
    test_file: str | None = None
    timing: bool = True

    @property
    def n(self):
        if self.example == "1":
            return self.nx * (self.ny if self.ny is not None else self.nx)
        if self.example == "2":
            return self.nx
        return None  # known only once the files are read

    def validate(self, n=None):
        """Cheap checks, run before any snapshot is generated.

        ``m > n_train`` is left to the run, which reports it as a failed row.
        """
        if self.example not in ("1", "2", "external"):
            raise MprojError(f"unknown example {self.example!r}")
        if self.format not in ("csv", "json"):
            raise MprojError(f"unknown format {self.format!r}")
        if not self.m_list:
            raise MprojError("m_list is empty")
        if self.example == "external":
            if not (self.train_file and self.test_file):
                raise MprojError("external example needs train_file and test_file")
        else:
            if self.nx < 2 or (self.ny is not None and self.ny < 2):
                raise MprojError("spatial grids need at least 2 points per axis")
            if self.n_train < 2 or self.n_test < 2:
                raise MprojError("train and test parameter grids need at least 2 points")
        n = n if n is not None else self.n
        for m in self.m_list:
            if m < 1 or (n is not None and m >= n):
                raise MprojError(f"interpolation count m={m} must satisfy 1 <= m < n={n}")


# Benchmark presets, keyed by table number.
TABLE_PRESETS = {
    1: ExperimentConfig(example="1", nx=30, ny=30, n_train=225, n_test=400, m_list=[4, 6, 8, 10, 12]),
    2: ExperimentConfig(example="1", nx=40, ny=40, n_train=225, n_test=400, m_list=[4, 6, 8, 10, 12, 14]),
    3: ExperimentConfig(example="2", nx=100, n_train=50, n_test=101, m_list=[4, 6, 8, 10, 14]),
    4: ExperimentConfig(example="2", nx=200, n_train=50, n_test=101, m_list=[4, 6, 10, 14, 16]),
}


def table_config(number, **overrides):
    base = TABLE_PRESETS[int(number)]
    params = dict(base.__dict__, m_list=list(base.m_list))
    params.update(overrides)
    return ExperimentConfig(**params)


def build_datasets(cfg):
    """Return ``(train, test)`` snapshot matrices for a config."""
    if cfg.example == "1":
        ny = cfg.ny if cfg.ny is not None else cfg.nx
        train = build_snapshots_ex1(cfg.nx, ny, grid_1d(*EX1_PARAMS, cfg.n_train))
        test = build_snapshots_ex1(cfg.nx, ny, grid_1d(*EX1_PARAMS, cfg.n_test))
    elif cfg.example == "2":
        train = build_snapshots_ex2(cfg.nx, grid_1d(*EX2_PARAMS, cfg.n_train))
        test = build_snapshots_ex2(cfg.nx, grid_1d(*EX2_PARAMS, cfg.n_test))
    else:
        train = load_snapshots(cfg.train_file)
        test = load_snapshots(cfg.test_file)
        if train.n != test.n:
            raise MprojError(f"train n={train.n} and test n={test.n} differ")
    return train, test


def run_experiment(cfg):
    """One :class:`BoundReport` per ``m`` in ``cfg.m_list``, in order.

    A rank-deficient or singular configuration at some ``m`` yields a
    failed row and the remaining ``m`` values still run.
    """
    cfg.validate()
    train, test = build_datasets(cfg)
    if cfg.example == "external":
        cfg.validate(n=train.n)
    factors = pod_factors(train)
    reports = []
    for m in cfg.m_list:
        try:
            basis = pod_basis(train, m, factors=factors)
            mask = deim_select(basis.u1)
            report, _, _ = evaluate_all(basis, mask, test)
        except MprojError as exc:
            report = BoundReport.failed(m, train.n, test.n_samples, str(exc))
        if not cfg.timing:
            report.runtime_ms = 0.0
        reports.append(report)
    return reports


def _row(report):
    return [
        report.m,
        report.avg_err,
        report.b_thm1,
        report.b_thm2,
        report.b_qdeim,
        report.sigma_min,
        report.n,
        report.n_samples,
        report.runtime_ms,
    ]


def _fmt(v):
    # repr() gives the shortest round-tripping form (>= 6 significant digits in practice)
    return repr(float(v)) if isinstance(v, float) else str(v)


def emit_table(reports, format, path):
    """Write reports as CSV (fixed header) or JSON (list of field dicts)."""
    if not reports:
        raise MprojError("no reports to write")
    if format == "csv":
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_HEADER)
            for r in reports:
                writer.writerow([_fmt(v) for v in _row(r)])
    elif format == "json":
        payload = []
        for r in reports:
            d = r.to_dict()
            # JSON has no NaN; failed rows carry null
            payload.append({k: (None if isinstance(v, float) and math.isnan(v) else v) for k, v in d.items()})
        with open(path, "w") as fh:
            json.dump(payload, fh, indent=2)
    else:
        raise MprojError(f"unknown format {format!r}")
    return path


def read_table(path, format):
    """Parse a file written by :func:`emit_table` back into reports."""
    if format == "json":
        with open(path) as fh:
            rows = json.load(fh)
        nan = float("nan")
        return [BoundReport(**{k: (nan if v is None and k != "failure" else v) for k, v in r.items()}) for r in rows]
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    return [
        BoundReport(
            m=int(r["m"]),
            avg_err=float(r["avg_err"]),
            b_thm1=float(r["b_thm1"]),
            b_thm2=float(r["b_thm2"]),
            b_qdeim=float(r["b_qdeim"]),
            sigma_min=float(r["sigma_min"]),
            n=int(r["n"]),
            n_samples=int(r["N"]),
            runtime_ms=float(r["runtime_ms"]),
        )
        for r in rows
    ]
