"""Benchmark functions, uniform grids and snapshot matrices.

Two parametric test functions are provided:

* ``example1_eval(x, y, mu) = y / sqrt((x + y - mu)^2 + (2x - 3mu)^2 + 0.01^2)``
  on ``[0, 2]^2 x [0, 2]``,
* ``example2_eval(x, mu) = (1 - x) cos(3 pi mu (x + 1)) exp(-(x + 1) mu)``
  on ``[-1, 1] x D``.

Both evaluators are elementwise numpy expressions, so snapshot matrices
built from whole grids agree bit-for-bit with pointwise re-evaluation.

Snapshot matrices store one sample per column. For the two-dimensional
example the ``nx x ny`` field is vectorized with the x-index fastest
(column-major / Fortran order), so entry ``i + nx * j`` holds
``f(x_i, y_j, mu)``.
"""

import csv
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, MprojError
from .numerics import as_dense

EX1_SPACE = (0.0, 2.0)
EX1_PARAMS = (0.0, 2.0)
EX2_SPACE = (-1.0, 1.0)
# Parameter interval that reproduces the published Example-2 tables; see README.
EX2_PARAMS = (0.0, np.pi)

LAYOUT_X_FASTEST = "x-fastest"
LAYOUT_1D = "1d"
LAYOUT_EXTERNAL = "external"

_EPS2 = 0.01 * 0.01


@dataclass(frozen=True)
class Grid1D:
    lo: float
    hi: float
    count: int
    points: np.ndarray = field(repr=False)

    @property
    def spacing(self):
        return (self.hi - self.lo) / (self.count - 1)


def grid_1d(lo, hi, count):
    """Inclusive equally spaced grid with ``count`` points on ``[lo, hi]``."""
    if int(count) != count or count < 2:
        raise MprojError(f"grid needs an integer count >= 2, got {count!r}")
    if not lo < hi:
        raise MprojError(f"grid needs lo < hi, got lo={lo!r}, hi={hi!r}")
    count = int(count)
    points = np.linspace(lo, hi, count)
    # linspace already hits both endpoints; pin them in case of rounding
    points[0], points[-1] = lo, hi
    points.setflags(write=False)
    return Grid1D(lo=float(lo), hi=float(hi), count=count, points=points)


def example1_eval(x, y, mu):
    a = x + y - mu
    b = 2.0 * x - 3.0 * mu
    return y / np.sqrt(a * a + b * b + _EPS2)


def example2_eval(x, mu):
    return (1.0 - x) * np.cos(3.0 * np.pi * mu * (x + 1.0)) * np.exp(-(x + 1.0) * mu)


@dataclass(frozen=True)
class SnapshotMatrix:
    """Samples of a vector-valued function, one column per parameter value.

    ``shape`` records the spatial grid sizes, ``(nx, ny)`` for Example 1 and
    ``(nx,)`` for Example 2; it is ``(n,)`` for externally supplied data.
    """

    data: np.ndarray = field(repr=False)
    params: np.ndarray = field(repr=False)
    layout: str
    shape: tuple

    def __post_init__(self):
        data = as_dense(self.data, "snapshot data")
        params = np.asarray(self.params, dtype=np.float64)
        if params.ndim != 1 or params.size != data.shape[1]:
            raise DimensionError(
                f"{data.shape[1]} snapshot columns but {params.size} parameter values"
            )
        if int(np.prod(self.shape)) != data.shape[0]:
            raise DimensionError(f"grid shape {self.shape} does not match n = {data.shape[0]}")
        data.setflags(write=False)
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "params", params)

    @property
    def n(self):
        return self.data.shape[0]

    @property
    def n_samples(self):
        return self.data.shape[1]

    def field_at(self, j):
        """Column ``j`` folded back onto the spatial grid."""
        return self.data[:, j].reshape(self.shape, order="F")


def _as_grid(mu_grid):
    if isinstance(mu_grid, Grid1D):
        return mu_grid.points
    return np.atleast_1d(np.asarray(mu_grid, dtype=np.float64))


def build_snapshots_ex1(nx, ny, mu_grid):
    """Example-1 snapshots on an ``nx x ny`` uniform grid of ``[0, 2]^2``."""
    xs = grid_1d(*EX1_SPACE, nx).points
    ys = grid_1d(*EX1_SPACE, ny).points
    mus = _as_grid(mu_grid)
    xx, yy = np.meshgrid(xs, ys, indexing="ij")
    # (nx, ny, N) tensor, unfolded with x fastest
    tensor = example1_eval(xx[..., None], yy[..., None], mus)
    data = tensor.reshape(nx * ny, mus.size, order="F")
    return SnapshotMatrix(data=data, params=mus, layout=LAYOUT_X_FASTEST, shape=(nx, ny))


def build_snapshots_ex2(nx, mu_grid):
    """Example-2 snapshots on ``nx`` uniform points of ``[-1, 1]``."""
    xs = grid_1d(*EX2_SPACE, nx).points
    mus = _as_grid(mu_grid)
    data = example2_eval(xs[:, None], mus[None, :])
    return SnapshotMatrix(data=data, params=mus, layout=LAYOUT_1D, shape=(nx,))


def from_array(data, params=None):
    """Wrap an arbitrary ``n x N`` array as a snapshot matrix."""
    data = as_dense(data, "snapshot data")
    if params is None:
        params = np.arange(data.shape[1], dtype=np.float64)
    return SnapshotMatrix(data=data, params=params, layout=LAYOUT_EXTERNAL, shape=(data.shape[0],))


# CSV layout: first row "n,N,layout", then n rows of N comma-separated values.

def write_matrix_csv(path, data, layout):
    data = np.asarray(data, dtype=np.float64)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([data.shape[0], data.shape[1], layout])
        for row in data:
            writer.writerow([repr(float(v)) for v in row])


def read_matrix_csv(path):
    """Return ``(data, layout)`` from a file written by :func:`write_matrix_csv`."""
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or len(rows[0]) != 3:
        raise MprojError(f"{path}: missing 'n,N,layout' header row")
    n, n_cols, layout = int(rows[0][0]), int(rows[0][1]), rows[0][2]
    body = [r for r in rows[1:] if r]
    data = np.array([[float(v) for v in r] for r in body], dtype=np.float64)
    if data.shape != (n, n_cols):
        raise DimensionError(f"{path}: header says {n}x{n_cols}, body is {data.shape}")
    return data, layout


def save_snapshots(path, snapshots):
    write_matrix_csv(path, snapshots.data, snapshots.layout)


def load_snapshots(path):
    data, _ = read_matrix_csv(path)
    return from_array(data)
