"""Masked (interpolatory) projections and error bounds built on the CS decomposition."""

from .bounds import (
    BoundReport,
    ErrorSummary,
    SpectralData,
    bound_qdeim_avg,
    bound_thm1_avg,
    bound_thm1_single,
    bound_thm2_avg,
    evaluate_all,
    gap_bound_thm2,
    orth_errors,
    sota_slack_alpha,
    spectral_data,
)
from .errors import (
    AsymmetryError,
    DimensionError,
    MprojError,
    NonFiniteError,
    RankDeficiencyError,
    SingularMaskError,
)
from .experiment import ExperimentConfig, emit_table, read_table, run_experiment, table_config
from .numerics import EigFactors, SvdFactors, svd_full, svd_values, sym_eig_desc
from .pod import PodBasis, pod_basis, pod_factors
from .projection import (
    CsFactors,
    ProjectionPair,
    cs_factors,
    gap_identity_rhs,
    masked_project,
    orthogonal_project,
    projection_pair,
)
from .selection import SelectionOperator, deim_select, mask_condition, select_rows
from .snapshot import (
    Grid1D,
    SnapshotMatrix,
    build_snapshots_ex1,
    build_snapshots_ex2,
    example1_eval,
    example2_eval,
    grid_1d,
)

__version__ = "0.1.0"
