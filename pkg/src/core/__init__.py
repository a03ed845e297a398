# 核心数学模块
from .errors import (
    BoundExceeded,
    CheckpointError,
    ComputationError,
    DatasetError,
    DimensionMismatch,
    GitFanError,
    HypothesisViolated,
    NoFullDimStart,
    NoNeighbor,
    NonPositiveWeight,
    NoSolution,
    NotASymmetry,
    NotHomogeneous,
    NoUniqueFixedOrbit,
    OutsideSupport,
    ParseError,
    ValidationError,
)
from .matrix import (
    IntMatrix,
    as_integer_rows,
    echelon_form,
    identity,
    inverse,
    kernel_basis,
    mat_vec,
    matmul,
    project_onto_complement,
    rank,
    row_space_basis,
    rref,
    solve_right,
    transpose,
)
from .rational import (
    IntVector,
    QVector,
    Scalar,
    as_qvector,
    dot,
    format_scalar,
    primitive,
    to_fraction,
)

__all__ = [
    "BoundExceeded",
    "CheckpointError",
    "ComputationError",
    "DatasetError",
    "DimensionMismatch",
    "GitFanError",
    "HypothesisViolated",
    "NoFullDimStart",
    "NoNeighbor",
    "NonPositiveWeight",
    "NoSolution",
    "NotASymmetry",
    "NotHomogeneous",
    "NoUniqueFixedOrbit",
    "OutsideSupport",
    "ParseError",
    "ValidationError",
    "IntMatrix",
    "as_integer_rows",
    "echelon_form",
    "identity",
    "inverse",
    "kernel_basis",
    "mat_vec",
    "matmul",
    "project_onto_complement",
    "rank",
    "row_space_basis",
    "rref",
    "solve_right",
    "transpose",
    "IntVector",
    "QVector",
    "Scalar",
    "as_qvector",
    "dot",
    "format_scalar",
    "primitive",
    "to_fraction",
]
