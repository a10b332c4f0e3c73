"""Taylor-series interpolation and extrapolation from equidistant samples."""

from .errors import (
    DimensionMismatch,
    InvalidOrder,
    InvalidPointCount,
    InvalidRange,
    InvalidSampleSet,
    InvalidStep,
    NonFiniteInput,
    ParseError,
    SingularMatrix,
    TaylorInterpError,
    UnknownExperiment,
)
from .linalg import residual_norm, solve_dense
from .model import EvaluationKind, TaylorModel, classify, derivative_at, evaluate, evaluate_many, fit
from .stencil import DerivativeEstimates, SampleSet, build_taylor_matrix, estimate_derivatives, stencil_weights
from .verification import TestFunction, lagrange_eval

__version__ = "0.1.0"
