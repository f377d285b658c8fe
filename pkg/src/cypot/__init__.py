"""Exact computations for homogeneous noncommutative potentials."""

__version__ = "0.1.0"

from .ncpoly import GenSet, NcPoly, TensorPoly, cyclic_derivative, cyclic_sum, hessian, partial_derivative
from .grading import GradedQuotient, graded_quotient, hilbert_dims, target_series
from .criterion import cy3_report, overlap_space, relation_space
from .catalog import example
