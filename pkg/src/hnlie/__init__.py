"""Exact classification of hypercomplex structures with Hermitian-Norden
metrics on four-dimensional real Lie algebras."""

from .catalog import CATALOG, CatalogCase, get_case, list_cases
from .classify import ClassificationReport, ClassLabel, classify
from .connection import (
    curvature,
    exterior_derivative_1form,
    lee_form,
    levi_civita,
    nabla_J,
    square_norm_nabla_J,
    structure_tensor,
)
from .exact import DegenerateError, Matrix4, Tensor3, Vector4, solve_linear
from .hnstruct import HNStructure, Metric, nijenhuis, standard_structure
from .liealg import LieAlgebra, bracket, center, derived_algebra, validate

__all__ = [
    "CATALOG",
    "CatalogCase",
    "ClassLabel",
    "ClassificationReport",
    "DegenerateError",
    "HNStructure",
    "LieAlgebra",
    "Matrix4",
    "Metric",
    "Tensor3",
    "Vector4",
    "bracket",
    "center",
    "classify",
    "curvature",
    "derived_algebra",
    "exterior_derivative_1form",
    "get_case",
    "lee_form",
    "levi_civita",
    "list_cases",
    "nabla_J",
    "nijenhuis",
    "solve_linear",
    "square_norm_nabla_J",
    "standard_structure",
    "structure_tensor",
    "validate",
]
