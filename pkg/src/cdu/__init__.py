"""Toolkit for c-differential uniformity of functions over binary fields."""

__version__ = "0.1.0"

from .cdiff import (CDiffQuery, CUniformityReport, c_derivative, c_uniformity,
                    cddt_entry, classify_theorem_case, scan_c, write_cddt_csv)
from .families import (FAMILIES, FamilyParams, FunctionTable, build_family,
                       check_h_permutation_condition, is_permutation,
                       params_from_text)
from .field import FieldElement, FieldSpec, make_field
from .linsolve import AffineLinearizedEq, count_roots, solve_affine
from .verify import VerificationSuiteResult, run_suite

__all__ = [
    "AffineLinearizedEq",
    "CDiffQuery",
    "CUniformityReport",
    "FAMILIES",
    "FamilyParams",
    "FieldElement",
    "FieldSpec",
    "FunctionTable",
    "VerificationSuiteResult",
    "build_family",
    "c_derivative",
    "c_uniformity",
    "cddt_entry",
    "check_h_permutation_condition",
    "classify_theorem_case",
    "count_roots",
    "is_permutation",
    "make_field",
    "params_from_text",
    "run_suite",
    "scan_c",
    "solve_affine",
    "write_cddt_csv",
    "__version__",
]
