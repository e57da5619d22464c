"""Exact computation in the free associative algebra over the rationals."""

from .bimodule import (
    BimoduleForm,
    GeneratorClass,
    GeneratorKind,
    UPoly2,
    basis_count,
    classify_generator,
    factor_monomial,
    from_bimodule_form,
    to_canonical_bimodule_form,
)
from .commutative import CommPoly, MLParams, jacobian, ml_coefficients, verify_ml_example
from .core import DEGLEX, MonomialOrder, NcPoly, commutator, compose, degree_split, weighted_degree
from .equation import (
    EquationSpec,
    FreeFamilyParams,
    OverlapFamilyParams,
    VerificationError,
    assemble_and_verify,
    completeness_check,
    phi,
    solve_free_part,
    solve_overlap_part,
)
from .parse import ParseError, parse_poly, parse_upoly, parse_word
from .series import (
    GradedSeries,
    GroupAlgElem,
    SeriesError,
    group_reduce,
    negative_exponent_scan,
    series_power_positive_part,
    series_sqrt,
    sylvester_solve,
)
from .verify import VerificationReport
from .words import (
    OverlapPair,
    homogeneous_nth_root,
    is_primitive,
    overlap_pairs,
    primitive_root,
    proper_composite_test,
)

__all__ = [
    "BimoduleForm", "CommPoly", "DEGLEX", "EquationSpec", "FreeFamilyParams", "GeneratorClass",
    "GeneratorKind", "GradedSeries", "GroupAlgElem", "MLParams", "MonomialOrder", "NcPoly",
    "OverlapFamilyParams", "OverlapPair", "ParseError", "SeriesError", "UPoly2", "VerificationError",
    "VerificationReport", "assemble_and_verify", "basis_count", "classify_generator", "commutator",
    "completeness_check", "compose", "degree_split", "factor_monomial", "from_bimodule_form",
    "group_reduce", "homogeneous_nth_root", "is_primitive", "jacobian", "ml_coefficients",
    "negative_exponent_scan", "overlap_pairs", "parse_poly", "parse_upoly", "parse_word", "phi",
    "primitive_root", "proper_composite_test", "series_power_positive_part", "series_sqrt",
    "solve_free_part", "solve_overlap_part", "sylvester_solve", "to_canonical_bimodule_form",
    "verify_ml_example", "weighted_degree",
]
