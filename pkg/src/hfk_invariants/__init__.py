"""Commutative metabelian Alexander invariants of homologically fibered knots.

Given an admissible presentation of a homology cylinder (typically the
complementary sutured manifold of a minimal genus Seifert surface), compute
the homological monodromy, the torsion and its determinant, the Magnus
matrix and the Alexander polynomial, and decide whether the fibering
obstructions fire.
"""

from .algebra import (
    FieldMatrix,
    LaurentPolynomial,
    RationalFunction,
    mat_det,
    mat_inverse,
    mat_solve,
    parse_laurent,
    parse_rational_function,
    poly_gcd,
    rf_make,
    specialize,
)
from .cylinders import FreeEndomorphism, compose, identity_cylinder, mapping_cylinder
from .errors import (
    AdmissibilityError,
    DimensionError,
    DivisionByZeroError,
    DomainError,
    GeneratorIndexError,
    InvariantError,
    NonIntegralHomologyError,
    NotHomologyCylinderError,
    PoleError,
    PresentationParseError,
    SingularMatrixError,
    TokenError,
)
from .fox import AdmissiblePresentation, GeneratorRef, Word, abelianize, fox_derivative, validate
from .homology import MonodromyMatrix, homological_monodromy, homology_classes
from .invariants import (
    AlexanderPolynomial,
    InvariantReport,
    Verdict,
    abelian_exterior_torsion,
    alexander_polynomial,
    compute_report,
    equal_up_to_unit,
    fiberedness_report,
    magnus_matrix,
    torsion_determinant,
    torsion_matrix,
)
from .io import load_presentation, parse_presentation, report_to_dict, serialize_presentation

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
