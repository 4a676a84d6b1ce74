"""Exact generalized inverses and strongly-EP element verification in
matrix *-rings over involutive exact fields."""

from .starfield import (
    FieldDescriptor,
    FieldKind,
    GAUSSIAN,
    RATIONAL,
    Scalar,
    prime_field,
    quad_ext_field,
)
from .matrix import Matrix, RankFactorization, parse_inline, parse_matrix
from .geninv import (
    InverseBundle,
    derived_elements,
    group_inverse,
    mp_inverse,
    verify_group,
    verify_penrose,
)
from .classify import (
    Classification,
    are_left_equivalent_for,
    are_right_equivalent_for,
    classify,
    is_ep,
    is_left_idempotent_for,
    is_pi,
    is_projection,
    is_right_idempotent_for,
    is_sep,
)
from .theorems import (
    TheoremCase,
    TheoremEntry,
    Verdict,
    check_left_right_duality,
    check_projection_sandwich,
    evaluate,
    registry,
    registry_map,
)
from .harness import GeneratorSpec, Mode, VerificationReport, generate, sweep

__version__ = "0.1.0"
