"""Exact arithmetic on the Holm curve k(y^3 - y) = l(x^3 - x) and its short
Weierstrass model, with mechanical certification that the group of rational
points is torsion-free."""

from .curves import (
    EPoint,
    H_IDENTITY,
    HPoint,
    HolmParams,
    INFINITY,
    WeierstrassCurve,
    curve_from_params,
    default_x_bound,
    find_integral_points,
    holm_curve,
    on_E,
    on_H,
)
from .division_polys import (
    CurvePoly,
    DivPolyCache,
    check_divisibility,
    mul_via_divpolys,
    scaled_integrality,
    x_triple_closed_form,
)
from .errors import (
    CapacityError,
    ConsistencyError,
    ContradictionError,
    HolmCurveError,
    TorsionDenominatorError,
    ValidationError,
)
from .exact_arith import (
    INFINITE,
    Rational,
    Valuation,
    format_rational,
    is_perfect_square,
    is_prime,
    is_squarefree,
    parse_rational,
    prime_factorize,
    vp,
)
from .group_law import (
    e_add,
    e_double_closed_form,
    e_negate,
    e_scalar_mul,
    h_add,
    h_negate,
    h_scalar_mul,
    order_upto,
)
from .isomorphism import gamma, gamma_inv
from .torsion import (
    CONFIRMED,
    COUNTEREXAMPLE_FOUND,
    CandidateEvidence,
    LemmaReport,
    TORSION_FREE_CONFIRMED,
    TorsionCertificate,
    VIOLATED,
    certify_torsion_free,
    dispatch_lemma,
    lemma1_check,
    lemma2_check,
    lemma3_check,
    nagell_lutz_candidates,
)

__version__ = "0.1.0"

__all__ = [
    "CONFIRMED",
    "COUNTEREXAMPLE_FOUND",
    "CandidateEvidence",
    "CapacityError",
    "ConsistencyError",
    "ContradictionError",
    "CurvePoly",
    "DivPolyCache",
    "EPoint",
    "H_IDENTITY",
    "HPoint",
    "HolmCurveError",
    "HolmParams",
    "INFINITE",
    "INFINITY",
    "LemmaReport",
    "Rational",
    "TORSION_FREE_CONFIRMED",
    "TorsionCertificate",
    "TorsionDenominatorError",
    "VIOLATED",
    "ValidationError",
    "Valuation",
    "WeierstrassCurve",
    "certify_torsion_free",
    "check_divisibility",
    "curve_from_params",
    "default_x_bound",
    "dispatch_lemma",
    "e_add",
    "e_double_closed_form",
    "e_negate",
    "e_scalar_mul",
    "find_integral_points",
    "format_rational",
    "gamma",
    "gamma_inv",
    "h_add",
    "h_negate",
    "h_scalar_mul",
    "holm_curve",
    "is_perfect_square",
    "is_prime",
    "is_squarefree",
    "lemma1_check",
    "lemma2_check",
    "lemma3_check",
    "mul_via_divpolys",
    "nagell_lutz_candidates",
    "on_E",
    "on_H",
    "order_upto",
    "parse_rational",
    "prime_factorize",
    "scaled_integrality",
    "vp",
    "x_triple_closed_form",
]
