"""Tame monodromy invariants of curves computed from the dual graph of an sncd-model."""

from .cyclotomic import (
    CyclotomicProduct,
    IntegerPolynomial,
    binomial_factorization,
    cyclotomic_poly,
    expand,
    is_polynomial,
    root_orders,
)
from .document import emit, from_document, parse, to_document
from .errors import DocumentError, DomainError, InternalInconsistency, TameZetaError
from .fiber import (
    NCD,
    SNCD,
    Component,
    FiberConfiguration,
    Pairing,
    StratumData,
    as_strata,
    chi_open,
    derive_self_intersections,
    prime_to_p_part,
    total_genus,
    validate,
)
from .kodaira import KodairaType, fixture_library, kodaira_config
from .points import has_rational_point, has_tame_point, point_degrees
from .surgery import (
    ContractionClass,
    Interior,
    Intersection,
    Node,
    blow_up,
    contract,
    is_relatively_minimal,
    resolve_to_sncd,
)
from .tameness import (
    d_tame_structural,
    is_cohomologically_tame,
    is_d_tame,
    is_pseudo_wild,
    saito_criterion,
    semistable_reduction_degree,
    root_order_check,
)
from .trace import error_term, rational_volume, saito_question_check, trace_report
from .zeta import char_poly_h1, q_poly, trace_of_power, zeta_function, zeta_report

__version__ = "0.1.0"
