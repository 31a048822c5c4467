"""Cohomological tameness, d-tameness, Saito's criterion and semistable reduction.

All criteria take a validated sncd ``FiberConfiguration`` of a curve.  The
numerical criterion (comparing sum N_i chi(E_i^o) with sum N'_i chi(E_i^o))
needs no further hypotheses; the structural results are guarded by explicit
errors when the configuration is not relatively minimal or the curve is a
genus-one curve without rational point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from .cyclotomic import degree, root_orders
from .errors import (
    InvalidParameter,
    HypothesisViolated,
    InternalInconsistency,
    JacobianTypeRequired,
    NotRelativelyMinimal,
    NotTame,
)
from .fiber import (
    SNCD,
    FiberConfiguration,
    chi_open,
    prime_to_p_part,
    require_valid,
)
from .kodaira import KodairaType
from .points import has_rational_point, has_tame_point
from .surgery import is_relatively_minimal
from .zeta import char_poly_h1_factored, q_poly_factored

GENUS_ZERO = "genus_zero_total_fiber"
GENUS_ONE_NO_POINT = "genus_one_without_rational_point"


@dataclass(frozen=True)
class TamenessReport:
    tame_numeric: bool
    sum_N_chi: int
    sum_Nprime_chi: int
    p_tame: bool
    d_tame_witnesses: dict[int, bool] = field(default_factory=dict)
    applicability_notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class SaitoReport:
    tame: bool
    p_tame: bool
    pseudo_wild: bool
    jacobian_type_used: KodairaType | None
    consistent: bool


@dataclass(frozen=True)
class RootOrderCheck:
    q_root_order_free: bool
    d_tame: bool
    # None when every component has multiplicity divisible by d
    equivalent: bool | None
    genus_one_escape: bool


@dataclass(frozen=True)
class UnipotenceCheck:
    h1_unipotent: bool
    tame: bool


@dataclass(frozen=True)
class DegreeReport:
    degree: int
    principal_lcm: int
    nonzero_chi_lcm: int
    negative_chi_lcm: int
    not_d_tame_lcm: int


def _applicability(config: FiberConfiguration, genus: int) -> tuple[str, ...]:
    notes = []
    if genus == 0:
        notes.append(GENUS_ZERO)
    if genus == 1 and not has_rational_point(config):
        notes.append(GENUS_ONE_NO_POINT)
    return tuple(notes)


def _sums(config: FiberConfiguration) -> tuple[int, int]:
    p = config.residue_char
    full = tame = 0
    for c in config.components:
        chi = chi_open(config, c.id)
        full += c.multiplicity * chi
        tame += prime_to_p_part(c.multiplicity, p) * chi
    return full, tame


def is_cohomologically_tame(config: FiberConfiguration, ds=()) -> TamenessReport:
    report = require_valid(config, sncd=True)
    full, tame = _sums(config)
    numeric = full == tame
    # the polynomial form of the criterion must agree with the numeric one
    by_poly = char_poly_h1_factored(config) == q_poly_factored(config)
    by_degree = degree(char_poly_h1_factored(config)) == degree(q_poly_factored(config))
    if not (numeric == by_poly == by_degree):
        raise InternalInconsistency(
            f"tameness criteria disagree: numeric={numeric} polynomial={by_poly} degree={by_degree}"
        )
    p = config.residue_char
    return TamenessReport(
        tame_numeric=numeric,
        sum_N_chi=full,
        sum_Nprime_chi=tame,
        p_tame=True if p == 0 else is_d_tame(config, p),
        d_tame_witnesses={d: is_d_tame(config, d) for d in ds},
        applicability_notes=_applicability(config, report.derived_genus),
    )


def _index_set(config: FiberConfiguration, d: int) -> list[str]:
    """I_d: components whose multiplicity is divisible by d (I_0 is empty)."""
    if d == 0:
        return []
    return [c.id for c in config.components if c.multiplicity % d == 0]


def is_d_tame(config: FiberConfiguration, d: int) -> bool:
    if d < 0:
        raise InvalidParameter(f"d must be >= 0, got {d}")
    if d == 0:
        return True
    i_d = _index_set(config, d)
    if len(i_d) == len(config.components):
        return False
    return all(chi_open(config, cid) == 0 for cid in i_d)


def d_tame_structural(config: FiberConfiguration, d: int) -> bool:
    """The geometric characterization: every component in I_d is a smooth
    rational curve meeting the rest of the fiber in exactly two points, and
    none of its neighbors has multiplicity divisible by d."""
    if d <= 1:
        raise InvalidParameter(f"structural criterion needs d > 1, got {d}")
    for cid in _index_set(config, d):
        c = config.component(cid)
        if c.genus != 0 or config.loops(cid):
            return False
        if config.boundary_points(cid) != 2:
            return False
        if any(config.component(o).multiplicity % d == 0 for o in config.neighbors(cid)):
            return False
    return True


def _require_minimal(config: FiberConfiguration) -> None:
    m = is_relatively_minimal(config, SNCD)
    if not m.minimal:
        raise NotRelativelyMinimal(f"contractible (-1)-curves: {', '.join(m.witnesses)}")


def root_order_check(config: FiberConfiguration, d: int) -> RootOrderCheck:
    if d <= 1:
        raise InvalidParameter(f"d must be > 1, got {d}")
    report = require_valid(config, sncd=True)
    _require_minimal(config)
    orders = root_orders(q_poly_factored(config))
    free = not any(o % d == 0 for o in orders)
    dt = is_d_tame(config, d)
    all_divisible = len(_index_set(config, d)) == len(config.components)
    if all_divisible:
        if free and report.derived_genus != 1:
            raise InternalInconsistency(f"I = I_{d} with order-free Q_C forces genus 1, got {report.derived_genus}")
        return RootOrderCheck(free, dt, None, free)
    return RootOrderCheck(free, dt, free == dt, False)


_PSEUDO_WILD_JACOBIANS = {
    2: lambda t: t.kind in ("I", "IV", "IVstar"),
    3: lambda t: t.kind in ("I", "Istar", "III", "IIIstar"),
}


def is_pseudo_wild(config: FiberConfiguration, jacobian_type: KodairaType | None = None) -> bool:
    report = require_valid(config, sncd=True)
    p = config.residue_char
    if report.derived_genus != 1 or has_tame_point(config):
        return False
    if p > 3:
        return True
    if jacobian_type is None:
        raise JacobianTypeRequired(
            f"genus one without tame points at p={p}: supply the reduction type of the Jacobian"
        )
    return _PSEUDO_WILD_JACOBIANS[p](jacobian_type)


def saito_criterion(config: FiberConfiguration, jacobian_type: KodairaType | None = None) -> SaitoReport:
    _require_minimal(config)
    tame = is_cohomologically_tame(config).tame_numeric
    p = config.residue_char
    p_tame = True if p == 0 else is_d_tame(config, p)
    pw = is_pseudo_wild(config, jacobian_type)
    if p_tame and pw:
        raise InternalInconsistency("p-tame and pseudo-wild cannot both hold")
    return SaitoReport(
        tame=tame,
        p_tame=p_tame,
        pseudo_wild=pw,
        jacobian_type_used=jacobian_type,
        consistent=tame == (p_tame or pw),
    )


def is_principal(config: FiberConfiguration, cid: str) -> bool:
    c = config.component(cid)
    return c.genus > 0 or config.boundary_points(cid) >= 3


def _lcm(values) -> int:
    return lcm(1, *values)


def semistable_reduction_report(config: FiberConfiguration) -> DegreeReport:
    report = require_valid(config, sncd=True)
    _require_minimal(config)
    if not is_cohomologically_tame(config).tame_numeric:
        raise NotTame("the curve is not cohomologically tame; the degree formula does not apply")
    if report.derived_genus == 1 and not has_rational_point(config):
        raise HypothesisViolated("genus one without a rational point")

    comps = config.components
    n_all = len(comps)
    chi = {c.id: chi_open(config, c.id) for c in comps}
    principal = _lcm(c.multiplicity for c in comps if is_principal(config, c.id))
    nonzero = _lcm(
        c.multiplicity
        for c in comps
        if chi[c.id] != 0 or len(_index_set(config, c.multiplicity)) == n_all
    )
    negative = _lcm(c.multiplicity for c in comps if chi[c.id] < 0)
    bound = max(c.multiplicity for c in comps)
    not_tame = _lcm(d for d in range(2, bound + 1) if not is_d_tame(config, d))
    values = {principal, nonzero, negative, not_tame}
    if len(values) != 1:
        raise InternalInconsistency(
            f"degree formulas disagree: principal={principal} nonzero_chi={nonzero} "
            f"negative_chi={negative} not_d_tame={not_tame}"
        )
    return DegreeReport(principal, principal, nonzero, negative, not_tame)


def semistable_reduction_degree(config: FiberConfiguration) -> int:
    return semistable_reduction_report(config).degree


def is_semistable(config: FiberConfiguration) -> bool:
    return all(c.multiplicity == 1 for c in config.components)


def unipotence_check(config: FiberConfiguration) -> UnipotenceCheck:
    tame = is_cohomologically_tame(config).tame_numeric
    orders = root_orders(char_poly_h1_factored(config))
    return UnipotenceCheck(h1_unipotent=orders <= {1} and tame, tame=tame)
