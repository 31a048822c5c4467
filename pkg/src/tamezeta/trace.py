"""Rational volume, trace-formula error term and the Saito-type vanishing check.

Works on ``StratumData`` in any dimension.  The alternating trace of the tame
generator is computed from the stratum formula; the rational volume (sum of
chi(E_i^o) over reduced components) and the error term (sum over components
whose multiplicity is a positive power of p) are computed directly, and the
report checks that the two sides agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import log

from .errors import InternalInconsistency
from .fiber import FiberConfiguration, StratumData, as_strata, require_valid
from .points import has_tame_point
from .tameness import is_cohomologically_tame
from .zeta import tame_euler_consistent, trace_of_power


@dataclass(frozen=True)
class TraceReport:
    lefschetz_trace: int
    rational_volume: int
    error_term: int
    holds: bool
    wild_index_set: tuple[int, ...]


@dataclass(frozen=True)
class SaitoQuestionCheck:
    applicable: bool
    vanishes: bool
    # True when applicable => vanishes is a theorem (curves); False for bare strata
    proven: bool


def is_positive_power(n: int, p: int) -> bool:
    """n = p^a for some a >= 1."""
    if p < 2 or n < p:
        return False
    a = round(log(n) / log(p))
    return any(e >= 1 and p**e == n for e in (a - 1, a, a + 1))


def wild_indices(s: StratumData) -> tuple[int, ...]:
    p = s.residue_char
    if p == 0:
        return ()
    return tuple(k for k, (n, _) in enumerate(s.strata) if is_positive_power(n, p))


def rational_volume(s: StratumData) -> int:
    return sum(chi for n, chi in s.strata if n == 1)


def error_term(s: StratumData) -> int:
    return sum(s.strata[k][1] for k in wild_indices(s))


def trace_report(s: StratumData) -> TraceReport:
    trace = trace_of_power(s, 1)
    volume = rational_volume(s)
    eps = error_term(s)
    if trace != volume + eps:
        raise InternalInconsistency(f"trace {trace} != rational volume {volume} + error term {eps}")
    return TraceReport(trace, volume, eps, eps == 0, wild_indices(s))


def saito_question_check(data: FiberConfiguration | StratumData) -> SaitoQuestionCheck:
    """Does the error term vanish on tame inputs with a tame point?

    For curve configurations tameness is decided exactly and the answer is
    a theorem, so a failure raises.  For bare strata only the necessary
    conditions are available (Euler characteristic equals the tame one, some
    stratum of multiplicity prime to p), and the result is just reported.
    """
    if isinstance(data, FiberConfiguration):
        require_valid(data, sncd=True)
        applicable = is_cohomologically_tame(data).tame_numeric and has_tame_point(data)
        vanishes = error_term(as_strata(data)) == 0
        if applicable and not vanishes:
            raise InternalInconsistency("tame curve with a tame point has a nonzero error term")
        return SaitoQuestionCheck(applicable, vanishes, proven=True)
    p = data.residue_char
    tame_point = p == 0 or any(n % p for n, _ in data.strata)
    applicable = bool(tame_euler_consistent(data)) and tame_point
    return SaitoQuestionCheck(applicable, error_term(data) == 0, proven=False)
