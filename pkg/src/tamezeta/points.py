"""Degrees of tame extensions over which the curve acquires a rational point.

For d prime to p, the curve has a point over the degree-d tame extension
iff d = a N_i for some component i (a >= 1), or d = a N_i + b N_j for two
components meeting each other (a, b >= 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InvalidParameter
from .fiber import FiberConfiguration, require_valid


@dataclass(frozen=True)
class DegreeSet:
    bound: int
    members: tuple[int, ...]

    def __contains__(self, d: int) -> bool:
        return d in self.members


def _in_positive_span(d: int, a: int, b: int) -> bool:
    """Whether d = alpha*a + beta*b with alpha, beta >= 1."""
    m = d - a - b
    if m < 0:
        return False
    g = gcd(a, b)
    if m % g:
        return False
    m, a, b = m // g, a // g, b // g
    # smallest beta >= 0 with beta*b = m (mod a); then alpha = (m - beta*b)/a must be >= 0
    beta = (m * pow(b, -1, a)) % a if a > 1 else 0
    return beta * b <= m


def point_degrees(config: FiberConfiguration, bound: int) -> DegreeSet:
    if bound < 1:
        raise InvalidParameter(f"bound must be positive, got {bound}")
    require_valid(config, sncd=True)
    mults = [c.multiplicity for c in config.components]
    meeting = {
        (config.component(q.a).multiplicity, config.component(q.b).multiplicity)
        for q in config.pairings
    }
    p = config.residue_char
    members = []
    for d in range(1, bound + 1):
        if p and d % p == 0:
            continue
        if any(d % n == 0 for n in mults) or any(_in_positive_span(d, a, b) for a, b in meeting):
            members.append(d)
    return DegreeSet(bound, tuple(members))


def has_rational_point(config: FiberConfiguration) -> bool:
    return any(c.multiplicity == 1 for c in config.components)


def has_tame_point(config: FiberConfiguration) -> bool:
    p = config.residue_char
    if p == 0:
        return True
    return any(c.multiplicity % p for c in config.components)
