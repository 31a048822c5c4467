"""Blow-ups and contractions on dual graphs.

Bookkeeping follows intersection theory on a regular arithmetic surface:
blowing up a point of multiplicity one on each branch through it replaces
each branch's component by its strict transform (self-intersection drops by
the square of the branch count) and adds a (-1)-curve whose multiplicity is
the sum of the multiplicities of the branches.  Contraction is the inverse.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from .errors import InvalidParameter, InvalidSite, NotContractible
from .fiber import (
    NCD,
    SNCD,
    Component,
    FiberConfiguration,
    Pairing,
    require_valid,
)
from .kodaira import KodairaType, kodaira_config  # noqa: F401  (re-exported)


@dataclass(frozen=True)
class Interior:
    component: str


@dataclass(frozen=True)
class Intersection:
    a: str
    b: str


@dataclass(frozen=True)
class Node:
    component: str


BlowUpSite = Interior | Intersection | Node


class ContractionClass(str, enum.Enum):
    STAYS_SNCD = "StaysSncd"
    STAYS_NCD_ONLY = "StaysNcdOnly"
    NOT_NORMAL_CROSSINGS = "NotNormalCrossings"


@dataclass(frozen=True)
class ContractionOutcome:
    cls: ContractionClass
    config: FiberConfiguration
    # False for NotNormalCrossings: the configuration is a diagnostic only
    usable: bool


@dataclass(frozen=True)
class MinimalityReport:
    minimal: bool
    witnesses: tuple[str, ...]


def fresh_id(config: FiberConfiguration, prefix: str = "X") -> str:
    k = 1
    while f"{prefix}{k}" in config:
        k += 1
    return f"{prefix}{k}"


def _rebuild(config, components, pair_counts, mode=None) -> FiberConfiguration:
    pairs = tuple(Pairing(a, b, n) for (a, b), n in sorted(pair_counts.items()) if n > 0)
    return FiberConfiguration(
        tuple(components), pairs, residue_char=config.residue_char, mode=mode or config.mode
    )


def _pair_counts(config: FiberConfiguration) -> dict[tuple[str, str], int]:
    return {q.key: q.count for q in config.pairings}


def _key(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


def _shift_self_intersection(c: Component, delta: int) -> Component:
    if c.self_intersection is None:
        raise InvalidSite(f"{c.id}: self-intersection unknown; derive it before surgery")
    return replace(c, self_intersection=c.self_intersection + delta)


def blow_up(config: FiberConfiguration, site: BlowUpSite) -> FiberConfiguration:
    if not config.fully_specified:
        raise InvalidSite("derive self-intersections before blowing up")
    new = fresh_id(config)
    pairs = _pair_counts(config)
    comps = {c.id: c for c in config.components}

    if isinstance(site, Interior):
        i = site.component
        if i not in config:
            raise InvalidSite(f"unknown component {i!r}")
        comps[i] = _shift_self_intersection(comps[i], -1)
        exceptional = Component(new, config.component(i).multiplicity, 0, -1)
        pairs[_key(i, new)] = 1
    elif isinstance(site, Intersection):
        i, j = site.a, site.b
        if i == j or i not in config or j not in config or config.pair(i, j) < 1:
            raise InvalidSite(f"{i!r} and {j!r} do not meet in distinct components")
        pairs[_key(i, j)] -= 1
        comps[i] = _shift_self_intersection(comps[i], -1)
        comps[j] = _shift_self_intersection(comps[j], -1)
        mult = config.component(i).multiplicity + config.component(j).multiplicity
        exceptional = Component(new, mult, 0, -1)
        pairs[_key(i, new)] = 1
        pairs[_key(j, new)] = 1
    elif isinstance(site, Node):
        i = site.component
        if i not in config or config.loops(i) < 1:
            raise InvalidSite(f"{i!r} has no node")
        pairs[(i, i)] -= 1
        comps[i] = _shift_self_intersection(comps[i], -4)
        exceptional = Component(new, 2 * config.component(i).multiplicity, 0, -1)
        pairs[_key(i, new)] = 2
    else:
        raise InvalidSite(f"unknown site {site!r}")

    out = _rebuild(config, list(comps.values()) + [exceptional], pairs)
    require_valid(out)
    return out


def contract(config: FiberConfiguration, cid: str) -> ContractionOutcome:
    c = config.component(cid)
    if c.genus != 0 or c.self_intersection != -1 or config.loops(cid):
        raise NotContractible(
            f"{cid}: need a smooth rational curve with self-intersection -1 "
            f"(genus {c.genus}, self-intersection {c.self_intersection}, nodes {config.loops(cid)})"
        )
    branches = config.neighbors(cid)
    m = sum(branches.values())
    if m <= 1 or (m == 2 and len(branches) == 2):
        cls = ContractionClass.STAYS_SNCD
    elif m == 2:
        cls = ContractionClass.STAYS_NCD_ONLY
    else:
        cls = ContractionClass.NOT_NORMAL_CROSSINGS

    pairs = {k: n for k, n in _pair_counts(config).items() if cid not in k}
    comps = []
    for comp in config.components:
        if comp.id == cid:
            continue
        a = branches.get(comp.id, 0)
        comps.append(_shift_self_intersection(comp, a * a) if a else comp)
    nbrs = sorted(branches)
    for x, a in enumerate(nbrs):
        na = branches[a]
        # a neighbor met at na points acquires na(na-1)/2 new nodes
        if na > 1:
            pairs[(a, a)] = pairs.get((a, a), 0) + na * (na - 1) // 2
        for b in nbrs[x + 1:]:
            pairs[_key(a, b)] = pairs.get(_key(a, b), 0) + na * branches[b]

    has_loops = any(a == b and n > 0 for (a, b), n in pairs.items())
    mode = NCD if has_loops else config.mode
    out = _rebuild(config, comps, pairs, mode=mode)
    usable = cls is not ContractionClass.NOT_NORMAL_CROSSINGS
    if usable:
        require_valid(out)
    return ContractionOutcome(cls, out, usable)


def resolve_to_sncd(config: FiberConfiguration) -> FiberConfiguration:
    """Blow up every node until the fiber has strict normal crossings."""
    out = config
    while True:
        looped = [c.id for c in out.components if out.loops(c.id)]
        if not looped:
            break
        out = blow_up(out, Node(looped[0]))
    return replace(out, mode=SNCD)


def is_relatively_minimal(config: FiberConfiguration, cls: str = SNCD) -> MinimalityReport:
    allowed = {ContractionClass.STAYS_SNCD}
    if cls == NCD:
        allowed.add(ContractionClass.STAYS_NCD_ONLY)
    elif cls != SNCD:
        raise InvalidParameter(f"class must be sncd or ncd, got {cls!r}")
    witnesses = []
    for c in config.components:
        if c.genus == 0 and c.self_intersection == -1 and not config.loops(c.id):
            if contract(config, c.id).cls in allowed:
                witnesses.append(c.id)
    return MinimalityReport(not witnesses, tuple(witnesses))


def blow_up_sites(config: FiberConfiguration) -> list[BlowUpSite]:
    """Every combinatorially distinct blow-up site of the configuration."""
    sites: list[BlowUpSite] = [Interior(c.id) for c in config.components]
    for q in config.pairings:
        sites.append(Node(q.a) if q.is_loop else Intersection(q.a, q.b))
    return sites
