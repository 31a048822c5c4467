"""Weighted dual graphs of special fibers and their numerical invariants.

A ``FiberConfiguration`` records, for every irreducible component E_i of the
special fiber, its multiplicity N_i, the genus g_i of its normalization and
(optionally) its self-intersection E_i.E_i, together with the number of
intersection points between each pair of components.  A pairing ``(a, a)``
counts the nodes of component ``a``; nodes are only allowed in ``ncd`` mode.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Iterable

from .cyclotomic import is_prime
from .errors import (
    InvalidConfiguration,
    InvariantError,
    NonIntegralSelfIntersection,
    UnknownComponent,
)

SNCD = "sncd"
NCD = "ncd"
MODES = (SNCD, NCD)


def check_residue_char(p: int) -> int:
    if isinstance(p, bool) or not isinstance(p, int):
        raise InvariantError("residue_char", f"expected an integer, got {p!r}")
    if p != 0 and not is_prime(p):
        raise InvariantError("residue_char", f"{p} is neither 0 nor a prime")
    return p


def prime_to_p_part(n: int, p: int) -> int:
    """Largest divisor of ``n`` not divisible by ``p`` (``n`` itself when p = 0)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if p == 0:
        return n
    while n % p == 0:
        n //= p
    return n


@dataclass(frozen=True)
class Component:
    id: str
    multiplicity: int
    genus: int = 0
    self_intersection: int | None = None

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise InvariantError("component_id", f"component id must be a non-empty string, got {self.id!r}")
        if not _is_int(self.multiplicity) or self.multiplicity < 1:
            raise InvariantError("multiplicity", f"{self.id}: multiplicity must be >= 1, got {self.multiplicity!r}")
        if not _is_int(self.genus) or self.genus < 0:
            raise InvariantError("genus", f"{self.id}: genus must be >= 0, got {self.genus!r}")
        if self.self_intersection is not None and not _is_int(self.self_intersection):
            raise InvariantError("self_intersection", f"{self.id}: expected an integer")


@dataclass(frozen=True)
class Pairing:
    a: str
    b: str
    count: int = 1

    def __post_init__(self):
        if not _is_int(self.count) or self.count < 1:
            raise InvariantError("intersection_count", f"({self.a}, {self.b}): count must be >= 1")
        if self.b < self.a:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    @property
    def key(self) -> tuple[str, str]:
        return (self.a, self.b)

    @property
    def is_loop(self) -> bool:
        return self.a == self.b


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


@dataclass(frozen=True)
class FiberConfiguration:
    components: tuple[Component, ...]
    pairings: tuple[Pairing, ...] = ()
    residue_char: int = 0
    mode: str = SNCD
    _index: dict = field(init=False, repr=False, compare=False, hash=False)
    _pairs: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "pairings", tuple(sorted(self.pairings, key=lambda q: q.key)))
        check_residue_char(self.residue_char)
        if self.mode not in MODES:
            raise InvariantError("mode", f"mode must be one of {MODES}, got {self.mode!r}")
        if not self.components:
            raise InvariantError("components", "a fiber needs at least one component")
        index: dict[str, Component] = {}
        for c in self.components:
            if c.id in index:
                raise InvariantError("unique_ids", f"duplicate component id {c.id!r}")
            index[c.id] = c
        pairs: dict[tuple[str, str], int] = {}
        for q in self.pairings:
            for end in q.key:
                if end not in index:
                    raise InvariantError("pairing_endpoint", f"pairing refers to unknown component {end!r}")
            if q.key in pairs:
                raise InvariantError("unique_pairings", f"more than one pairing for {q.key}")
            pairs[q.key] = q.count
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_pairs", pairs)
        if self.mode == SNCD and any(q.is_loop for q in self.pairings):
            raise InvariantError("sncd_no_loops", "nodes (a = b pairings) need ncd mode")
        if not self.is_connected():
            raise InvariantError("connected", "the dual graph is not connected")

    # -- lookups ---------------------------------------------------------

    @property
    def ids(self) -> list[str]:
        return [c.id for c in self.components]

    def component(self, cid: str) -> Component:
        try:
            return self._index[cid]
        except KeyError:
            raise UnknownComponent(f"unknown component {cid!r}") from None

    def __contains__(self, cid: str) -> bool:
        return cid in self._index

    def pair(self, a: str, b: str) -> int:
        """Number of intersection points of a and b (nodes of a when a == b)."""
        self.component(a)
        self.component(b)
        return self._pairs.get((a, b) if a <= b else (b, a), 0)

    def loops(self, cid: str) -> int:
        return self.pair(cid, cid)

    def neighbors(self, cid: str) -> dict[str, int]:
        """Other components meeting ``cid``, with intersection counts."""
        self.component(cid)
        out = {}
        for (a, b), n in self._pairs.items():
            if a == b:
                continue
            if a == cid:
                out[b] = n
            elif b == cid:
                out[a] = n
        return out

    def boundary_points(self, cid: str) -> int:
        """Points of E_i lying on another component."""
        return sum(self.neighbors(cid).values())

    def is_connected(self) -> bool:
        return len(connected_components_of_index_set(self, lambda c: True)) == 1

    # -- rebuilding ------------------------------------------------------

    def with_components(self, components: Iterable[Component]) -> FiberConfiguration:
        return replace(self, components=tuple(components))

    def with_residue_char(self, p: int) -> FiberConfiguration:
        return replace(self, residue_char=p)

    @property
    def fully_specified(self) -> bool:
        return all(c.self_intersection is not None for c in self.components)


@dataclass(frozen=True)
class StratumData:
    strata: tuple[tuple[int, int], ...]
    residue_char: int = 0
    total_chi: int | None = None

    def __post_init__(self):
        strata = tuple((int(n), int(chi)) for n, chi in self.strata)
        for n, _ in strata:
            if n < 1:
                raise InvariantError("multiplicity", f"stratum multiplicity must be >= 1, got {n}")
        object.__setattr__(self, "strata", strata)
        check_residue_char(self.residue_char)


@dataclass(frozen=True)
class Violation:
    identity: str
    component: str | None
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    derived_genus: int | None
    nu: dict[str, int]
    violations: tuple[Violation, ...]


def derive_self_intersections(config: FiberConfiguration) -> FiberConfiguration:
    """Fill in missing self-intersections from sum_i N_i (E_i . E_j) = 0."""
    out = []
    for c in config.components:
        if c.self_intersection is not None:
            out.append(c)
            continue
        total = sum(config.component(o).multiplicity * n for o, n in config.neighbors(c.id).items())
        if total % c.multiplicity:
            raise NonIntegralSelfIntersection(
                f"{c.id}: multiplicity {c.multiplicity} does not divide {total}; not a full special fiber"
            )
        out.append(replace(c, self_intersection=-total // c.multiplicity))
    return config.with_components(out)


def chi_open(config: FiberConfiguration, cid: str) -> int:
    """Euler characteristic of E_i minus its nodes and its points on other components."""
    c = config.component(cid)
    return 2 - 2 * c.genus - 2 * config.loops(cid) - config.boundary_points(cid)


def canonical_degree(config: FiberConfiguration, cid: str) -> int:
    """E_i . K by adjunction, using the arithmetic genus g_i + #nodes."""
    c = config.component(cid)
    if c.self_intersection is None:
        raise InvalidConfiguration(f"{cid}: self-intersection missing; derive it first")
    arithmetic_genus = c.genus + config.loops(cid)
    return 2 * arithmetic_genus - 2 - c.self_intersection


def validate(config: FiberConfiguration) -> ValidationReport:
    violations: list[Violation] = []
    missing = [c.id for c in config.components if c.self_intersection is None]
    for cid in missing:
        violations.append(Violation("self_intersection_missing", cid, "run derive_self_intersections first"))

    for c in config.components:
        if c.self_intersection is None:
            continue
        s = c.multiplicity * c.self_intersection + sum(
            config.component(o).multiplicity * n for o, n in config.neighbors(c.id).items()
        )
        if s:
            violations.append(Violation("fiber_orthogonality", c.id, f"sum_i N_i (E_i . E_j) = {s}, expected 0"))

    nu: dict[str, int] = {}
    genus = None
    if not missing:
        nu = {c.id: canonical_degree(config, c.id) for c in config.components}
        twice = sum(c.multiplicity * nu[c.id] for c in config.components)
        if twice % 2:
            violations.append(Violation("canonical_parity", None, f"sum N_i nu_i = {twice} is odd"))
        else:
            genus = (twice + 2) // 2
            if genus < 0:
                violations.append(Violation("genus_nonnegative", None, f"derived genus {genus} < 0"))
            euler = sum(c.multiplicity * chi_open(config, c.id) for c in config.components)
            if euler != 2 - 2 * genus:
                violations.append(
                    Violation("euler", None, f"sum N_i chi(E_i^o) = {euler}, expected {2 - 2 * genus}")
                )

    if not config.is_connected():
        violations.append(Violation("connected", None, "dual graph is disconnected"))
    if config.mode == SNCD:
        for q in config.pairings:
            if q.is_loop:
                violations.append(Violation("sncd_no_loops", q.a, "node on a component in sncd mode"))

    return ValidationReport(ok=not violations, derived_genus=genus, nu=nu, violations=tuple(violations))


def require_valid(config: FiberConfiguration, sncd: bool = False) -> ValidationReport:
    report = validate(config)
    if not report.ok:
        detail = "; ".join(f"{v.identity}({v.component or '-'}): {v.detail}" for v in report.violations)
        raise InvalidConfiguration(f"configuration does not validate: {detail}")
    if sncd and config.mode != SNCD:
        raise InvalidConfiguration("operation needs an sncd configuration; resolve the nodes first")
    return report


def total_genus(config: FiberConfiguration) -> int:
    return require_valid(config).derived_genus


def as_strata(config: FiberConfiguration) -> StratumData:
    g = total_genus(config)
    return StratumData(
        strata=tuple((c.multiplicity, chi_open(config, c.id)) for c in config.components),
        residue_char=config.residue_char,
        total_chi=2 - 2 * g,
    )


def connected_components_of_index_set(
    config: FiberConfiguration, pred: Callable[[Component], bool]
) -> list[set[str]]:
    """Connected components of the subgraph induced by the selected components."""
    selected = [c.id for c in config.components if pred(c)]
    chosen = set(selected)
    seen: set[str] = set()
    out = []
    for start in selected:
        if start in seen:
            continue
        block = {start}
        stack = [start]
        while stack:
            cur = stack.pop()
            for nb in config.neighbors(cur):
                if nb in chosen and nb not in block:
                    block.add(nb)
                    stack.append(nb)
        seen |= block
        out.append(block)
    return out


def restricted_euler_sum(config: FiberConfiguration, subset: Iterable[str]) -> int:
    """sum over i in the subset of chi(E_i minus its points on other subset members)."""
    sub = set(subset)
    total = 0
    for cid in sub:
        c = config.component(cid)
        inner = sum(n for o, n in config.neighbors(cid).items() if o in sub)
        total += 2 - 2 * c.genus - 2 * config.loops(cid) - inner
    return total


def is_rational_tree(config: FiberConfiguration, subset: Iterable[str]) -> bool:
    sub = set(subset)
    if any(config.component(c).genus or config.loops(c) for c in sub):
        return False
    edges = 0
    for q in config.pairings:
        if q.a in sub and q.b in sub:
            edges += q.count
    connected = len(
        connected_components_of_index_set(config, lambda c: c.id in sub)
    ) == 1
    return connected and edges == len(sub) - 1


def intersection_matrix(config: FiberConfiguration) -> list[list[int]]:
    ids = config.ids
    out = []
    for a in ids:
        row = []
        for b in ids:
            if a == b:
                s = config.component(a).self_intersection
                if s is None:
                    raise InvalidConfiguration(f"{a}: self-intersection missing")
                row.append(s)
            else:
                row.append(config.pair(a, b))
        out.append(row)
    return out


def is_negative_semidefinite(config: FiberConfiguration) -> bool:
    """Diagnostic only: symmetric elimination over Q on minus the intersection matrix."""
    m = [[Fraction(-x) for x in row] for row in intersection_matrix(config)]
    while m:
        pivot = m[0][0]
        if pivot < 0:
            return False
        if pivot == 0:
            if any(x != 0 for x in m[0]):
                return False
            m = [row[1:] for row in m[1:]]
            continue
        m = [
            [m[i][j] - m[i][0] * m[0][j] / pivot for j in range(1, len(m))]
            for i in range(1, len(m))
        ]
    return True
