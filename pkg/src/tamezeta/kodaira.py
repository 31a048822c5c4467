"""Kodaira-Neron reduction types and the built-in fiber library.

Every Kodaira fiber is returned in the form of a relatively minimal
sncd-model: the cuspidal types II, III, IV are replaced by their star
resolutions and I_1 by the two-component form obtained by blowing up the
node.  Self-intersections are derived, never typed in.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import InvalidParameter
from .fiber import Component, FiberConfiguration, NCD, Pairing, derive_self_intersections

KINDS = ("I", "II", "III", "IV", "Istar", "IVstar", "IIIstar", "IIstar")
_INDEXED = ("I", "Istar")


@dataclass(frozen=True)
class KodairaType:
    kind: str
    n: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidParameter(f"unknown Kodaira kind {self.kind!r}")
        if self.n < 0:
            raise InvalidParameter(f"n must be >= 0, got {self.n}")
        if self.n and self.kind not in _INDEXED:
            raise InvalidParameter(f"type {self.kind} takes no index")

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> KodairaType:
        """Accepts ``I3``, ``I_3``, ``I0*``, ``I2star``, ``IV*``, ``IIstar`` ..."""
        t = text.strip().replace("_", "")
        star = t.endswith("*") or t.lower().endswith("star")
        if t.endswith("*"):
            t = t[:-1]
        elif t.lower().endswith("star"):
            t = t[:-4]
        m = re.fullmatch(r"(I{1,3}|IV)(\d*|n)", t)
        if not m:
            raise InvalidParameter(f"cannot parse Kodaira type {text!r}")
        roman, digits = m.groups()
        if digits in ("", "n"):
            index = n
        else:
            index = int(digits)
            if n is not None and n != index:
                raise InvalidParameter(f"conflicting index in {text!r} and n={n}")
        kind = roman + ("star" if star else "")
        if kind in _INDEXED and index is None:
            raise InvalidParameter(f"type {kind} needs an index n")
        return cls(kind, index or 0)

    @property
    def is_multiplicative(self) -> bool:
        return self.kind == "I"

    def __str__(self) -> str:
        if self.kind == "I":
            return f"I{self.n}"
        if self.kind == "Istar":
            return f"I{self.n}*"
        return self.kind.replace("star", "*")


def _build(layout: list[tuple[str, int, int]], edges: list[tuple[str, str, int]], p: int) -> FiberConfiguration:
    comps = [Component(cid, mult, genus) for cid, mult, genus in layout]
    pairs = [Pairing(a, b, count) for a, b, count in edges]
    return derive_self_intersections(FiberConfiguration(tuple(comps), tuple(pairs), residue_char=p))


def _star(center: int, arms: list[list[int]], p: int) -> FiberConfiguration:
    """A central rational curve with chains attached; arms list multiplicities outward."""
    layout, edges = [], []
    for k, arm in enumerate(arms):
        prev = "C"
        for j, mult in enumerate(arm):
            cid = f"A{k + 1}.{j + 1}" if len(arm) > 1 else f"A{k + 1}"
            layout.append((cid, mult, 0))
            edges.append((prev, cid, 1))
            prev = cid
    layout.append(("C", center, 0))
    return _build(layout, edges, p)


def kodaira_config(kodaira: KodairaType | str, residue_char: int = 0) -> FiberConfiguration:
    t = KodairaType.parse(kodaira) if isinstance(kodaira, str) else kodaira
    p = residue_char
    if t.kind == "I":
        if t.n == 0:
            return _build([("E", 1, 1)], [], p)
        if t.n == 1:
            return _build([("A", 1, 0), ("E", 2, 0)], [("A", "E", 2)], p)
        if t.n == 2:
            return _build([("E1", 1, 0), ("E2", 1, 0)], [("E1", "E2", 2)], p)
        ids = [f"E{k + 1}" for k in range(t.n)]
        return _build(
            [(c, 1, 0) for c in ids],
            [(ids[k], ids[(k + 1) % t.n], 1) for k in range(t.n)],
            p,
        )
    if t.kind == "II":
        return _star(6, [[1], [2], [3]], p)
    if t.kind == "III":
        return _star(4, [[1], [1], [2]], p)
    if t.kind == "IV":
        return _star(3, [[1], [1], [1]], p)
    if t.kind == "Istar":
        if t.n == 0:
            return _star(2, [[1], [1], [1], [1]], p)
        chain = [f"B{k}" for k in range(t.n + 1)]
        layout = [("T1", 1, 0), ("T2", 1, 0)] + [(c, 2, 0) for c in chain] + [("T3", 1, 0), ("T4", 1, 0)]
        edges = [("T1", chain[0], 1), ("T2", chain[0], 1), ("T3", chain[-1], 1), ("T4", chain[-1], 1)]
        edges += [(chain[k], chain[k + 1], 1) for k in range(t.n)]
        return _build(layout, edges, p)
    if t.kind == "IVstar":
        return _star(3, [[2, 1], [2, 1], [2, 1]], p)
    if t.kind == "IIIstar":
        return _star(4, [[3, 2, 1], [3, 2, 1], [2]], p)
    if t.kind == "IIstar":
        return _star(6, [[5, 4, 3, 2, 1], [4, 2], [3]], p)
    raise InvalidParameter(f"unsupported type {t}")


def nodal_cubic(residue_char: int = 0) -> FiberConfiguration:
    """The minimal ncd-model of an I_1 fiber: one rational curve with a node."""
    comps = (Component("A", 1, 0),)
    return derive_self_intersections(
        FiberConfiguration(comps, (Pairing("A", "A", 1),), residue_char=residue_char, mode=NCD)
    )


def multiple_elliptic(multiplicity: int, residue_char: int = 0) -> FiberConfiguration:
    """A genus-one curve whose special fiber is a single elliptic curve of the given multiplicity."""
    return derive_self_intersections(
        FiberConfiguration((Component("E", multiplicity, 1),), residue_char=residue_char)
    )


def good_reduction(genus: int, residue_char: int = 0) -> FiberConfiguration:
    return derive_self_intersections(FiberConfiguration((Component("E", 1, genus),), residue_char=residue_char))


def standard_types() -> list[KodairaType]:
    """Kodaira types in the library, with small representatives for I_n and I_n*."""
    out = [KodairaType("I", n) for n in range(6)]
    out += [KodairaType(k) for k in ("II", "III", "IV")]
    out += [KodairaType("Istar", n) for n in range(4)]
    out += [KodairaType(k) for k in ("IVstar", "IIIstar", "IIstar")]
    return out


def fixture_library(residue_char: int = 0) -> dict[str, FiberConfiguration]:
    """Named sncd fixtures: the Kodaira table plus a few non-elliptic fibers."""
    lib = {str(t): kodaira_config(t, residue_char) for t in standard_types()}
    lib["genus2_good"] = good_reduction(2, residue_char)
    lib["genus0_good"] = good_reduction(0, residue_char)
    lib["elliptic_mult4"] = multiple_elliptic(4, residue_char)
    lib["genus2_two_elliptic"] = _build(
        [("E1", 1, 1), ("E2", 1, 1)], [("E1", "E2", 1)], residue_char
    )
    lib["genus2_double"] = _star(2, [[1]] * 6, residue_char)
    return lib
