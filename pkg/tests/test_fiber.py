from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tamezeta.errors import InvalidConfiguration, InvariantError, UnknownComponent
from tamezeta.fiber import (
    NCD,
    Component,
    FiberConfiguration,
    Pairing,
    as_strata,
    canonical_degree,
    chi_open,
    connected_components_of_index_set,
    derive_self_intersections,
    intersection_matrix,
    is_negative_semidefinite,
    is_rational_tree,
    prime_to_p_part,
    require_valid,
    restricted_euler_sum,
    total_genus,
    validate,
)
from tamezeta.kodaira import fixture_library, kodaira_config, nodal_cubic


def strip(cfg: FiberConfiguration) -> FiberConfiguration:
    return cfg.with_components(
        Component(c.id, c.multiplicity, c.genus) for c in cfg.components
    )


@given(st.integers(1, 10**6), st.sampled_from([0, 2, 3, 5, 7]))
def test_prime_to_p_part(n, p):
    m = prime_to_p_part(n, p)
    assert n % m == 0
    if p:
        assert m % p != 0
        q = n // m
        while q % p == 0:
            q //= p
        assert q == 1
    else:
        assert m == n


def test_every_fixture_validates(fixture_config):
    report = validate(fixture_config)
    assert report.ok, report.violations


def test_derivation_recovers_self_intersections(fixture_config):
    derived = derive_self_intersections(strip(fixture_config))
    assert derived == fixture_config
    assert derive_self_intersections(derived) == derived


def test_genus_and_euler_characteristic(fixture_config):
    g = total_genus(fixture_config)
    s = as_strata(fixture_config)
    assert s.total_chi == 2 - 2 * g == sum(n * chi for n, chi in s.strata)
    nu = validate(fixture_config).nu
    assert 2 * g - 2 == sum(c.multiplicity * nu[c.id] for c in fixture_config.components)
    for c in fixture_config.components:
        assert nu[c.id] == canonical_degree(fixture_config, c.id)


@pytest.mark.parametrize(
    "kind, genus",
    [("I0", 1), ("I4", 1), ("II", 1), ("II*", 1), ("I3*", 1)],
)
def test_kodaira_genus(kind, genus):
    assert total_genus(kodaira_config(kind)) == genus


def test_chi_open_examples():
    ii = kodaira_config("II")
    assert {c.multiplicity: chi_open(ii, c.id) for c in ii.components} == {1: 1, 2: 1, 3: 1, 6: -1}
    nod = nodal_cubic()
    assert chi_open(nod, "A") == 0
    assert nod.mode == NCD


def test_negative_semidefinite_intersection_matrix(fixture_config):
    m = intersection_matrix(fixture_config)
    n = [c.multiplicity for c in fixture_config.components]
    # the fiber itself is in the kernel
    assert all(sum(row[j] * n[j] for j in range(len(n))) == 0 for row in m)
    assert is_negative_semidefinite(fixture_config)


def test_index_set_components_for_ii_star():
    cfg = kodaira_config("II*")
    blocks = connected_components_of_index_set(cfg, lambda c: c.multiplicity % 3 == 0)
    assert sorted(len(b) for b in blocks) == [1, 2]
    for b in blocks:
        assert is_rational_tree(cfg, b)
        # a rational tree has Euler characteristic 2
        assert restricted_euler_sum(cfg, b) == 2


def test_validate_reports_broken_identities():
    cfg = FiberConfiguration(
        (Component("A", 1, 0, -1), Component("B", 1, 0, -1)), (Pairing("A", "B"),)
    )
    assert validate(cfg).ok  # two (-1)-lines: a conic degenerating, genus 0
    bad = cfg.with_components([Component("A", 1, 0, -3), Component("B", 1, 0, -1)])
    report = validate(bad)
    assert not report.ok
    assert {v.identity for v in report.violations} >= {"fiber_orthogonality"}
    with pytest.raises(InvalidConfiguration):
        require_valid(bad)


def test_structural_invariants_enforced():
    with pytest.raises(InvariantError):
        FiberConfiguration((Component("A", 1), Component("B", 1)))  # disconnected
    with pytest.raises(InvariantError):
        FiberConfiguration((Component("A", 1),), (Pairing("A", "A"),))  # loop in sncd
    with pytest.raises(InvariantError):
        FiberConfiguration((Component("A", 1),), (Pairing("A", "Z"),))
    with pytest.raises(UnknownComponent):
        kodaira_config("II").component("nope")


def test_residue_char_must_be_prime_or_zero():
    with pytest.raises(InvariantError):
        fixture_library(4)
