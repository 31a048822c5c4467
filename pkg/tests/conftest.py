from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from tamezeta.fiber import FiberConfiguration, StratumData
from tamezeta.kodaira import fixture_library
from tamezeta.surgery import blow_up, blow_up_sites

PRIMES = (0, 2, 3, 5)


def all_fixtures(primes=PRIMES) -> list[tuple[str, int, FiberConfiguration]]:
    return [(name, p, cfg) for p in primes for name, cfg in fixture_library(p).items()]


def random_blowups(cfg: FiberConfiguration, rng: random.Random, depth: int) -> FiberConfiguration:
    for _ in range(depth):
        cfg = blow_up(cfg, rng.choice(blow_up_sites(cfg)))
    return cfg


def surgery_descendants(count: int, seed: int = 0, max_depth: int = 5):
    """Deterministic sample of (name, p, original, blown-up) quadruples."""
    rng = random.Random(seed)
    fixtures = all_fixtures()
    out = []
    for k in range(count):
        name, p, cfg = fixtures[k % len(fixtures)]
        out.append((name, p, cfg, random_blowups(cfg, rng, rng.randint(1, max_depth))))
    return out


strata_lists = st.builds(
    StratumData,
    st.lists(st.tuples(st.integers(1, 60), st.integers(-10, 10)), min_size=1, max_size=8).map(tuple),
    st.sampled_from(PRIMES),
)


@pytest.fixture(params=[f"{n}@{p}" for n, p, _ in all_fixtures()])
def fixture_config(request) -> FiberConfiguration:
    name, p = request.param.split("@")
    return fixture_library(int(p))[name]


# acceptance results, filled in by tests/test_acceptance.py
ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}")
