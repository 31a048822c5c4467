from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tamezeta.cyclotomic import CyclotomicProduct, IntegerPolynomial, degree, expand
from tamezeta.errors import InvalidParameter
from tamezeta.fiber import StratumData, as_strata
from tamezeta.kodaira import kodaira_config
from tamezeta.zeta import (
    char_poly_h1,
    char_poly_h1_factored,
    q_poly,
    q_poly_factored,
    tame_euler_char,
    tame_euler_consistent,
    trace_from_zeta,
    trace_of_power,
    zeta_function,
    zeta_report,
)

from conftest import strata_lists

# small enough that expanding the zeta function stays cheap
small_strata = st.builds(
    StratumData,
    st.lists(st.tuples(st.integers(1, 24), st.integers(-4, 4)), min_size=1, max_size=5).map(tuple),
    st.sampled_from((0, 2, 3, 5)),
)


def power_sums(poly: IntegerPolynomial, upto: int) -> list[int]:
    """Newton's identities: p_k = sum of k-th powers of the roots of a monic polynomial."""
    n = poly.degree
    c = poly.coefficients
    # e-coefficients of x^n + a1 x^(n-1) + ... + an
    a = [c[n - k] for k in range(n + 1)]
    p = [0] * (upto + 1)
    for k in range(1, upto + 1):
        total = -k * a[k] if k <= n else 0
        for i in range(1, min(k, n + 1)):
            total -= a[i] * p[k - i]
        p[k] = total
    return p


def trace_by_newton(z: CyclotomicProduct, upto: int) -> list[int]:
    num = expand(CyclotomicProduct({d: e for d, e in z.items() if e > 0}))
    den = expand(CyclotomicProduct({d: -e for d, e in z.items() if e < 0}))
    pn, pd = power_sums(num, upto), power_sums(den, upto)
    return [pd[k] - pn[k] for k in range(upto + 1)]


def test_newton_oracle_sanity():
    # roots of t^3 - 1 are the cube roots of unity
    assert power_sums(IntegerPolynomial([-1, 0, 0, 1]), 6)[1:] == [0, 0, 3, 0, 0, 3]


@settings(max_examples=100, deadline=None)
@given(small_strata)
def test_trace_three_routes_agree(s):
    z = zeta_function(s)
    newton = trace_by_newton(z, 24)
    for d in range(1, 25):
        t = trace_of_power(s, d)
        assert t == trace_from_zeta(z, d) == newton[d]


@given(strata_lists)
def test_tame_euler_char_is_minus_degree(s):
    assert tame_euler_char(s) == -degree(zeta_function(s))
    assert tame_euler_consistent(s) is None


def test_zeta_examples():
    ii = as_strata(kodaira_config("II"))
    assert zeta_function(ii) == CyclotomicProduct({1: -2, 6: 1})
    ii2 = as_strata(kodaira_config("II", 2))
    assert trace_of_power(ii2, 1) == 2
    assert zeta_function(StratumData(((1, 2),))) == CyclotomicProduct({1: -2})
    with pytest.raises(InvalidParameter):
        trace_of_power(ii, 0)


def test_char_poly_examples():
    assert char_poly_h1(kodaira_config("II")) == IntegerPolynomial([1, -1, 1])
    assert char_poly_h1(kodaira_config("II", 2)) == IntegerPolynomial([1])
    assert q_poly(kodaira_config("II", 2)) == IntegerPolynomial([1, -1, 1])
    assert q_poly(kodaira_config("I2*")) == IntegerPolynomial([1, 2, 1])


def test_char_poly_divides_q_poly(fixture_config):
    p_cp, q_cp = char_poly_h1_factored(fixture_config), q_poly_factored(fixture_config)
    p, q = expand(p_cp), expand(q_cp)
    assert q.exact_div(p) * p == q
    assert all(q_cp.get(d) >= e for d, e in p_cp.items())
    # P_C = (t-1)^2 zeta, so its degree is 2 minus the tame Euler characteristic
    assert p.degree == 2 - zeta_report(fixture_config).tame_euler_char


def test_zeta_report_for_strata_has_no_polynomials():
    r = zeta_report(StratumData(((2, -1), (1, 3)), 3, 1))
    assert r.char_poly_h1 is None and r.factored is None
    assert r.tame_euler_char == 1
