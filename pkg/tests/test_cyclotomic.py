from __future__ import annotations

import cmath
from math import gcd

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from tamezeta.cyclotomic import (
    CyclotomicProduct,
    IntegerPolynomial,
    binomial_factorization,
    cp_mul,
    cp_pow,
    cyclotomic_poly,
    degree,
    divisors,
    expand,
    factorize,
    is_polynomial,
    mobius,
    ramanujan_sum,
    root_orders,
    totient,
)
from tamezeta.errors import InternalInconsistency, NotAPolynomial

T = sympy.Symbol("t")


def sympy_coeffs(expr) -> tuple[int, ...]:
    return tuple(int(c) for c in reversed(sympy.Poly(expr, T).all_coeffs()))


@pytest.mark.parametrize("d", [1, 2, 3, 4, 6, 12, 30, 105, 199, 200])
def test_cyclotomic_matches_sympy(d):
    assert cyclotomic_poly(d).coefficients == sympy_coeffs(sympy.cyclotomic_poly(d, T))


def test_cyclotomic_monic_degree_totient():
    for d in range(1, 201):
        phi = cyclotomic_poly(d)
        assert phi.is_monic()
        assert phi.degree == sympy.totient(d)


def test_binomial_factorization_expands_to_t_n_minus_1():
    for n in range(1, 101):
        assert expand(binomial_factorization(n)) == IntegerPolynomial.monomial(n) - IntegerPolynomial([1])


def test_arithmetic_helpers_against_sympy():
    for n in range(1, 300):
        assert factorize(n) == dict(sympy.factorint(n))
        assert divisors(n) == sympy.divisors(n)
        assert totient(n) == sympy.totient(n)
        assert mobius(n) == sympy.mobius(n)


@given(st.integers(1, 40), st.integers(1, 80))
def test_ramanujan_sum_matches_root_power_sum(q, n):
    numeric = sum(cmath.exp(2j * cmath.pi * k * n / q) for k in range(1, q + 1) if gcd(k, q) == 1)
    assert abs(numeric - ramanujan_sum(q, n)) < 1e-8


def test_polynomial_arithmetic_and_printing():
    p = IntegerPolynomial([1, -1, 1])
    assert str(p) == "t^2 - t + 1"
    assert str(IntegerPolynomial()) == "0"
    assert IntegerPolynomial([0, 0]).degree == -1
    assert (p * IntegerPolynomial([1, 1])) == IntegerPolynomial([1, 0, 0, 1])
    assert p(2) == 3
    with pytest.raises(InternalInconsistency):
        IntegerPolynomial([1, 0, 1]).exact_div(IntegerPolynomial([-1, 1]))


@given(st.lists(st.integers(-5, 5), max_size=6), st.lists(st.integers(-5, 5), max_size=6))
def test_polynomial_product_matches_sympy(a, b):
    pa, pb = IntegerPolynomial(a), IntegerPolynomial(b)
    expr = sympy.expand(sum(c * T**k for k, c in enumerate(a)) * sum(c * T**k for k, c in enumerate(b)))
    expected = sympy_coeffs(expr) if expr != 0 else ()
    assert (pa * pb).coefficients == expected


exponents = st.dictionaries(st.integers(1, 30), st.integers(-3, 3), max_size=5).map(CyclotomicProduct)


@given(exponents, exponents)
def test_product_is_multiplicative(a, b):
    c = cp_mul(a, b)
    for d in set(a) | set(b):
        assert c.get(d) == a.get(d) + b.get(d)
    if is_polynomial(a) and is_polynomial(b):
        assert expand(c) == expand(a) * expand(b)
        assert degree(c) == degree(a) + degree(b)


@given(exponents, st.integers(-3, 3))
def test_power(a, k):
    assert cp_pow(a, k) == CyclotomicProduct({d: e * k for d, e in a.items()})


def test_root_orders_and_non_polynomial():
    cp = CyclotomicProduct({6: 1, 1: 2})
    assert root_orders(cp) == {1, 6}
    assert degree(cp) == 4
    with pytest.raises(NotAPolynomial):
        root_orders(CyclotomicProduct({2: -1}))
    assert is_polynomial(CyclotomicProduct())
    assert expand(CyclotomicProduct()) == IntegerPolynomial([1])
