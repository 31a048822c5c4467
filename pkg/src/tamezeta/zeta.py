"""Tame monodromy zeta functions and traces from stratum data.

For an sncd-model with strata (N_i, chi(E_i^o)) the tame monodromy zeta
function is prod_i (t^{N'_i} - 1)^{-chi(E_i^o)}, where N'_i is the prime-to-p
part of N_i, and the alternating trace of the d-th power of the tame
generator is sum_{N'_i | d} N'_i chi(E_i^o).
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import (
    CyclotomicProduct,
    IntegerPolynomial,
    binomial_factorization,
    degree,
    expand,
    is_polynomial,
    ramanujan_sum,
)
from .errors import InternalInconsistency, InvalidParameter, NotAPolynomial
from .fiber import FiberConfiguration, StratumData, as_strata, prime_to_p_part, require_valid

_UNIPOTENT_H0_H2 = CyclotomicProduct({1: 2})


@dataclass(frozen=True)
class ZetaReport:
    zeta: CyclotomicProduct
    tame_euler_char: int
    char_poly_h1: IntegerPolynomial | None = None
    q_poly: IntegerPolynomial | None = None
    quotient_q_over_p: IntegerPolynomial | None = None
    # factored forms of the three curve polynomials, keyed by field name
    factored: dict[str, CyclotomicProduct] | None = None


def _product(strata, exponent_of) -> CyclotomicProduct:
    out = CyclotomicProduct()
    for n, chi in strata:
        if chi:
            out = out * binomial_factorization(exponent_of(n)) ** -chi
    return out


def zeta_function(s: StratumData) -> CyclotomicProduct:
    p = s.residue_char
    return _product(s.strata, lambda n: prime_to_p_part(n, p))


def trace_of_power(s: StratumData, d: int) -> int:
    if d < 1:
        raise InvalidParameter(f"d must be positive, got {d}")
    total = 0
    for n, chi in s.strata:
        n_prime = prime_to_p_part(n, s.residue_char)
        if d % n_prime == 0:
            total += n_prime * chi
    return total


def trace_from_zeta(zeta: CyclotomicProduct, d: int) -> int:
    """Alternating trace of phi^d recovered from the factored zeta function.

    Each Phi_e in zeta with exponent k contributes -k times the sum of the
    d-th powers of the primitive e-th roots of unity.
    """
    if d < 1:
        raise InvalidParameter(f"d must be positive, got {d}")
    return -sum(k * ramanujan_sum(e, d) for e, k in zeta.items())


def tame_euler_char(s: StratumData) -> int:
    return sum(prime_to_p_part(n, s.residue_char) * chi for n, chi in s.strata)


def tame_euler_consistent(s: StratumData) -> bool | None:
    """Whether total_chi equals the tame Euler characteristic (a necessary
    condition for cohomological tameness); None when total_chi is unknown."""
    if s.total_chi is None:
        return None
    return s.total_chi == tame_euler_char(s)


def char_poly_h1_factored(config: FiberConfiguration) -> CyclotomicProduct:
    require_valid(config, sncd=True)
    return _UNIPOTENT_H0_H2 * zeta_function(as_strata(config))


def q_poly_factored(config: FiberConfiguration) -> CyclotomicProduct:
    require_valid(config, sncd=True)
    return _UNIPOTENT_H0_H2 * _product(as_strata(config).strata, lambda n: n)


def _expand_or_raise(cp: CyclotomicProduct, what: str) -> IntegerPolynomial:
    if not is_polynomial(cp):
        raise NotAPolynomial(f"{what} = {cp} is not a polynomial; input is not a plausible full special fiber")
    return expand(cp)


def char_poly_h1(config: FiberConfiguration) -> IntegerPolynomial:
    """Characteristic polynomial of the tame generator on H^1."""
    return _expand_or_raise(char_poly_h1_factored(config), "P_C")


def q_poly(config: FiberConfiguration) -> IntegerPolynomial:
    return _expand_or_raise(q_poly_factored(config), "Q_C")


def zeta_report(data: FiberConfiguration | StratumData) -> ZetaReport:
    if isinstance(data, StratumData):
        z = zeta_function(data)
        return ZetaReport(zeta=z, tame_euler_char=tame_euler_char(data))
    require_valid(data, sncd=True)
    s = as_strata(data)
    z = zeta_function(s)
    p_c = char_poly_h1_factored(data)
    q_c = q_poly_factored(data)
    quotient = q_c / p_c
    report = ZetaReport(
        zeta=z,
        tame_euler_char=tame_euler_char(s),
        char_poly_h1=_expand_or_raise(p_c, "P_C"),
        q_poly=_expand_or_raise(q_c, "Q_C"),
        quotient_q_over_p=_expand_or_raise(quotient, "Q_C/P_C"),
        factored={"char_poly_h1": p_c, "q_poly": q_c, "quotient_q_over_p": quotient},
    )
    if report.tame_euler_char != -degree(z):
        raise InternalInconsistency("tame Euler characteristic differs from minus the degree of zeta")
    return report
