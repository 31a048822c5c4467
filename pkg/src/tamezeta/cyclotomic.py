"""Exact integer polynomials and formal products of cyclotomic polynomials.

Every rational function handled by this package has the shape
``prod_d Phi_d(t)^e_d``, so it is stored as the exponent map ``{d: e_d}``
and only expanded into coefficients when it is known to be a polynomial.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .errors import InternalInconsistency, InvalidParameter, NotAPolynomial


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise InvalidParameter(f"cannot factor {n}")
    out: dict[int, int] = {}
    q = 2
    while q * q <= n:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += 1 if q == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    q = 2
    while q * q <= n:
        if n % q == 0:
            return False
        q += 1
    return True


def divisors(n: int) -> list[int]:
    small, large = [], []
    q = 1
    while q * q <= n:
        if n % q == 0:
            small.append(q)
            if q * q != n:
                large.append(n // q)
        q += 1
    return small + large[::-1]


def totient(n: int) -> int:
    out = n
    for q in factorize(n):
        out = out // q * (q - 1)
    return out


def mobius(n: int) -> int:
    f = factorize(n)
    if any(k > 1 for k in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def ramanujan_sum(q: int, n: int) -> int:
    """Sum of the n-th powers of the primitive q-th roots of unity."""
    from math import gcd

    r = q // gcd(q, n)
    return mobius(r) * totient(q) // totient(r)


class IntegerPolynomial:
    """Immutable polynomial in Z[t]; coefficients in ascending degree."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[int] = ()):
        c = [int(x) for x in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def monomial(cls, n: int, coefficient: int = 1) -> IntegerPolynomial:
        return cls([0] * n + [coefficient])

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntegerPolynomial):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __add__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        n = max(len(self._c), len(other._c))
        a = self._c + (0,) * (n - len(self._c))
        b = other._c + (0,) * (n - len(other._c))
        return IntegerPolynomial(x + y for x, y in zip(a, b))

    def __neg__(self) -> IntegerPolynomial:
        return IntegerPolynomial(-x for x in self._c)

    def __sub__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        return self + (-other)

    def __mul__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        if not self._c or not other._c:
            return IntegerPolynomial()
        out = [0] * (len(self._c) + len(other._c) - 1)
        for i, x in enumerate(self._c):
            if x:
                for j, y in enumerate(other._c):
                    out[i + j] += x * y
        return IntegerPolynomial(out)

    def __pow__(self, k: int) -> IntegerPolynomial:
        if k < 0:
            raise InvalidParameter("negative power of a polynomial")
        result = IntegerPolynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod_monic(self, divisor: IntegerPolynomial) -> tuple[IntegerPolynomial, IntegerPolynomial]:
        """Long division by a monic divisor (stays inside Z[t])."""
        if not divisor.is_monic():
            raise InvalidParameter("divisor must be monic")
        rem = list(self._c)
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return IntegerPolynomial(), self
        quot = [0] * (len(rem) - dd)
        dc = divisor._c
        for k in range(len(rem) - 1 - dd, -1, -1):
            q = rem[k + dd]
            if q:
                quot[k] = q
                for j in range(dd + 1):
                    rem[k + j] -= q * dc[j]
        return IntegerPolynomial(quot), IntegerPolynomial(rem)

    def exact_div(self, divisor: IntegerPolynomial) -> IntegerPolynomial:
        q, r = self.divmod_monic(divisor)
        if not r.is_zero():
            raise InternalInconsistency(f"inexact division: remainder {r}")
        return q

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"IntegerPolynomial({list(self._c)})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for k in range(len(self._c) - 1, -1, -1):
            c = self._c[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if a == 1 else f"{a}*{var}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> IntegerPolynomial:
    """Phi_d via (t^d - 1) / prod_{e | d, e < d} Phi_e."""
    if d < 1:
        raise InvalidParameter(f"cyclotomic index must be positive, got {d}")
    poly = IntegerPolynomial.monomial(d) - IntegerPolynomial([1])
    for e in divisors(d)[:-1]:
        poly = poly.exact_div(cyclotomic_poly(e))
    return poly


class CyclotomicProduct(Mapping[int, int]):
    """The rational function prod_d Phi_d(t)^e_d, stored as ``{d: e_d}``.

    Behaves as a read-only mapping; zero exponents are never stored.
    """

    __slots__ = ("_e",)

    def __init__(self, exponents: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        acc: dict[int, int] = {}
        for d, e in items:
            d, e = int(d), int(e)
            if d < 1:
                raise InvalidParameter(f"cyclotomic index must be positive, got {d}")
            acc[d] = acc.get(d, 0) + e
        self._e = tuple(sorted((d, e) for d, e in acc.items() if e))

    def __getitem__(self, d: int) -> int:
        for k, e in self._e:
            if k == d:
                return e
        raise KeyError(d)

    def get(self, d, default=0):
        return super().get(d, default)

    def __iter__(self) -> Iterator[int]:
        return (d for d, _ in self._e)

    def __len__(self) -> int:
        return len(self._e)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CyclotomicProduct):
            return self._e == other._e
        if isinstance(other, Mapping):
            return self == CyclotomicProduct(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._e)

    def __mul__(self, other: CyclotomicProduct) -> CyclotomicProduct:
        return CyclotomicProduct(list(self._e) + list(other._e))

    def __truediv__(self, other: CyclotomicProduct) -> CyclotomicProduct:
        return self * other ** -1

    def __pow__(self, k: int) -> CyclotomicProduct:
        return CyclotomicProduct((d, e * k) for d, e in self._e)

    def __repr__(self) -> str:
        return f"CyclotomicProduct({dict(self._e)})"

    def __str__(self) -> str:
        if not self._e:
            return "1"
        return " * ".join(f"Phi_{d}" if e == 1 else f"Phi_{d}^{e}" for d, e in self._e)


def binomial_factorization(n: int) -> CyclotomicProduct:
    """t^n - 1 as the product of Phi_d over the divisors d of n."""
    if n < 1:
        raise InvalidParameter(f"n must be positive, got {n}")
    return CyclotomicProduct({d: 1 for d in divisors(n)})


def cp_mul(a: CyclotomicProduct, b: CyclotomicProduct) -> CyclotomicProduct:
    return a * b


def cp_pow(a: CyclotomicProduct, k: int) -> CyclotomicProduct:
    return a ** k


def is_polynomial(a: CyclotomicProduct) -> bool:
    return all(e > 0 for e in a.values())


def _require_polynomial(a: CyclotomicProduct) -> None:
    negative = {d: e for d, e in a.items() if e < 0}
    if negative:
        raise NotAPolynomial(f"negative cyclotomic exponents {negative}")


def expand(a: CyclotomicProduct) -> IntegerPolynomial:
    _require_polynomial(a)
    out = IntegerPolynomial([1])
    for d, e in a.items():
        out = out * cyclotomic_poly(d) ** e
    return out


def root_orders(a: CyclotomicProduct) -> set[int]:
    _require_polynomial(a)
    return set(a)


def degree(a: CyclotomicProduct) -> int:
    """Numerator degree minus denominator degree."""
    return sum(e * totient(d) for d, e in a.items())
