"""Cyclotomic polynomials over Z and moduli built from their powers.

cyclotomic(n) is computed by exact division of q^n - 1 by the lower-order
factors, which stays in Z[q] throughout. CycloModulus describes a product
of prime-power style factors Phi_d(q)^e used as a congruence modulus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .exact import Poly, ONE


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError("n must be positive")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    out = n
    for p in prime_factors(n):
        out -= out // p
    return out


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1 if d == 2 else 2
    if n > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Poly:
    """The n-th cyclotomic polynomial as a Poly.

    >>> print(cyclotomic(6))
    1 - q + q^2
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return Poly([-1, 1])
    p = Poly([-1] + [0] * (n - 1) + [1])
    for d in divisors(n):
        if d < n:
            p = p.exact_div(cyclotomic(d))
    return p


def cyclotomic_by_mobius(n: int) -> Poly:
    """Independent construction: product of (q^d - 1)^mobius(n/d) over d | n."""
    num, den = ONE, ONE
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 0:
            continue
        block = Poly([-1] + [0] * (d - 1) + [1])
        if mu == 1:
            num = num * block
        else:
            den = den * block
    return num.exact_div(den)


def phi_valuation(p: Poly, d: int):
    """Multiplicity of cyclotomic(d) in p; math.inf for the zero polynomial."""
    if not p:
        return math.inf
    phi = cyclotomic(d)
    v = 0
    while True:
        nxt = p.try_exact_div(phi)
        if nxt is None:
            return v
        p = nxt
        v += 1


@dataclass(frozen=True)
class CycloModulus:
    """A modulus of the form prod_d Phi_d(q)^e_d, factors sorted by d."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for d, e in self.factors:
            if d < 1 or e < 1:
                raise ValueError(f"bad factor Phi_{d}^{e}")
            if d in seen:
                raise ValueError(f"repeated factor index {d}")
            seen.add(d)
        object.__setattr__(self, "factors", tuple(sorted(self.factors)))

    @classmethod
    def phi(cls, d: int, e: int = 1) -> "CycloModulus":
        return cls(((d, e),))

    @classmethod
    def of(cls, mapping) -> "CycloModulus":
        return cls(tuple(mapping.items()) if isinstance(mapping, dict) else tuple(mapping))

    @property
    def is_empty(self) -> bool:
        return not self.factors

    def raised_at(self, d: int, extra: int = 1) -> "CycloModulus":
        """Return a copy with the exponent at Phi_d increased by extra."""
        items = dict(self.factors)
        items[d] = items.get(d, 0) + extra
        return CycloModulus(tuple(items.items()))

    def poly(self) -> Poly:
        out = ONE
        for d, e in self.factors:
            out = out * cyclotomic(d) ** e
        return out

    def degree(self) -> int:
        return sum(e * euler_phi(d) for d, e in self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        return " * ".join(
            f"Phi_{d}" if e == 1 else f"Phi_{d}^{e}" for d, e in self.factors
        )


def factor_q_integer(n: int) -> CycloModulus:
    """The q-integer [n] = 1 + q + ... + q^(n-1) as a cyclotomic modulus.

    [n] is the product of Phi_d over the divisors d > 1 of n, so [1] gives
    the empty modulus.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return CycloModulus(tuple((d, 1) for d in divisors(n) if d > 1))
