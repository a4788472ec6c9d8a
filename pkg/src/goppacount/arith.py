"""Integer number theory used by the counting formulas.

Everything here works on Python ints, so results are exact at any size.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .errors import ConsistencyError


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FactoredInt:
    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factorization {self.factors}")
            last = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors multiply to {prod}, not {self.value}")

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]


@lru_cache(maxsize=4096)
def factorize(n: int) -> FactoredInt:
    """Trial division, stopping early once the cofactor is prime."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out: list[tuple[int, int]] = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
            if is_prime(m):
                break
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return FactoredInt(n, tuple(out))


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError("moebius needs n >= 1")
    f = factorize(n).factors
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    result = n
    for p, _ in factorize(n).factors:
        result -= result // p
    return result


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError("divisors needs n >= 1")
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def exact_div(num: int, den: int, what: str = "quotient") -> int:
    """num / den, raising ConsistencyError instead of rounding."""
    q, rem = divmod(num, den)
    if rem:
        raise ConsistencyError(f"{what}: {num} is not divisible by {den}")
    return q


def irreducible_count(q: int, r: int) -> int:
    """Number of monic irreducible polynomials of degree r over GF(q)."""
    if q < 2 or r < 1:
        raise ValueError("irreducible_count needs q >= 2, r >= 1")
    total = sum(moebius(d) * q ** (r // d) for d in divisors(r))
    return exact_div(total, r, f"irreducible_count({q},{r})")


def weighted_moebius_inversion(
    chi: Callable[[int], int], F: Callable[[int], int], n: int
) -> int:
    """Recover G(n) from F(m) = sum over d | m of chi(d) G(m/d).

    ``chi`` must be completely multiplicative; then the inverse kernel is
    chi(d) mu(d).
    """
    return sum(chi(d) * moebius(d) * F(n // d) for d in divisors(n))


def is_prime_power(q: int) -> bool:
    return q >= 2 and len(factorize(q).factors) == 1


__all__ = [
    "ConsistencyError",
    "FactoredInt",
    "divisors",
    "euler_phi",
    "exact_div",
    "factorize",
    "irreducible_count",
    "is_prime",
    "is_prime_power",
    "moebius",
    "weighted_moebius_inversion",
]
