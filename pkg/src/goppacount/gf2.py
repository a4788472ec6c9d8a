"""Binary extension fields GF(2^m).

Elements are plain ints: bit i holds the coefficient of x^i in the
polynomial basis. :class:`FieldCtx` does arithmetic on those ints directly;
:class:`FieldElem` is a thin operator-overloading wrapper for readable code
and tests. Binary polynomials (elements of GF(2)[x]) use the same int
encoding and are handled by the ``gf2x_*`` helpers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

import numpy as np

from . import _upoly
from .arith import factorize

# ---------------------------------------------------------------------------
# GF(2)[x] on ints


def gf2x_deg(a: int) -> int:
    return a.bit_length() - 1


def gf2x_mul(a: int, b: int) -> int:
    if a.bit_length() < b.bit_length():
        a, b = b, a
    out = 0
    while b:
        low = b & -b
        out ^= a << (low.bit_length() - 1)
        b ^= low
    return out


def gf2x_sqr(a: int) -> int:
    out = 0
    i = 0
    while a:
        if a & 1:
            out |= 1 << (2 * i)
        a >>= 1
        i += 1
    return out


def gf2x_divmod(a: int, b: int) -> tuple[int, int]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def gf2x_mod(a: int, b: int) -> int:
    db = b.bit_length()
    if not db:
        raise ZeroDivisionError("reduction by the zero polynomial")
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def gf2x_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, gf2x_mod(a, b)
    return a


def gf2x_mulmod(a: int, b: int, m: int) -> int:
    return gf2x_mod(gf2x_mul(a, b), m)


def gf2x_powmod(a: int, e: int, m: int) -> int:
    result = gf2x_mod(1, m)
    a = gf2x_mod(a, m)
    while e:
        if e & 1:
            result = gf2x_mulmod(result, a, m)
        e >>= 1
        if e:
            a = gf2x_mod(gf2x_sqr(a), m)
    return result


def gf2x_x_pow_2k(m: int, k: int) -> int:
    """x^(2^k) mod m over GF(2)."""
    y = gf2x_mod(2, m)
    for _ in range(k):
        y = gf2x_mod(gf2x_sqr(y), m)
    return y


def gf2x_is_irreducible(f: int) -> bool:
    """Rabin test over GF(2)."""
    m = gf2x_deg(f)
    if m < 1:
        return False
    if m == 1:
        return True
    if gf2x_x_pow_2k(f, m) != 2:
        return False
    for p in factorize(m).primes:
        h = gf2x_x_pow_2k(f, m // p) ^ 2
        if gf2x_gcd(f, h) != 1:
            return False
    return True


def gf2x_irreducibles(m: int) -> Iterator[int]:
    """Monic irreducible binary polynomials of degree m, ascending."""
    for f in range(1 << m, 1 << (m + 1)):
        if gf2x_is_irreducible(f):
            yield f


def gf2x_smallest_factor(f: int) -> int:
    """A nontrivial factor of a reducible f (f itself if irreducible)."""
    m = gf2x_deg(f)
    for d in range(1, m // 2 + 1):
        g = gf2x_gcd(f, gf2x_x_pow_2k(f, d) ^ 2)
        if g == 1:
            continue
        if g != f:
            return g
        for cand in range(1 << d, 1 << (d + 1)):
            if gf2x_mod(f, cand) == 0:
                return cand
    return f


def gf2x_format(f: int) -> str:
    terms = []
    for i in range(f.bit_length() - 1, -1, -1):
        if f >> i & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return " + ".join(terms) or "0"


# ---------------------------------------------------------------------------
# Fields


class ReducibleModulusError(ValueError):
    def __init__(self, modulus: int, factor: int):
        self.modulus = modulus
        self.factor = factor
        super().__init__(
            f"modulus {gf2x_format(modulus)} is reducible: divisible by {gf2x_format(factor)}"
        )


class ContextMismatchError(ValueError):
    pass


# Fields up to this degree get log/antilog tables.
TABLE_MAX_M = 16


class FieldCtx:
    """GF(2^m) with a fixed irreducible modulus.

    Fields up to degree ``TABLE_MAX_M`` carry log/antilog tables; larger ones
    fall back to carry-less multiplication. Instances are immutable after
    construction and compare equal when degree and modulus agree.
    """

    __slots__ = ("m", "modulus", "order", "_exp", "_log", "_prim", "_np_cache", "__weakref__")

    def __init__(self, m: int, modulus: int):
        if m < 1:
            raise ValueError("field degree must be at least 1")
        if gf2x_deg(modulus) != m:
            raise ValueError(f"modulus must have degree {m}")
        if not gf2x_is_irreducible(modulus):
            raise ReducibleModulusError(modulus, gf2x_smallest_factor(modulus))
        self.m = m
        self.modulus = modulus
        self.order = 1 << m
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._prim: int | None = None
        self._np_cache: dict = {}
        if m <= TABLE_MAX_M:
            self._build_tables()

    def __repr__(self) -> str:
        return f"FieldCtx(m={self.m}, modulus={gf2x_format(self.modulus)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and (self.m, self.modulus) == (other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.m, self.modulus))

    # -- raw int arithmetic -------------------------------------------------

    def _clmul_mod(self, a: int, b: int) -> int:
        return gf2x_mod(gf2x_mul(a, b), self.modulus)

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self._log is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._clmul_mod(a, b)

    def sqr(self, a: int) -> int:
        if not a:
            return 0
        if self._log is not None:
            return self._exp[2 * self._log[a]]
        return gf2x_mod(gf2x_sqr(a), self.modulus)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if not a:
            return 1 if e == 0 else 0
        if self._log is not None:
            return self._exp[self._log[a] * e % (self.order - 1)]
        result = 1
        while e:
            if e & 1:
                result = self._clmul_mod(result, a)
            e >>= 1
            if e:
                a = gf2x_mod(gf2x_sqr(a), self.modulus)
        return result

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of zero in GF(2^m)")
        if self._log is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frobenius(self, a: int, i: int = 1) -> int:
        """a^(2^i), with i reduced mod m."""
        i %= self.m
        for _ in range(i):
            a = self.sqr(a)
        return a

    def trace(self, a: int) -> int:
        acc = a
        y = a
        for _ in range(self.m - 1):
            y = self.sqr(y)
            acc ^= y
        return acc

    def element_order(self, a: int, multiple: int | None = None) -> int:
        """Multiplicative order, by stripping primes off 2^m - 1.

        ``multiple`` may name any known multiple of the order (for example
        q + 1 for a norm-one element) to skip the big factorization.
        """
        if not a:
            raise ValueError("zero has no multiplicative order")
        k = multiple if multiple is not None else self.order - 1
        if self.pow(a, k) != 1:
            raise ValueError(f"{k} is not a multiple of the order of {a}")
        for p, _ in factorize(k).factors:
            while k % p == 0 and self.pow(a, k // p) == 1:
                k //= p
        return k

    def is_primitive(self, a: int) -> bool:
        if not a:
            return False
        n = self.order - 1
        return all(self.pow(a, n // p) != 1 for p in factorize(n).primes) if n > 1 else True

    def primitive_element(self) -> int:
        """Least element (by canonical int) of order 2^m - 1."""
        if self._prim is None:
            self._prim = next(a for a in range(1, self.order) if self.is_primitive(a))
        return self._prim

    def _build_tables(self) -> None:
        g = self.primitive_element()
        n = self.order - 1
        exp = [0] * (2 * n + 1)
        log = [0] * self.order
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._clmul_mod(x, g)
        for i in range(n, 2 * n + 1):
            exp[i] = exp[i - n]
        self._exp, self._log = exp, log

    # -- vectorized helpers ---------------------------------------------------

    def np_tables(self) -> tuple[np.ndarray, np.ndarray]:
        """(exp, log) as int64 arrays; log[0] is a sentinel pointing at a zero slot."""
        if "explog" not in self._np_cache:
            if self._log is None:
                raise ValueError("vectorized tables are only built for small fields")
            n = self.order - 1
            exp = np.zeros(4 * n + 3, dtype=np.int64)
            exp[: 2 * n + 1] = self._exp
            log = np.array(self._log, dtype=np.int64)
            log[0] = 2 * n + 1  # any sum involving it lands in the zero tail
            self._np_cache["explog"] = (exp, log)
        return self._np_cache["explog"]

    def mul_table(self) -> np.ndarray:
        """Full q x q multiplication table (small fields only)."""
        if "mul" not in self._np_cache:
            if self.m > 12:
                raise ValueError("multiplication table too large")
            exp, log = self.np_tables()
            idx = np.arange(self.order)
            t = exp[log[idx][:, None] + log[idx][None, :]]
            dtype = np.uint8 if self.m <= 8 else np.uint16
            self._np_cache["mul"] = t.astype(dtype)
        return self._np_cache["mul"]

    def inv_table(self) -> np.ndarray:
        if "inv" not in self._np_cache:
            t = np.zeros(self.order, dtype=np.int64)
            for a in range(1, self.order):
                t[a] = self.inv(a)
            self._np_cache["inv"] = t
        return self._np_cache["inv"]

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        exp, log = self.np_tables()
        return exp[log[a] + log[b]]

    # -- elements ---------------------------------------------------------------

    def __call__(self, value: int) -> "FieldElem":
        return FieldElem(self, value)

    def elements(self) -> range:
        return range(self.order)

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)


def default_modulus(m: int) -> int:
    """Least irreducible binary polynomial of degree m under the int encoding."""
    return next(gf2x_irreducibles(m))


@lru_cache(maxsize=None)
def field_new(m: int, modulus: int | None = None) -> FieldCtx:
    if modulus is None:
        modulus = default_modulus(m)
    return FieldCtx(m, modulus)


@dataclass(frozen=True, eq=False)
class FieldElem:
    ctx: FieldCtx
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.ctx.order:
            raise ValueError(f"{self.value} is not an element of GF(2^{self.ctx.m})")

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.ctx != self.ctx:
                raise ContextMismatchError(f"{self.ctx!r} vs {other.ctx!r}")
            return other.value
        if isinstance(other, int) and other in (0, 1):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._other(other)
        return NotImplemented if v is NotImplemented else FieldElem(self.ctx, self.value ^ v)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        v = self._other(other)
        return NotImplemented if v is NotImplemented else FieldElem(self.ctx, self.ctx.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._other(other)
        return NotImplemented if v is NotImplemented else FieldElem(self.ctx, self.ctx.div(self.value, v))

    def __rtruediv__(self, other):
        v = self._other(other)
        return NotImplemented if v is NotImplemented else FieldElem(self.ctx, self.ctx.div(v, self.value))

    def __pow__(self, e: int):
        return FieldElem(self.ctx, self.ctx.pow(self.value, e))

    def inv(self) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.inv(self.value))

    def frobenius(self, i: int = 1) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.frobenius(self.value, i))

    def order(self) -> int:
        return self.ctx.element_order(self.value)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElem):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx.m, self.ctx.modulus, self.value))

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return bool(self.value)

    def __repr__(self) -> str:
        return f"GF(2^{self.ctx.m})({self.value})"

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(self.value >> i & 1 for i in range(self.ctx.m))


def frobenius(a: FieldElem, i: int) -> FieldElem:
    return a.frobenius(i)


def element_order(a: FieldElem) -> int:
    return a.order()


def primitive_element(ctx: FieldCtx) -> FieldElem:
    return FieldElem(ctx, ctx.primitive_element())


# ---------------------------------------------------------------------------
# Embeddings


@dataclass(frozen=True)
class Embedding:
    """Field homomorphism src -> dst, fixed by where the src generator goes."""

    src: FieldCtx
    dst: FieldCtx
    image_of_generator: int
    _basis_images: tuple[int, ...] = field(repr=False, compare=False)
    _echelon: tuple[tuple[int, int], ...] = field(repr=False, compare=False)

    def __call__(self, e: int) -> int:
        out = 0
        i = 0
        while e:
            if e & 1:
                out ^= self._basis_images[i]
            e >>= 1
            i += 1
        return out

    def preimage(self, v: int) -> int | None:
        """The src element mapping to v, or None if v is outside the image."""
        combo = 0
        for pivot_vec, pivot_combo in self._echelon:
            top = pivot_vec.bit_length() - 1
            if v >> top & 1:
                v ^= pivot_vec
                combo ^= pivot_combo
        return combo if v == 0 else None

    def contains(self, v: int) -> bool:
        return self.preimage(v) is not None


@lru_cache(maxsize=None)
def embedding(src: FieldCtx, dst: FieldCtx) -> Embedding:
    if dst.m % src.m:
        raise ValueError(f"GF(2^{src.m}) does not embed in GF(2^{dst.m})")
    coeffs = [src.modulus >> i & 1 for i in range(src.m + 1)]
    roots = [_upoly.split_root(dst, coeffs)]
    # Pick the least root of the Frobenius orbit so the choice does not
    # depend on how the splitting went.
    for _ in range(src.m - 1):
        roots.append(dst.sqr(roots[-1]))
    rho = min(roots)
    basis = []
    x = 1
    for _ in range(src.m):
        basis.append(x)
        x = dst.mul(x, rho)
    # Echelon form with pivot = highest set bit, sorted by descending pivot.
    rows: list[tuple[int, int]] = []
    for i, vec in enumerate(basis):
        combo = 1 << i
        for pv, pc in rows:
            if vec >> (pv.bit_length() - 1) & 1:
                vec ^= pv
                combo ^= pc
        if not vec:
            raise ArithmeticError("embedding images are linearly dependent")
        rows.append((vec, combo))
        rows.sort(key=lambda t: -t[0].bit_length())
    return Embedding(src, dst, rho, tuple(basis), tuple(rows))


def embed(e: FieldElem, emb: Embedding) -> FieldElem:
    if e.ctx != emb.src:
        raise ContextMismatchError("element does not belong to the embedding source")
    return FieldElem(emb.dst, emb(e.value))
