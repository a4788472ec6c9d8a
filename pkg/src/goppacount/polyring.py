"""Polynomials over GF(2^n) and the set of monic irreducibles of a degree.

Coefficients are canonical field ints, lowest degree first. The ordering key
of a polynomial is the integer ``sum(c_i * q**i)``, so sorting by key sorts by
the coefficient tuple read from the top degree down.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _upoly
from .arith import factorize, irreducible_count
from .errors import CapacityError
from .gf2 import ContextMismatchError, FieldCtx, FieldElem, field_new


@dataclass(frozen=True, eq=False)
class Poly:
    ctx: FieldCtx
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and not c[-1]:
            c.pop()
        for v in c:
            if not 0 <= v < self.ctx.order:
                raise ValueError(f"coefficient {v} is not in GF(2^{self.ctx.m})")
        object.__setattr__(self, "coeffs", tuple(c))

    # -- constructors ---------------------------------------------------------

    @classmethod
    def x(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, (0, 1))

    @classmethod
    def const(cls, ctx: FieldCtx, c: int) -> "Poly":
        return cls(ctx, (c,))

    @classmethod
    def from_key(cls, ctx: FieldCtx, key: int) -> "Poly":
        n = ctx.m
        mask = ctx.order - 1
        out = []
        while key:
            out.append(key & mask)
            key >>= n
        return cls(ctx, tuple(out))

    @classmethod
    def from_binary(cls, ctx: FieldCtx, f: int) -> "Poly":
        """Lift a binary polynomial (int bit encoding) into ctx[x]."""
        return cls(ctx, tuple(f >> i & 1 for i in range(f.bit_length())))

    @classmethod
    def parse(cls, ctx: FieldCtx, text: str) -> "Poly":
        parts = [p.strip() for p in text.split(",") if p.strip()]
        return cls(ctx, tuple(int(p, 0) for p in parts))

    # -- basic properties -------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def key(self) -> int:
        n = self.ctx.m
        k = 0
        for c in reversed(self.coeffs):
            k = (k << n) | c
        return k

    @property
    def text(self) -> str:
        return ",".join(str(c) for c in self.coeffs) or "0"

    def to_binary(self) -> int | None:
        """The int bit encoding if every coefficient is 0 or 1, else None."""
        out = 0
        for i, c in enumerate(self.coeffs):
            if c > 1:
                return None
            out |= c << i
        return out

    def elems(self) -> tuple[FieldElem, ...]:
        return tuple(FieldElem(self.ctx, c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"Poly[GF(2^{self.ctx.m})]({self.text})"

    # -- arithmetic -------------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ContextMismatchError("polynomials over different fields")

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ctx.m, self.ctx.modulus, self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly(self.ctx, tuple(_upoly.add(self.coeffs, other.coeffs)))

    __sub__ = __add__

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly(self.ctx, tuple(_upoly.scale(self.ctx, self.coeffs, other)))
        self._check(other)
        return Poly(self.ctx, tuple(_upoly.mul(self.ctx, self.coeffs, other.coeffs)))

    def __rmul__(self, c: int) -> "Poly":
        return Poly(self.ctx, tuple(_upoly.scale(self.ctx, self.coeffs, c)))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        q, r = _upoly.divmod_(self.ctx, self.coeffs, other.coeffs)
        return Poly(self.ctx, tuple(q)), Poly(self.ctx, tuple(r))

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "Poly":
        out = Poly.const(self.ctx, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __call__(self, x: int) -> int:
        return _upoly.evaluate(self.ctx, self.coeffs, x)

    def divides(self, other: "Poly") -> bool:
        return (other % self).is_zero()


def monic_normalize(f: Poly) -> Poly:
    if f.is_zero():
        raise ValueError("cannot normalize the zero polynomial")
    return Poly(f.ctx, tuple(_upoly.monic(f.ctx, f.coeffs)))


def poly_gcd(f: Poly, g: Poly) -> Poly:
    f._check(g)
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    return Poly(f.ctx, tuple(_upoly.gcd(f.ctx, f.coeffs, g.coeffs)))


def poly_xgcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """(d, s, t) with s*f + t*g = d = gcd(f, g), d monic."""
    f._check(g)
    d, s, t = _upoly.xgcd(f.ctx, f.coeffs, g.coeffs)
    return Poly(f.ctx, tuple(d)), Poly(f.ctx, tuple(s)), Poly(f.ctx, tuple(t))


def powmod_x(f: Poly, e_log2: int) -> Poly:
    """x^(2^e_log2) mod f."""
    if f.degree < 1:
        raise ValueError("modulus must have degree at least 1")
    return Poly(f.ctx, tuple(_upoly.x_pow_2k(f.ctx, f.coeffs, e_log2)))


def _x_pow_q_chain(f: Sequence[int], ctx: FieldCtx, steps: Iterable[int]) -> dict[int, list[int]]:
    """x^(q^k) mod f for each requested k, sharing the squaring chain."""
    wanted = sorted(set(steps))
    out = {}
    y = _upoly.mod(ctx, [0, 1], f)
    done = 0
    for k in wanted:
        for _ in range((k - done) * ctx.m):
            y = _upoly.sqrmod(ctx, y, f)
        done = k
        out[k] = y
    return out


def is_irreducible(f: Poly) -> bool:
    """Rabin's test over ctx = GF(q)."""
    r = f.degree
    if r < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    if r == 1:
        return True
    if not f.coeffs[0]:
        return False
    ctx = f.ctx
    fc = _upoly.monic(ctx, f.coeffs)
    primes = factorize(r).primes
    chain = _x_pow_q_chain(fc, ctx, [r // p for p in primes] + [r])
    if chain[r] != [0, 1]:
        return False
    for p in primes:
        h = _upoly.add(chain[r // p], [0, 1])
        if len(_upoly.gcd(ctx, fc, h)) != 1:
            return False
    return True


class IrreducibleIter:
    """Stream the monic irreducibles of degree r over ctx in ascending key order.

    ``start`` and ``stop`` bound the key of the lower coefficients
    ``sum(c_i q^i, i < r)``, which lets callers split the range across workers.
    """

    def __init__(self, ctx: FieldCtx, r: int, start: int = 0, stop: int | None = None):
        if r < 1:
            raise ValueError("degree must be at least 1")
        self.ctx = ctx
        self.r = r
        span = ctx.order**r
        self.start = start
        self.stop = span if stop is None else min(stop, span)
        self.cursor = start

    def __iter__(self) -> Iterator[Poly]:
        base = self.ctx.order**self.r
        while self.cursor < self.stop:
            low = self.cursor
            self.cursor += 1
            f = Poly.from_key(self.ctx, base + low)
            if self.r == 1 or is_irreducible(f):
                yield f

    def __len__(self) -> int:
        if self.start == 0 and self.stop == self.ctx.order**self.r:
            return irreducible_count(self.ctx.order, self.r)
        raise TypeError("length is only known for the full range")


def iter_irreducible(ctx: FieldCtx, r: int) -> IrreducibleIter:
    return IrreducibleIter(ctx, r)


def divides_x2r_x(f: Poly, r: int) -> bool:
    """Whether f divides x^(2^r) + x, i.e. its roots lie in GF(2^r)."""
    if r < 3:
        raise ValueError("the divisibility test is stated for r >= 3")
    if f.degree != r or not f.is_monic():
        raise ValueError("expected a monic polynomial of degree r")
    return _upoly.x_pow_2k(f.ctx, f.coeffs, r) == [0, 1]


def frobenius_on_poly(f: Poly, i: int) -> Poly:
    return Poly(f.ctx, tuple(_upoly.compose_frobenius(f.ctx, f.coeffs, i)))


# ---------------------------------------------------------------------------
# Materialized tables (numpy) for brute-force work on small fields


DEFAULT_MEM_CAP = 2 << 30


def _coeff_dtype(ctx: FieldCtx):
    return np.uint8 if ctx.m <= 8 else np.uint16


def monic_table(ctx: FieldCtx, deg: int) -> np.ndarray:
    """All monic polynomials of a degree, shape (q^deg, deg+1), ascending key."""
    q = ctx.order
    idx = np.arange(q**deg, dtype=np.int64)
    out = np.empty((q**deg, deg + 1), dtype=_coeff_dtype(ctx))
    for j in range(deg):
        out[:, j] = (idx >> (ctx.m * j)) & (q - 1)
    out[:, deg] = 1
    return out


def table_keys(ctx: FieldCtx, table: np.ndarray) -> np.ndarray:
    keys = np.zeros(table.shape[0], dtype=np.int64)
    for j in range(table.shape[1] - 1, -1, -1):
        keys = (keys << ctx.m) | table[:, j].astype(np.int64)
    return keys


def irreducible_table(ctx: FieldCtx, r: int, mem_cap: int = DEFAULT_MEM_CAP) -> np.ndarray:
    """I_r as a coefficient array of shape (|I_r|, r+1), ascending key.

    Built by sieving: every product g*h with g irreducible of degree k <= r/2
    and h monic of degree r-k is marked reducible. Raises CapacityError when
    the sieve bitmap plus the result would exceed ``mem_cap`` bytes.
    """
    q = ctx.order
    count = irreducible_count(q, r)
    itemsize = np.dtype(_coeff_dtype(ctx)).itemsize
    needed = q**r + count * (r + 1) * itemsize + count * 8
    if needed > mem_cap:
        raise CapacityError(f"memory for I_{r} over GF({q})", needed, mem_cap)
    if r == 1:
        return monic_table(ctx, 1)
    mt = ctx.mul_table()
    reducible = np.zeros(q**r, dtype=bool)
    for k in range(1, r // 2 + 1):
        gs = irreducible_table(ctx, k, mem_cap)
        hs = monic_table(ctx, r - k).astype(np.int64)
        hlow = hs[:, : r - k]
        for g in gs.astype(np.int64):
            # key of g*h without its leading q^r term
            key = np.zeros(hs.shape[0], dtype=np.int64)
            for j in range(r):
                col = np.zeros(hs.shape[0], dtype=np.int64)
                for i in range(max(0, j - (r - k)), min(k, j) + 1):
                    hi = j - i
                    if g[i] == 0:
                        continue
                    if hi == r - k:
                        col ^= g[i]
                    else:
                        col ^= mt[g[i]][hlow[:, hi]]
                key |= col << (ctx.m * j)
            reducible[key] = True
    low = np.flatnonzero(~reducible)
    if low.size != count:
        raise ArithmeticError(f"sieve found {low.size} irreducibles, expected {count}")
    out = np.empty((count, r + 1), dtype=_coeff_dtype(ctx))
    for j in range(r):
        out[:, j] = (low >> (ctx.m * j)) & (q - 1)
    out[:, r] = 1
    return out


def table_row(ctx: FieldCtx, table: np.ndarray, i: int) -> Poly:
    return Poly(ctx, tuple(int(c) for c in table[i]))


__all__ = [
    "IrreducibleIter",
    "Poly",
    "divides_x2r_x",
    "field_new",
    "frobenius_on_poly",
    "irreducible_table",
    "is_irreducible",
    "iter_irreducible",
    "monic_normalize",
    "monic_table",
    "poly_gcd",
    "poly_xgcd",
    "powmod_x",
    "table_keys",
]
