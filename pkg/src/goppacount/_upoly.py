"""Dense univariate polynomial routines over a binary field context.

Polynomials are little-endian lists of canonical element integers with no
trailing zeros; ``[]`` is the zero polynomial. ``ctx`` is anything exposing
``mul``, ``inv`` and ``sqr`` on ints (a :class:`~goppacount.gf2.FieldCtx`).
These functions sit below both the field embeddings and :mod:`polyring`.
"""

from __future__ import annotations

from typing import Sequence


def trim(a: list[int]) -> list[int]:
    while a and not a[-1]:
        a.pop()
    return a


def add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] ^= c
    return trim(out)


def scale(ctx, a: Sequence[int], c: int) -> list[int]:
    if not c:
        return []
    mul = ctx.mul
    return [mul(x, c) for x in a]


def mul(ctx, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    fmul = ctx.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] ^= fmul(x, y)
    return trim(out)


def divmod_(ctx, a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], trim(rem)
    fmul = ctx.mul
    lead_inv = ctx.inv(b[-1])
    quo = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if not c:
            continue
        c = fmul(c, lead_inv)
        quo[k - db] = c
        off = k - db
        for j in range(db + 1):
            if b[j]:
                rem[off + j] ^= fmul(c, b[j])
    return trim(quo), trim(rem[:db])


def mod(ctx, a: Sequence[int], b: Sequence[int]) -> list[int]:
    return divmod_(ctx, a, b)[1]


def monic(ctx, a: Sequence[int]) -> list[int]:
    if not a:
        raise ValueError("the zero polynomial has no monic normalization")
    if a[-1] == 1:
        return list(a)
    return scale(ctx, a, ctx.inv(a[-1]))


def gcd(ctx, a: Sequence[int], b: Sequence[int]) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, mod(ctx, a, b)
    return monic(ctx, a) if a else []


def xgcd(ctx, a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int], list[int]]:
    """Return (g, s, t) with s*a + t*b = g and g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_(ctx, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, add(s0, mul(ctx, q, s1))
        t0, t1 = t1, add(t0, mul(ctx, q, t1))
    if not r0:
        return [], [], []
    c = ctx.inv(r0[-1])
    return scale(ctx, r0, c), scale(ctx, s0, c), scale(ctx, t0, c)


def sqr(ctx, a: Sequence[int]) -> list[int]:
    """Square in characteristic 2: coefficients square into even slots."""
    if not a:
        return []
    out = [0] * (2 * len(a) - 1)
    fsqr = ctx.sqr
    for i, x in enumerate(a):
        if x:
            out[2 * i] = fsqr(x)
    return out


def mulmod(ctx, a, b, m) -> list[int]:
    return mod(ctx, mul(ctx, a, b), m)


def sqrmod(ctx, a, m) -> list[int]:
    return mod(ctx, sqr(ctx, a), m)


def powmod(ctx, a: Sequence[int], e: int, m: Sequence[int]) -> list[int]:
    result: list[int] = mod(ctx, [1], m)
    base = mod(ctx, a, m)
    while e:
        if e & 1:
            result = mulmod(ctx, result, base, m)
        e >>= 1
        if e:
            base = sqrmod(ctx, base, m)
    return result


def x_pow_2k(ctx, m: Sequence[int], k: int) -> list[int]:
    """x^(2^k) mod m, by k successive squarings."""
    y = mod(ctx, [0, 1], m)
    for _ in range(k):
        y = sqrmod(ctx, y, m)
    return y


def evaluate(ctx, a: Sequence[int], x: int) -> int:
    acc = 0
    fmul = ctx.mul
    for c in reversed(a):
        acc = fmul(acc, x) ^ c
    return acc


def compose_frobenius(ctx, a: Sequence[int], i: int) -> list[int]:
    """Apply the field automorphism c -> c^(2^i) to every coefficient."""
    return [ctx.frobenius(c, i) for c in a]


def split_root(ctx, f: Sequence[int]) -> int:
    """One root of ``f``, assumed squarefree and split into linear factors.

    Trace splitting: for delta = 1, 2, 3, ... the trace polynomial
    sum_i (delta x)^(2^i) mod f takes values in GF(2) at every root, so its gcd
    with f is a proper factor for roughly half of the deltas. The loop is
    deterministic because deltas are tried in canonical order.
    """
    f = monic(ctx, trim(list(f)))
    if len(f) < 2:
        raise ValueError("constant polynomial has no roots")
    m = ctx.m
    while len(f) > 2:
        split = None
        for delta in range(1, ctx.order):
            y = mod(ctx, [0, delta], f)
            acc = list(y)
            for _ in range(m - 1):
                y = sqrmod(ctx, y, f)
                acc = add(acc, y)
            g = gcd(ctx, acc, f)
            if 1 < len(g) < len(f):
                split = g
                break
        if split is None:
            raise ValueError("polynomial does not split into distinct linear factors")
        other = divmod_(ctx, f, split)[0]
        f = split if len(split) <= len(other) else monic(ctx, other)
    return f[0]
