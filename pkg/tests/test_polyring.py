import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from goppacount import _upoly
from goppacount.arith import irreducible_count
from goppacount.errors import CapacityError
from goppacount.gf2 import embedding, field_new
from goppacount.polyring import (
    Poly,
    divides_x2r_x,
    frobenius_on_poly,
    irreducible_table,
    is_irreducible,
    iter_irreducible,
    monic_normalize,
    poly_gcd,
    poly_xgcd,
    powmod_x,
    table_keys,
)

F2 = field_new(1)
F32 = field_new(5)


def polys(ctx, max_deg=6):
    return st.lists(st.integers(0, ctx.order - 1), min_size=0, max_size=max_deg + 1).map(
        lambda c: Poly(ctx, tuple(c))
    )


def test_key_and_text_roundtrip():
    f = Poly(F32, (3, 0, 7, 1))
    assert Poly.from_key(F32, f.key) == f
    assert Poly.parse(F32, f.text) == f
    assert f.key == 3 + 7 * 32**2 + 32**3
    assert Poly(F32, (1, 2, 0, 0)).degree == 1


@given(polys(F32), polys(F32))
def test_ring_laws(f, g):
    q, r = divmod(f, g) if not g.is_zero() else (None, None)
    if q is not None:
        assert q * g + r == f
        assert r.is_zero() or r.degree < g.degree
    assert (f + g) + g == f
    assert f * g == g * f


def test_monic_normalize_examples():
    f = Poly(F32, (5, 9, 1))
    assert monic_normalize(f) == f
    assert monic_normalize(7 * f) == f
    g = Poly(F32, (3, 11, 6))
    m = monic_normalize(g)
    assert m.is_monic()
    big = field_new(10)
    e = embedding(F32, big)
    rho = _upoly.split_root(big, [e(c) for c in m.coeffs])
    assert _upoly.evaluate(big, [e(c) for c in g.coeffs], rho) == 0


def test_gcd_examples():
    f = Poly.from_binary(F2, 0b111)
    assert poly_gcd(f, Poly.from_binary(F2, 0b1001)) == f
    g = Poly(F32, (4, 3, 1))
    assert poly_gcd(7 * g, Poly(F32, ())) == g
    assert poly_gcd(g, g * Poly(F32, (9, 1))) == g


@given(polys(F32, 5), polys(F32, 5))
def test_xgcd_bezout(f, g):
    if f.is_zero() and g.is_zero():
        return
    d, s, t = poly_xgcd(f, g)
    assert s * f + t * g == d
    assert d.is_monic()
    assert (f % d).is_zero() and (g % d).is_zero()


def test_powmod_x():
    f = Poly.from_binary(F2, 0b111)
    assert powmod_x(f, 0) == Poly.x(F2)
    assert powmod_x(f, 2) == Poly.x(F2)
    for fb in [0b1011, 0b10011, 0b100101]:
        g = Poly.from_binary(F2, fb)
        assert powmod_x(g, g.degree) == Poly.x(F2)


def test_irreducibility_examples():
    assert is_irreducible(Poly.from_binary(F2, 0b111))
    assert not is_irreducible(Poly.from_binary(F2, 0b101))
    assert [f.to_binary() for f in iter_irreducible(F2, 3)] == [0b1011, 0b1101]
    assert len(list(iter_irreducible(F2, 6))) == 9


@pytest.mark.parametrize("m,r", [(1, 8), (2, 5), (3, 4), (4, 3), (2, 6)])
def test_sieve_matches_scalar_iterator(m, r):
    ctx = field_new(m)
    table = irreducible_table(ctx, r)
    keys = table_keys(ctx, table)
    assert keys.tolist() == [f.key for f in iter_irreducible(ctx, r)]
    assert len(keys) == irreducible_count(ctx.order, r)


def test_cubic_count_over_gf32():
    table = irreducible_table(F32, 3)
    assert table.shape == (10912, 4)
    rng = random.Random(3)
    keys = set(table_keys(F32, table).tolist())
    for _ in range(300):
        f = Poly(F32, (rng.randrange(32), rng.randrange(32), rng.randrange(32), 1))
        assert is_irreducible(f) == (f.key in keys)


def test_sieve_capacity():
    with pytest.raises(CapacityError):
        irreducible_table(F32, 4, mem_cap=1 << 20)


def test_divides_x2r_x():
    assert divides_x2r_x(Poly.from_binary(F32, 0b1011), 3)
    f = next(f for f in iter_irreducible(F32, 3) if f.to_binary() is None)
    assert not divides_x2r_x(f, 3)
    table = irreducible_table(F32, 4)
    count = sum(divides_x2r_x(Poly(F32, tuple(int(c) for c in row)), 4) for row in table[::1])
    assert count == 3


@given(polys(F32, 5), st.integers(0, 12))
def test_frobenius_on_poly(f, i):
    assert frobenius_on_poly(f, 0) == f
    assert frobenius_on_poly(f, 5) == f
    assert frobenius_on_poly(frobenius_on_poly(f, i), 5 - i % 5) == f


def test_iterator_range_split():
    ctx = field_new(2)
    whole = [f.key for f in iter_irreducible(ctx, 4)]
    parts = []
    from goppacount.polyring import IrreducibleIter

    for lo in range(0, 256, 64):
        parts.extend(f.key for f in IrreducibleIter(ctx, 4, lo, lo + 64))
    assert parts == whole
    assert np.all(np.diff(whole) > 0)
