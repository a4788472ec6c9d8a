import pytest
from hypothesis import given
from hypothesis import strategies as st

from goppacount.gf2 import (
    ContextMismatchError,
    ReducibleModulusError,
    default_modulus,
    embed,
    embedding,
    field_new,
    gf2x_is_irreducible,
    gf2x_irreducibles,
    gf2x_mul,
    primitive_element,
)


def test_default_moduli():
    assert field_new(1).modulus == 0b10
    assert field_new(3).modulus == 0b1011
    assert field_new(5).modulus == 0b100101
    assert default_modulus(10) == (1 << 10) | 0b1001


def test_explicit_modulus_and_rejection():
    assert field_new(5, 0b100101).m == 5
    with pytest.raises(ReducibleModulusError):
        field_new(4, 0b10101)  # (x^2+x+1)^2


def test_binary_irreducible_counts():
    assert list(gf2x_irreducibles(3)) == [0b1011, 0b1101]
    assert len(list(gf2x_irreducibles(6))) == 9
    assert not gf2x_is_irreducible(0b101)


fields = st.sampled_from([1, 2, 3, 4, 5, 8, 10, 13, 17])


@given(fields, st.data())
def test_field_axioms(m, data):
    F = field_new(m)
    a, b, c = (data.draw(st.integers(0, F.order - 1)) for _ in range(3))
    assert F.add(a, a) == 0
    assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
    assert F.mul(a, b ^ c) == F.mul(a, b) ^ F.mul(a, c)
    assert F.sqr(a) == F.mul(a, a)
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.pow(a, F.order - 1) == 1
        assert F.div(F.mul(a, b), a) == b


@given(fields, st.data())
def test_frobenius(m, data):
    F = field_new(m)
    a = data.draw(st.integers(0, F.order - 1))
    assert F.frobenius(a, 0) == a
    assert F.frobenius(a, m) == a
    assert F.frobenius(a, 1) == F.sqr(a)
    assert F.trace(a) in (0, 1)


def test_element_orders():
    F4 = field_new(2)
    assert F4.element_order(1) == 1
    assert F4.element_order(F4.primitive_element()) == 3
    assert field_new(1).primitive_element() == 1
    F10 = field_new(10)
    xi = F10.primitive_element()
    assert F10.element_order(xi) == 1023
    assert F10.element_order(F10.pow(xi, 33)) == 31
    assert primitive_element(F10).order() == 1023


def test_table_free_field_matches_carryless():
    F = field_new(20)
    a, b = 0x9ABCD, 0x12345
    prod = gf2x_mul(a, b)
    # reduce by hand
    mod = F.modulus
    while prod.bit_length() > 20:
        prod ^= mod << (prod.bit_length() - 21)
    assert F.mul(a, b) == prod


def test_field_elem_operators():
    F = field_new(5)
    a, b = F(7), F(19)
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert a ** 31 == F.one
    assert a.frobenius(5) == a
    with pytest.raises(ContextMismatchError):
        a + field_new(4)(3)


@pytest.mark.parametrize("m,k", [(1, 5), (5, 10), (5, 15), (3, 9), (4, 12), (5, 25)])
def test_embedding_is_a_field_homomorphism(m, k):
    src, dst = field_new(m), field_new(k)
    e = embedding(src, dst)
    assert e(0) == 0 and e(1) == 1
    images = {e(a) for a in range(src.order)}
    assert len(images) == src.order
    for a in range(0, src.order, max(1, src.order // 8)):
        for b in range(0, src.order, max(1, src.order // 8)):
            assert e(src.mul(a, b)) == dst.mul(e(a), e(b))
            assert e(a ^ b) == e(a) ^ e(b)
    for a in range(src.order):
        assert e.preimage(e(a)) == a
    # the generator image is a root of the source modulus
    g = e.image_of_generator
    acc = 0
    for i in range(src.m, -1, -1):
        acc = dst.mul(acc, g) ^ (src.modulus >> i & 1)
    assert acc == 0


def test_embedding_preimage_outside_subfield():
    e = embedding(field_new(3), field_new(6))
    outside = [v for v in range(64) if not e.contains(v)]
    assert len(outside) == 56
    assert e.preimage(outside[0]) is None
    with pytest.raises(ValueError):
        embedding(field_new(3), field_new(5))


def test_embed_elem():
    e = embedding(field_new(5), field_new(10))
    assert embed(field_new(5)(0), e).value == 0
    assert embed(field_new(5)(1), e).value == 1
