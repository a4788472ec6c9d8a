import random
from itertools import islice

import pytest
from hypothesis import given
from hypothesis import strategies as st

from goppacount.gf2 import embedding, field_new
from goppacount.pgl import (
    ProjMat,
    SemiLinear,
    SingularMatrixError,
    act,
    act_circ,
    act_semilinear,
    binary_six,
    closure,
    conjugacy_classes,
    conjugates,
    enumerate_pgl,
    pgl_order,
    standard_generators,
)
from goppacount.polyring import IrreducibleIter, Poly, iter_irreducible
from goppacount.goppa import roots_in_extension

F32 = field_new(5)
CUBIC = Poly.from_binary(F32, 0b1011)
FIRST_CUBICS = list(islice(iter_irreducible(F32, 3), 5))
LATER_CUBIC = next(iter(IrreducibleIter(F32, 3, 20000)))


def mats(ctx):
    return st.tuples(*(st.integers(0, ctx.order - 1) for _ in range(4))).filter(
        lambda t: ctx.mul(t[0], t[3]) != ctx.mul(t[1], t[2])
    ).map(lambda t: ProjMat(ctx, *t))


def test_canonical_form_and_singular():
    A = ProjMat(F32, 3, 5, 7, 8)
    assert A.a == 1
    assert A == ProjMat(F32, *(F32.mul(9, v) for v in (3, 5, 7, 8)))
    with pytest.raises(SingularMatrixError):
        ProjMat(F32, 1, 1, 1, 1)
    assert ProjMat.parse(F32, A.text) == A


@given(mats(F32), mats(F32), mats(F32))
def test_group_laws(A, B, C):
    E = ProjMat.identity(F32)
    assert (A * B) * C == A * (B * C)
    assert A * A.inv() == E
    assert A * E == A
    assert A ** A.order() == E


@given(mats(F32), st.integers(0, 10))
def test_semilinear_composition_matches_action(A, i):
    f = FIRST_CUBICS[0]
    g = SemiLinear(A, i, 15)
    h = SemiLinear(standard_generators(F32)[0], 2, 15)
    lhs = act_semilinear(g * h, f, 3)
    rhs = act_semilinear(g, act_semilinear(h, f, 3), 3)
    assert lhs == rhs
    assert act_semilinear(SemiLinear.identity(F32, 15), f, 3) == f
    assert act_semilinear(SemiLinear(ProjMat.identity(F32), 5, 15), f, 3) == f


def test_act_examples():
    six = binary_six(F32)
    assert act(six["A1"], CUBIC, 3) == CUBIC
    assert act(six["A2"], CUBIC, 3) == Poly.from_binary(F32, 0b1101)
    assert act(six["A5"], CUBIC, 3) == CUBIC
    assert act_circ(six["A1"], CUBIC, 3) == CUBIC
    assert six["A5"] * six["A5"] == six["A6"]
    assert (six["A5"] ** 3).is_identity()


@given(mats(F32), mats(F32))
def test_act_is_a_left_action(A, B):
    f = LATER_CUBIC
    assert act(A * B, f, 3) == act(A, act(B, f, 3), 3)


@given(mats(F32))
def test_act_moves_roots_fractionally(A):
    f = LATER_CUBIC
    big = field_new(15)
    e = embedding(F32, big)
    images = sorted(A.apply_point(rho, field=big, emb=e) for rho in roots_in_extension(f))
    assert images == roots_in_extension(act(A, f, 3))


@given(mats(F32))
def test_fix_relation_on_single_polys(A):
    B = A.transpose().inv()
    for f in FIRST_CUBICS:
        assert (act(A, f, 3) == f) == (act_circ(B, f, 3) == f)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_enumeration_and_generators(n):
    ctx = field_new(n)
    group = list(enumerate_pgl(ctx))
    assert len(group) == len(set(group)) == pgl_order(ctx.order)
    if n <= 3:
        assert closure(standard_generators(ctx)) == set(group)


def test_generators_span_pgl_32():
    assert len(closure(standard_generators(F32))) == 32736


@pytest.mark.parametrize("n,count,total", [(1, 3, 6), (2, 5, 60), (3, 9, 504), (5, 33, 32736)])
def test_class_counts(n, count, total):
    ctx = field_new(n)
    q = ctx.order
    classes = conjugacy_classes(ctx)
    assert len(classes) == count == 2 + (q - 2) // 2 + q // 2
    assert sum(c.size for c in classes) == total


def test_q4_sizes():
    assert [c.size for c in conjugacy_classes(field_new(2))] == [1, 15, 20, 12, 12]


@pytest.mark.parametrize("n", [2, 3])
def test_classes_brute_force(n):
    ctx = field_new(n)
    group = list(enumerate_pgl(ctx))
    seen = set()
    for cl in conjugacy_classes(ctx):
        cc = conjugates(cl.representative, group)
        assert len(cc) == cl.size
        assert not (cc & seen)
        assert cl.representative.order() == cl.order_in_pgl
        assert all(B.order() == cl.order_in_pgl for B in cc)
        seen |= cc
    assert seen == set(group)


def test_orders_q32():
    classes = conjugacy_classes(F32)
    rng = random.Random(5)
    for cl in rng.sample(classes, 10):
        assert cl.representative.order() == cl.order_in_pgl
    fams = [c.family for c in classes]
    assert fams.count("diagonal") == 15 and fams.count("elliptic") == 16
