import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from goppacount.census import orbit_count_total
from goppacount.errors import CapacityError, StructuralLawError
from goppacount.gf2 import field_new
from goppacount.oracle import (
    PGAML,
    PGL,
    OracleConfig,
    PolyTable,
    _check_delta_laws,
    act_table_keys,
    adjudicate,
    binary_a5_image,
    burnside_count,
    check_block_equality,
    check_partition_laws,
    class_fix_crosscheck,
    classify_X,
    count_A5_fixed_f2_bruteforce,
    count_delta5_bruteforce,
    divides_x2r_x_table,
    enumerate_orbits,
    f_r0,
    fix_count_table,
    load_table,
    sigma_fixed_orbit_count,
    verify_F_factorization,
    verify_gcd_identity,
    x_members,
)
from goppacount.pgl import act, enumerate_pgl
from goppacount.polyring import Poly, divides_x2r_x, iter_irreducible


@pytest.mark.parametrize("n,r", [(2, 3), (2, 4), (3, 3), (3, 4), (2, 5)])
def test_table_kernels_match_scalar_action(n, r):
    table = load_table(n, r)
    ctx = table.ctx
    polys = list(iter_irreducible(ctx, r))
    assert table.keys.tolist() == [f.key for f in polys]
    for A in list(enumerate_pgl(ctx))[:: max(1, len(polys) // 7)][:12]:
        keys = act_table_keys(ctx, A, table.cols, r)
        assert keys.tolist() == [act(A, f, r).key for f in polys]
        assert fix_count_table(ctx, A, table) == sum(act(A, f, r) == f for f in polys)
    mask = divides_x2r_x_table(ctx, table.cols, r)
    assert mask.tolist() == [divides_x2r_x(f, r) for f in polys]


@pytest.mark.parametrize("n,r", [(2, 3), (3, 4), (2, 6), (3, 5), (4, 3)])
def test_burnside_matches_partition(n, r):
    table = load_table(n, r)
    pgl = enumerate_orbits(PGL, n, r, table=table)
    pgaml = enumerate_orbits(PGAML, n, r, table=table)
    check_partition_laws(pgl, pgaml)
    assert burnside_count(n, r, table=table) == pgl.count
    rep = orbit_count_total(n, r, force_hypotheses=True)
    assert rep.pgl_orbits_corrected == pgl.count


def test_forced_n2_counterexamples_confirmed():
    assert burnside_count(2, 3) == 1
    assert burnside_count(3, 7) == 597


def test_partition_invariants_and_workers():
    a = enumerate_orbits(PGL, 3, 4, OracleConfig(workers=1))
    b = enumerate_orbits(PGL, 3, 4, OracleConfig(workers=3))
    assert np.array_equal(a.labels, b.labels)
    assert a.representatives == sorted(a.representatives)
    for orb, rep in enumerate(a.representatives):
        assert a.orbit_id(rep) == orb
        assert a.members(orb).min() == rep
    with pytest.raises(KeyError):
        a.orbit_id(1)


def test_generator_choice_does_not_matter():
    ctx = field_new(3)
    table = load_table(3, 4)
    std = enumerate_orbits(PGL, 3, 4, table=table)
    full = enumerate_orbits(PGL, 3, 4, table=table, generators=list(enumerate_pgl(ctx)))
    assert np.array_equal(std.labels, full.labels)


def test_capacity_refusal():
    with pytest.raises(CapacityError):
        load_table(5, 6)
    with pytest.raises(CapacityError):
        load_table(5, 5, OracleConfig(max_items=1000))


def test_table_rejects_unsorted_input():
    ctx = field_new(2)
    rows = np.array([[3, 1, 1, 1], [1, 1, 0, 1]], dtype=np.uint8)
    with pytest.raises(StructuralLawError):
        PolyTable(ctx, 3, rows)


@pytest.mark.parametrize("n,r", [(5, 3), (5, 4), (5, 6), (5, 9), (7, 3), (5, 8), (7, 6), (5, 12)])
def test_x_members_are_the_binary_divisors(n, r):
    members = x_members(n, r)
    ctx = field_new(n)
    assert all(divides_x2r_x(f, r) for f in members)
    assert len(members) == orbit_count_total(n, r).X_count
    # gcd(n, r) = 1 means every member is binary
    assert all(f.to_binary() is not None for f in members)
    assert all(f.ctx == ctx for f in members)


def test_classification_examples():
    t = classify_X(5, 4)
    assert t.sizes() == {"delta2": 1, "delta3": 1, "delta4": 1, "delta5": 0, "delta6": 0, "delta7": 0, "X": 3}
    assert len(t.blocks) == 1
    t = classify_X(5, 6)
    assert t.sizes()["X"] == 9 and t.sizes()["delta2"] == 1 and t.sizes()["delta7"] == 6
    assert count_delta5_bruteforce(5, 6) == 0
    assert count_delta5_bruteforce(5, 4) == 0
    assert count_delta5_bruteforce(5, 3) == 2


def test_law_violation_is_reported():
    t = classify_X(5, 4)
    t.delta[5] = [t.members[0]]
    with pytest.raises(StructuralLawError):
        _check_delta_laws(t, {k: {f"A{i}": k for i in range(1, 7)} for k in t.members})


@pytest.mark.parametrize("n,r,expected", [(5, 3, 1), (5, 4, 1), (5, 6, 2), (5, 9, 10), (5, 12, 59), (7, 9, 10)])
def test_sigma_fixed_counts(n, r, expected):
    assert sigma_fixed_orbit_count(n, r) == expected
    assert orbit_count_total(n, r).s0_corrected == expected


def test_sigma_fixed_direct_recount_small():
    # gcd(n, r) = 1 with a table small enough for a quick partition
    table = load_table(3, 4)
    pgl = enumerate_orbits(PGL, 3, 4, table=table)
    mask = divides_x2r_x_table(table.ctx, table.cols, 4)
    assert sigma_fixed_orbit_count(3, 4, pgl) == len(classify_X(3, 4).blocks)
    assert check_block_equality(3, 4, pgl, mask) == sum(pgl.divisor_flag)


@pytest.mark.parametrize("n,r,ok", [(5, 4, True), (5, 6, True), (7, 4, True)])
def test_gcd_identity_examples(n, r, ok):
    assert verify_gcd_identity(n, r) is ok


def test_gcd_identity_rejects_bad_input():
    with pytest.raises(ValueError):
        verify_gcd_identity(5, 3)


def test_binary_a5_matches_projective_action():
    ctx = field_new(1)
    from goppacount.pgl import ProjMat

    A5 = ProjMat(ctx, 1, 1, 1, 0)
    for f in (0b1011, 0b1101, 0b1000000011, 0b1001011001):
        assert binary_a5_image(f) == act(A5, Poly.from_binary(ctx, f), f.bit_length() - 1).to_binary()


@pytest.mark.parametrize("r,count", [(3, 2), (6, 0), (9, 2), (12, 2), (15, 4)])
def test_a5_fixed_binary(r, count):
    assert count_A5_fixed_f2_bruteforce(r) == count


@pytest.mark.parametrize("r", [9, 12, 15])
def test_f_factorization(r):
    rep = verify_F_factorization(5, r)
    assert rep.ok, rep
    assert rep.degree == 2 ** (r // 3) + 1
    assert rep.quadratic_factor == (r // 3 % 2 == 0)
    # only half of the A5-fixed binary polynomials divide F_r0
    assert 2 * rep.a5_fixed_dividing_F == rep.a5_fixed_binary


def test_f_r0_small_degree():
    assert f_r0(5, 9).bit_length() - 1 == 9
    with pytest.raises(ValueError):
        verify_F_factorization(5, 6)


def test_class_crosscheck_small_field():
    rows = class_fix_crosscheck(3, 4, 2, seed=1)
    assert all(row["ok"] for row in rows)


@given(st.sampled_from([(5, 4), (5, 6), (7, 4)]))
def test_adjudicate_passes_where_census_is_consistent(nr):
    n, r = nr
    rep = adjudicate(n, r)
    assert rep["status"] == "PASS"
    assert rep["authoritative"]["s0"] == orbit_count_total(n, r).s0


def test_adjudicate_r3():
    rep = adjudicate(5, 3)
    assert rep["status"] == "DISCREPANCY"
    d5 = next(c for c in rep["comparisons"] if c["quantity"] == "delta5")
    assert d5["paper_formula"] == 1 and d5["oracle"] == 2
    assert rep["authoritative"]["s"] == 1


def test_adjudicate_heavy_raises_capacity():
    with pytest.raises(CapacityError):
        adjudicate(5, 6, OracleConfig(heavy=True))
