from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from goppacount.arith import is_prime
from goppacount.census import (
    count_A5_invariant_f2,
    count_delta2,
    count_delta5,
    count_X,
    corollary_formulas,
    delta5_definitional,
    fix_diagonal,
    fix_elliptic,
    fix_parabolic,
    is_integral,
    n2_classsum_exact,
    n2_printed_exact,
    n3_classsum_exact,
    n3_printed_exact,
    number_to_json,
    orbit_count_total,
    pgl_orbit_count,
    s0,
    s0_exact,
    sextic_formula,
)
from goppacount.errors import HypothesisError


def test_fixed_point_examples():
    assert fix_parabolic(32, 3) == 0
    assert fix_parabolic(32, 4) == 256
    assert fix_parabolic(2, 2) == 1
    assert fix_diagonal(32, 3, 31) == 0
    assert fix_diagonal(32, 31, 31) == 30
    assert fix_elliptic(32, 4, 3) == 0
    assert fix_elliptic(32, 3, 3) == 22
    assert fix_elliptic(32, 3, 11) == 0 and fix_elliptic(32, 3, 33) == 0
    with pytest.raises(ValueError):
        fix_diagonal(32, 3, 5)


def test_pgl_orbit_examples():
    assert pgl_orbit_count(5, 4)["pgl_orbits"] == 16
    d = pgl_orbit_count(5, 3)
    assert d["N0"] == 10912 and d["N3"] == 21824 and d["pgl_orbits"] == 1


def test_x_and_delta_examples():
    assert [count_X(r) for r in (3, 4, 6)] == [2, 3, 9]
    assert count_delta2(3) == 0 and count_delta2(4) == 1
    for p in (3, 5, 7, 11):
        assert count_delta2(2 * p) == (2**p - 2) // (2 * p)
    assert count_delta5(4) == 0 and count_delta5(6) == 0 and count_delta5(9) == 1
    assert count_A5_invariant_f2(6) == 0
    assert count_A5_invariant_f2(3) == 2 and count_A5_invariant_f2(9) == 2
    assert s0(5, 4) == 1 and s0(5, 6) == 2
    assert s0_exact(5, 3) == Fraction(2, 3)


def test_printed_delta5_is_half_of_definition():
    for r in range(9, 40, 3):
        if r == 6:
            continue
        assert delta5_definitional(r) == 2 * count_delta5(r)


def test_headline_values():
    assert orbit_count_total(5, 4).s == 4
    assert orbit_count_total(7, 4).s == 10
    rep = orbit_count_total(5, 6)
    assert rep.s == 1131 and rep.consistent and rep.bound == 1131
    assert sextic_formula(5) == 1131
    assert corollary_formulas(5, 4) == [("r4", 4)]
    assert corollary_formulas(5, 6) == [("r2p-subcase2", 1131)]
    (name, value), = corollary_formulas(5, 7)
    assert name == "coprime" and value == orbit_count_total(5, 7).s


def test_r3_is_flagged_not_rounded():
    rep = orbit_count_total(5, 3)
    assert rep.s0 == Fraction(2, 3)
    assert not rep.consistent
    assert not rep.consistency["s0_integral"]
    assert not rep.consistency["delta5_matches_definition"]
    assert rep.s0_corrected == 1 and rep.s_corrected == 1 and rep.bound == 1
    assert number_to_json(rep.s) == "11/15"
    assert rep.terms


def test_hypotheses_enforced():
    with pytest.raises(HypothesisError):
        orbit_count_total(4, 4)
    with pytest.raises(HypothesisError):
        orbit_count_total(5, 5)
    rep = orbit_count_total(2, 3, force_hypotheses=True)
    assert rep.forced


def test_n2_printed_form_double_counts():
    # q = 4, r = 3: the diagonal class of order 3 has size q(q+1) = 20 and
    # fixes 2 cubics, so the true N2 is 40
    assert n2_classsum_exact(2, 3) == 40
    assert n2_printed_exact(4, 3) == 80
    rep = orbit_count_total(2, 3, force_hypotheses=True)
    assert rep.pgl_orbits == Fraction(5, 3) and rep.pgl_orbits_corrected == 1
    rep = orbit_count_total(3, 7, force_hypotheses=True)
    assert rep.pgl_orbits == Fraction(4197, 7) and rep.pgl_orbits_corrected == 597


PARAMS = [(n, r) for n in (5, 7, 11, 13) for r in range(3, 21) if gcd(n, r) == 1]


@pytest.mark.parametrize("n,r", PARAMS)
def test_census_grid(n, r):
    rep = orbit_count_total(n, r)
    assert rep.N2 == rep.N2_classsum == 0 or gcd(r, 2**n - 1) > 1
    assert rep.N3 == rep.N3_classsum
    assert is_integral(rep.pgl_orbits_corrected) and is_integral(rep.s_corrected)
    assert rep.s_corrected <= rep.pgl_orbits_corrected <= rep.N0
    for _, value in corollary_formulas(n, r):
        assert value == rep.s
    if r % 3 or r == 6:
        assert rep.consistent and rep.paper_matches_corrected
    else:
        assert not rep.consistency["delta5_matches_definition"]


@given(st.sampled_from([5, 7, 11, 13]), st.integers(3, 60))
def test_s_routes(n, r):
    if gcd(n, r) != 1:
        return
    rep = orbit_count_total(n, r)
    assert rep.s_corrected == rep.s0_corrected + Fraction(rep.pgl_orbits_corrected - rep.s0_corrected, n)
    assert rep.consistency["s_routes_agree"]


def test_subcase1_corollary_tracks_printed_s():
    # r = 2p with p | q - 1: only here does the printed N2 enter
    n, r = 5, 62
    assert is_prime(31) and (2**n - 1) % 31 == 0
    rep = orbit_count_total(n, r)
    (name, value), = corollary_formulas(n, r)
    assert name == "r2p-subcase1"
    assert value == rep.s
    assert not rep.consistency["N2_paths_agree"]
    assert is_integral(rep.s_corrected)


def test_classsum_fallback_beyond_class_lists():
    assert n3_classsum_exact(17, 3) == n3_printed_exact(2**17, 3)
