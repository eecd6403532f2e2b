"""Tests for closed-form lifting, the brute-force oracle, and the wall bound."""

from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kucalc.functor import phi_matrix
from kucalc.grr import make_cover_setup
from kucalc.knum import KnumClass, euler_form, make_ku_basis
from kucalc.lift import (
    QDS_GRAM,
    LiftError,
    all_lifts_inequality,
    brute_force_lift,
    check_wall_inequality,
    closed_form_lift_gm3,
    closed_form_lift_qds,
    expected_dimension,
)

MU = make_ku_basis("mu")
KAPPA = make_ku_basis("kappa")

small = st.integers(min_value=-10, max_value=10)


def test_zero_vector_rejected():
    with pytest.raises(LiftError, match="zero vector"):
        closed_form_lift_qds(0, 0)
    with pytest.raises(LiftError, match="zero vector"):
        closed_form_lift_gm3(0, 0)


@given(a=small, b=small)
@settings(max_examples=300)
def test_qds_certificate_properties(a, b):
    if (a, b) == (0, 0):
        return
    cert = closed_form_lift_qds(a, b)
    # certificates recheck phi_star(w) = v and w^2 on construction, so
    # reaching here means the lift is genuine; confirm the inequalities
    assert cert.gram == QDS_GRAM
    assert cert.v.coords == (a, b)
    assert cert.w_square >= -2
    assert cert.nonneg_ok
    assert cert.wall_ok
    assert cert.w_square + 2 < -euler_form(MU, cert.v0, cert.v0) + 1
    # documented polynomial bound: w^2 <= a^2 + 2ab + 2b^2 + 1
    assert cert.w_square <= a * a + 2 * a * b + 2 * b * b + 1


@given(p=small, q=small)
@settings(max_examples=300)
def test_gm3_certificate_properties(p, q):
    if (p, q) == (0, 0):
        return
    g = gcd(p, q)
    p0, q0 = abs(p // g), abs(q // g)
    covered = q0 != 0 or p0 == 1
    if not covered:
        with pytest.raises(LiftError):
            closed_form_lift_gm3(p, q)
        return
    cert = closed_form_lift_gm3(p, q)
    assert cert.v.coords == (p, q)
    assert cert.k == abs(g)
    assert cert.nonneg_ok and cert.wall_ok
    assert cert.gram[0][0] == 10 and cert.gram[0][1] == cert.x


def test_qds_branch_formulas():
    # one representative per branch
    cases = {
        (2, 0): ("even-nonneg", 2),
        (2, -3): ("even-gap-even", 4),
        (4, -3): ("even-gap-odd", 4),
        (3, -1): ("odd-nonneg", 0),
        (3, -3): ("odd-gap-odd", 2),
        (3, -4): ("odd-gap-even", 4),
    }
    for (a, b), (branch, square) in cases.items():
        cert = closed_form_lift_qds(a, b)
        assert cert.branch == branch, (a, b)
        assert cert.w_square == square, (a, b)


def test_gm3_exceptional_lattices():
    for (p, q), gram in [
        ((0, 1), ((10, 5), (5, 0))),
        ((2, 1), ((10, 9), (9, 4))),
        ((-2, 1), ((10, 7), (7, 4))),
    ]:
        cert = closed_form_lift_gm3(p, q)
        assert cert.gram == gram
        assert cert.w_square == -2


def test_gm3_lattice_specialization():
    assert closed_form_lift_gm3(1, 2).gram == ((10, 8), (8, 2))   # p odd: x = q + 6
    assert closed_form_lift_gm3(2, 3).gram == ((10, 7), (7, 2))   # p even: x = q + 4
    assert closed_form_lift_gm3(4, 1).gram == ((10, 9), (9, 2))   # q = 1, |p| > 2


def test_gm3_primitive_reduction():
    # (p, 0) reduces to the primitive class (1, 0) with multiplicity |p|
    for p in (3, -3, 2, 6):
        cert = closed_form_lift_gm3(p, 0)
        assert cert.k == abs(p)
        assert cert.v0.coords in ((1, 0), (-1, 0))
        assert cert.v.coords == (p, 0)


# --- brute-force oracle ----------------------------------------------------


@pytest.mark.parametrize("a,b", [(2, 0), (2, -1), (3, -2), (1, -1), (0, -2), (5, 3)])
def test_brute_force_contains_closed_form(a, b):
    cert = closed_form_lift_qds(a, b)
    setup = make_cover_setup("qds-line", QDS_GRAM)
    box = max(8, max(abs(x) for x in cert.w.coords()))
    lifts = brute_force_lift(setup, cert.v0, box)
    assert cert.w in lifts
    pmap = phi_matrix(setup)
    for w in lifts:
        assert pmap.apply(w).coords == cert.v0.coords
        assert w.square() >= -2


def test_brute_force_empty_off_image():
    # odd first coordinate is not hit on the Picard-rank-1 quartic K3
    setup = make_cover_setup("qds")
    assert brute_force_lift(setup, KnumClass(MU, (1, 0)), 10) == []
    with pytest.raises(LiftError):
        brute_force_lift(setup, KnumClass(MU, (2, 0)), 0)


def test_brute_force_sorted_by_square():
    setup = make_cover_setup("qds-line", QDS_GRAM)
    lifts = brute_force_lift(setup, KnumClass(MU, (2, 0)), 6)
    squares = [w.square() for w in lifts]
    assert squares == sorted(squares)


# --- wall inequality and dimensions ----------------------------------------


def test_all_lifts_exact_maximum():
    pmap = phi_matrix(make_cover_setup("qds-line", QDS_GRAM))
    rep = all_lifts_inequality(pmap, KnumClass(MU, (2, 0)))
    assert rep.complete and rep.negative_definite
    assert rep.max_w_square == 2
    assert rep.all_satisfy
    # exact maximum agrees with a brute-force scan over a generous box
    lifts = brute_force_lift(make_cover_setup("qds-line", QDS_GRAM),
                             KnumClass(MU, (2, 0)), 15)
    assert max(w.square() for w in lifts) == 2


def test_all_lifts_not_in_image():
    pmap = phi_matrix(make_cover_setup("qds"))
    with pytest.raises(LiftError, match="not in the image"):
        all_lifts_inequality(pmap, KnumClass(MU, (1, 0)))


def test_wall_inequality_and_dimensions():
    v = KnumClass(MU, (2, 0))
    chi = euler_form(MU, v, v)  # -4
    assert check_wall_inequality(MU, v, 2)      # 4 < 5
    assert not check_wall_inequality(MU, v, 3)  # 5 < 5 fails
    assert expected_dimension(MU, v, "Enriques") == -chi + 1 == 5
    assert expected_dimension(MU, v, "CY2") == 6
    assert expected_dimension(KAPPA, KnumClass(KAPPA, (1, 1)), "Enriques") == 3
    with pytest.raises(LiftError):
        expected_dimension(MU, v, "abelian")
