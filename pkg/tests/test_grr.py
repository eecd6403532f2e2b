"""Tests for the Euler pairing and the divisorial pushforward."""

from fractions import Fraction

import pytest

from kucalc.chow import ChowError, make_variety_model, multiply
from kucalc.grr import (
    GrrError,
    adjoint_euler,
    ch_line_bundle,
    ch_tautological_dual,
    divisor_pushforward,
    euler_pairing,
    inverse_todd_of_divisor,
    make_cover_setup,
)

Q = Fraction


def test_line_bundle_is_exponential():
    model = make_variety_model("P3")
    ch = ch_line_bundle(model, 2 * model.cls("H"))
    assert ch.coeff(0, "1") == 1
    assert ch.coeff(1, "H") == 2
    assert ch.coeff(2, "l") == 2   # (2H)^2/2 = 2H^2
    assert ch.coeff(3, "pt") == Q(4, 3)


def test_line_bundle_rejects_mixed_degree():
    model = make_variety_model("P3")
    with pytest.raises(ChowError):
        ch_line_bundle(model, model.unit())


def test_inverse_todd_identity():
    # td(O(D))^{-1} * D = 1 - exp(-D)
    model = make_variety_model("GM3fold")
    D = model.cls("H")
    lhs = multiply(model, inverse_todd_of_divisor(model, D), D)
    rhs = model.unit() - ch_line_bundle(model, -1 * D)
    assert lhs == rhs


@pytest.mark.parametrize(
    "variety,n,expected",
    [
        ("P3", 1, 4),
        ("P3", 2, 10),
        ("QuarticDoubleSolid", 1, 4),
        ("GM3fold", 1, 8),
    ],
)
def test_euler_pairing_structure_to_twist(variety, n, expected):
    # chi(O, O(nH)) on index-2 / index-1 Fano threefolds
    model = make_variety_model(variety)
    chi = euler_pairing(model, model.unit(), ch_line_bundle(model, n * model.cls("H")))
    assert chi == expected


def test_euler_pairing_on_k3():
    k3 = make_variety_model("QuarticK3")
    assert euler_pairing(k3, k3.unit(), k3.unit()) == 2
    assert euler_pairing(k3, k3.unit(), k3.point()) == 1


def test_euler_pairing_integrality_guard():
    model = make_variety_model("GM3fold")
    half_point = Q(1, 2) * model.point()
    with pytest.raises(GrrError):
        euler_pairing(model, model.unit(), half_point)
    assert euler_pairing(model, model.unit(), half_point, assert_integral=False) == Q(1, 2)


@pytest.mark.parametrize("kind", ["qds", "qds-line", "gm3", "gm4"])
def test_pushforward_of_structure_sheaf(kind):
    # ch(j_* O_X) = 1 - exp(-X), the ideal sheaf sequence of the divisor
    setup = make_cover_setup(kind)
    got = divisor_pushforward(setup, setup.source.unit())
    want = setup.target.unit() - ch_line_bundle(setup.target, -1 * setup.divisor_class)
    assert got == want


@pytest.mark.parametrize("kind", ["qds", "qds-line", "gm3"])
def test_adjunction(kind):
    # chi_Y(O(H), j_* F) = chi_X(O(H)|_X, F)
    setup = make_cover_setup(kind)
    E = ch_line_bundle(setup.target, setup.target.cls("H"))
    for F in (setup.source.unit(), setup.source.point(),
              ch_line_bundle(setup.source, setup.source.cls("H"))):
        lhs = euler_pairing(setup.target, E, divisor_pushforward(setup, F))
        assert lhs == adjoint_euler(setup, E, F)


def test_projection_formula():
    setup = make_cover_setup("gm3")
    a = setup.source.cls("H")
    b = setup.target.cls("H")
    lhs = setup.pushforward(multiply(setup.source, a, setup.pullback(b)))
    rhs = multiply(setup.target, setup.pushforward(a), b)
    assert lhs == rhs


def test_tautological_dual_euler_characteristics():
    gm3 = make_variety_model("GM3fold")
    U = ch_tautological_dual(gm3)
    assert euler_pairing(gm3, gm3.unit(), U) == 5
    assert euler_pairing(gm3, U, U) == 1
    with pytest.raises(ChowError):
        ch_tautological_dual(make_variety_model("P3"))


def test_unknown_setup_rejected():
    with pytest.raises(GrrError):
        make_cover_setup("nope")
