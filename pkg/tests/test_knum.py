"""Tests for the rank-2 Euler lattices and the Mukai lattice layer."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kucalc.chow import make_variety_model
from kucalc.grr import euler_pairing
from kucalc.knum import (
    KnumClass,
    KnumError,
    MukaiVector,
    ch_from_mukai,
    euler_form,
    express_in_basis,
    gram_from_ch,
    make_ku_basis,
    mukai_pairing,
    mukai_vector,
    sheaf_mukai,
)

Q = Fraction

ints = st.integers(min_value=-20, max_value=20)

GRAMS = {
    "mu": ((-1, -1), (-1, -2)),
    "kappa": ((-1, 0), (0, -1)),
    "lambda": ((-2, 0), (0, -2)),
}


@pytest.mark.parametrize("name", sorted(GRAMS))
def test_gram_matrices(name):
    basis = make_ku_basis(name)
    assert basis.gram == GRAMS[name]
    assert gram_from_ch(basis) == GRAMS[name]


def test_unknown_basis_rejected():
    with pytest.raises(KnumError):
        make_ku_basis("nu")


@pytest.mark.parametrize("name", sorted(GRAMS))
@given(a=ints, b=ints, c=ints, d=ints)
@settings(max_examples=50)
def test_euler_form_matches_chern_pairing(name, a, b, c, d):
    basis = make_ku_basis(name)
    v, w = KnumClass(basis, (a, b)), KnumClass(basis, (c, d))
    assert euler_form(basis, v, w) == euler_pairing(basis.model, v.ch(), w.ch(),
                                                    assert_integral=False)


@given(a=ints, b=ints)
@settings(max_examples=50)
def test_express_in_basis_roundtrip(a, b):
    basis = make_ku_basis("mu")
    v = KnumClass(basis, (a, b))
    assert express_in_basis(basis, v.ch()).coords == (a, b)


def test_express_in_basis_failures():
    basis = make_ku_basis("mu")
    model = basis.model
    with pytest.raises(KnumError):
        express_in_basis(basis, model.point())  # not in the span
    with pytest.raises(KnumError):
        half = Q(1, 2) * KnumClass(basis, (1, 0)).ch()
        express_in_basis(basis, half)  # non-integral coordinates
    with pytest.raises(KnumError):
        express_in_basis(basis, make_variety_model("GM3fold").unit())  # wrong model


def test_knum_arithmetic_and_basis_guard():
    mu, kappa = make_ku_basis("mu"), make_ku_basis("kappa")
    v = KnumClass(mu, (1, 2)) + KnumClass(mu, (3, -1))
    assert v.coords == (4, 1)
    assert (-v).coords == (-4, -1)
    with pytest.raises(KnumError):
        KnumClass(mu, (1, 0)) + KnumClass(kappa, (1, 0))
    with pytest.raises(KnumError):
        euler_form(mu, KnumClass(kappa, (1, 0)), KnumClass(kappa, (0, 1)))


# --- Mukai lattice ---------------------------------------------------------


@pytest.mark.parametrize("gram", [((4,),), ((4, 1), (1, -2)), ((10, 6), (6, 2))])
@given(data=st.data())
@settings(max_examples=50)
def test_mukai_roundtrip_and_pairing(gram, data):
    name = "QuarticK3" if gram[0][0] == 4 else "Degree10K3"
    k3 = make_variety_model(name, gram)
    rho = len(gram)
    r = data.draw(ints)
    c = tuple(data.draw(ints) for _ in range(rho))
    s = data.draw(ints)
    w = MukaiVector(gram, r, c, s)
    assert mukai_vector(k3, ch_from_mukai(k3, w)) == w
    # <w, w'> = -chi at Chern character level
    w2 = MukaiVector(gram, data.draw(ints), tuple(data.draw(ints) for _ in range(rho)),
                     data.draw(ints))
    chi = euler_pairing(k3, ch_from_mukai(k3, w), ch_from_mukai(k3, w2),
                        assert_integral=False)
    assert mukai_pairing(w, w2) == -chi


def test_mukai_vector_rejects_non_integral():
    k3 = make_variety_model("QuarticK3")
    with pytest.raises(KnumError):
        mukai_vector(k3, Q(1, 2) * k3.unit())
    with pytest.raises(KnumError):
        mukai_vector(make_variety_model("P3"), make_variety_model("P3").unit())


def test_sheaf_mukai_values():
    k3 = make_variety_model("QuarticK3", ((4, 1), (1, -2)))
    assert sheaf_mukai(k3, "O") == MukaiVector(k3.gram, 1, (0, 0), 1)
    assert sheaf_mukai(k3, "O_x") == MukaiVector(k3.gram, 0, (0, 0), 1)
    assert sheaf_mukai(k3, "I_x") == MukaiVector(k3.gram, 1, (0, 0), 0)
    assert sheaf_mukai(k3, "O_H") == MukaiVector(k3.gram, 0, (1, 0), -2)
    assert sheaf_mukai(k3, "O_L") == MukaiVector(k3.gram, 0, (0, 1), 1)
    # rigid and spherical squares
    assert sheaf_mukai(k3, "O").square() == -2
    assert sheaf_mukai(k3, "O_L").square() == -2
    assert sheaf_mukai(k3, "O_x").square() == 0
    with pytest.raises(KnumError):
        sheaf_mukai(k3, "T_X")
    rank1 = make_variety_model("QuarticK3")
    with pytest.raises(KnumError):
        sheaf_mukai(rank1, "O_L")


def test_mukai_lattice_mismatch_guard():
    a = MukaiVector(((4,),), 1, (0,), 1)
    b = MukaiVector(((10, 6), (6, 2)), 1, (0, 0), 1)
    with pytest.raises(KnumError):
        mukai_pairing(a, b)
