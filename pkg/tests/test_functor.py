"""Tests for the class-level transport map and its lattice invariants."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kucalc.grr import make_cover_setup
from kucalc.functor import (
    image_lattice,
    kernel_lattice,
    mutate_class,
    phi_matrix,
    phi_star,
)
from kucalc.knum import KnumClass, KnumError, MukaiVector, make_ku_basis, sheaf_mukai

ints = st.integers(min_value=-15, max_value=15)

SETUPS = {kind: make_cover_setup(kind) for kind in ("qds", "qds-line", "gm3", "gm4")}
MAPS = {kind: phi_matrix(s) for kind, s in SETUPS.items()}


def test_mutation_is_euler_orthogonalization():
    # after mutating F through E, chi(E, .) vanishes
    from kucalc.grr import divisor_pushforward, euler_pairing

    setup = SETUPS["qds"]
    Y = setup.target
    chE = Y.unit()
    chF = divisor_pushforward(setup, setup.source.unit())
    mutated = mutate_class(Y, chF, chE)
    assert euler_pairing(Y, chE, mutated) == 0


@pytest.mark.parametrize(
    "kind,label,expected",
    [
        ("qds", "O", (2, -2)),
        ("qds", "O(-H)", (2, 0)),
        ("qds", "O_x", (2, -1)),
        ("qds", "I_x", (0, -1)),
        ("qds", "O_H", (0, -2)),
        ("qds-line", "O_L", (3, -2)),
        ("gm3", "O", (0, 4)),
        ("gm3", "O(-H)", (5, 4)),
        ("gm3", "O_x", (1, 2)),
    ],
)
def test_pushforward_anchors(kind, label, expected):
    setup = SETUPS[kind]
    assert phi_star(setup, sheaf_mukai(setup.source, label)).coords == expected


def test_gm4_pushforward_of_kappa_basis():
    setup = SETUPS["gm4"]
    kappa = setup.source_knum_basis
    assert phi_star(setup, KnumClass(kappa, (1, 0))).coords == (1, 0)
    assert phi_star(setup, KnumClass(kappa, (0, 1))).coords == (0, 1)


def test_source_type_guards():
    with pytest.raises(KnumError):
        phi_star(SETUPS["qds"], KnumClass(make_ku_basis("kappa"), (1, 0)))
    with pytest.raises(KnumError):
        phi_star(SETUPS["gm4"], sheaf_mukai(SETUPS["qds"].source, "O"))
    # Mukai vector on the wrong Picard lattice
    with pytest.raises(KnumError):
        phi_star(SETUPS["qds"], sheaf_mukai(SETUPS["qds-line"].source, "O"))


@pytest.mark.parametrize("kind", sorted(SETUPS))
@given(data=st.data())
@settings(max_examples=40)
def test_matrix_agrees_with_pipeline_and_is_linear(kind, data):
    setup, pmap = SETUPS[kind], MAPS[kind]
    if setup.source_kind == "k3-mukai":
        gram = setup.source.gram
        rho = len(gram)

        def draw():
            return MukaiVector(gram, data.draw(ints),
                               tuple(data.draw(ints) for _ in range(rho)), data.draw(ints))

    else:
        kappa = setup.source_knum_basis

        def draw():
            return KnumClass(kappa, (data.draw(ints), data.draw(ints)))

    v, w = draw(), draw()
    assert pmap.apply(v).coords == phi_star(setup, v).coords
    assert phi_star(setup, v + w).coords == tuple(
        a + b for a, b in zip(phi_star(setup, v).coords, phi_star(setup, w).coords)
    )


def test_image_lattices():
    # rank-1 quartic K3: image is {(a, b) : a even}
    img = image_lattice(MAPS["qds"])
    assert img.hnf_columns == ((2, 0), (0, 1))
    mu = make_ku_basis("mu")
    assert img.contains(KnumClass(mu, (2, -5)))
    assert not img.contains(KnumClass(mu, (1, 0)))
    # adding the line class makes the map surjective
    assert image_lattice(MAPS["qds-line"]).hnf_columns == ((1, 0), (0, 1))
    # on the default degree-10 lattice the second coordinate stays even
    assert image_lattice(MAPS["gm3"]).hnf_columns == ((1, 0), (0, 2))
    assert image_lattice(MAPS["gm4"]).hnf_columns == ((1, 0), (0, 1))


@pytest.mark.parametrize(
    "kind,rank",
    [("qds", 1), ("qds-line", 2), ("gm3", 2), ("gm4", 0)],
)
def test_kernel_lattices(kind, rank):
    ker = kernel_lattice(MAPS[kind])
    assert ker.rank == rank
    assert ker.negative_definite
    for v in ker.basis:
        assert MAPS[kind].apply(v).coords == (0, 0)


def test_kernel_grams():
    assert kernel_lattice(MAPS["qds"]).gram == ((-4,),)
    assert kernel_lattice(MAPS["qds-line"]).gram == ((-4, -2), (-2, -10))
    assert kernel_lattice(MAPS["gm3"]).gram == ((-10, -8), (-8, -8))
