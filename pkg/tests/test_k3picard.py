"""Tests for the rank-2 Picard lattice validity reports."""

import pytest

from kucalc.k3picard import (
    FAMILIES,
    PicardError,
    orthogonal_primitive,
    validate_lattice,
)


def test_families_list():
    assert FAMILIES == ("10-x-2", "10-5-0", "10-x-4", "quartic-line")


@pytest.mark.parametrize("x", range(6, 27))
def test_10_x_2_family(x):
    rep = validate_lattice(((10, x), (x, 2)), "10-x-2")
    assert rep.det == 20 - x * x
    assert rep.verdict == (x != 5)  # all x >= 6 here, so always valid
    assert rep.verdict


def test_10_5_2_rejected_by_family_condition():
    rep = validate_lattice(((10, 5), (5, 2)), "10-x-2")
    assert rep.hyperbolic_ok
    assert rep.minus_two_orthogonal  # (1,-2) has square -2
    assert not rep.family_condition_ok
    assert not rep.verdict


def test_10_5_0_special_lattice():
    rep = validate_lattice(((10, 5), (5, 0)), "10-5-0")
    assert rep.det == -25 and rep.hyperbolic_ok
    assert rep.v0 == (1, -2) and rep.v0_square == -10
    assert rep.verdict


@pytest.mark.parametrize("x,valid", [(7, True), (9, True)])
def test_10_x_4_family(x, valid):
    rep = validate_lattice(((10, x), (x, 4)), "10-x-4")
    assert rep.verdict == valid


def test_quartic_line_lattice():
    rep = validate_lattice(((4, 1), (1, -2)), "quartic-line")
    assert rep.det == -9 and rep.hyperbolic_ok
    assert rep.v0 == (1, -4)
    assert rep.v0_square == -36
    assert rep.verdict


def test_non_hyperbolic_rejected():
    rep = validate_lattice(((10, 1), (1, 2)), "10-x-2")
    assert not rep.hyperbolic_ok and not rep.verdict


def test_orthogonal_primitive_normalization():
    assert orthogonal_primitive(((10, 6), (6, 2))) == (3, -5)
    assert orthogonal_primitive(((4, 0), (0, -2))) == (0, 1)


def test_input_validation():
    with pytest.raises(PicardError):
        validate_lattice(((10, 1), (2, 2)), "10-x-2")  # not symmetric
    with pytest.raises(PicardError):
        validate_lattice(((8, 1), (1, 2)), "10-x-2")  # wrong degree
    with pytest.raises(PicardError):
        validate_lattice(((10, 1), (1, 2)), "nope")
    with pytest.raises(PicardError):
        orthogonal_primitive(((0, 0), (0, 2)))
