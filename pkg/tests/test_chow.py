"""Tests for the graded numerical cohomology rings."""

from fractions import Fraction

import pytest

from kucalc.chow import (
    ChowError,
    GradedClass,
    check_ring_axioms,
    dual_ch,
    integrate,
    make_variety_model,
    model_from_config,
    multiply,
)

Q = Fraction

THREEFOLDS = ["P3", "QuarticDoubleSolid", "QuinticDelPezzo3fold", "GM3fold"]
DEGREES = {"P3": 1, "QuarticDoubleSolid": 2, "QuinticDelPezzo3fold": 5, "GM3fold": 10}


def all_models():
    out = [make_variety_model(n) for n in THREEFOLDS]
    out.append(make_variety_model("GM4fold"))
    out.append(make_variety_model("QuarticK3"))
    out.append(make_variety_model("QuarticK3", ((4, 1), (1, -2))))
    out.append(make_variety_model("Degree10K3", ((10, 6), (6, 2))))
    return out


@pytest.mark.parametrize("model", all_models(), ids=lambda m: f"{m.name}-{m.gram}")
def test_ring_axioms(model):
    check_ring_axioms(model)


@pytest.mark.parametrize("name", THREEFOLDS)
def test_threefold_degrees(name):
    model = make_variety_model(name)
    assert model.degree == DEGREES[name]
    assert integrate(model, model.point()) == 1


def test_k3_intersection_matches_gram():
    gram = ((10, 6), (6, 2))
    k3 = make_variety_model("Degree10K3", gram)
    names = k3.graded_basis[1]
    for i, ni in enumerate(names):
        for j, nj in enumerate(names):
            prod = multiply(k3, k3.cls(ni), k3.cls(nj))
            assert integrate(k3, prod) == gram[i][j]


def test_todd_integrates_to_chi_of_structure_sheaf():
    # chi(O) = 1 on the rational threefolds and fourfold, 2 on a K3
    for name in THREEFOLDS + ["GM4fold"]:
        model = make_variety_model(name)
        assert integrate(model, model.todd) == 1
    k3 = make_variety_model("QuarticK3")
    assert integrate(k3, k3.todd) == 2


def test_multiplication_truncates_above_dimension():
    model = make_variety_model("P3")
    pt = model.point()
    assert multiply(model, pt, pt) == model.zero()
    assert multiply(model, pt, model.cls("H")) == model.zero()


def test_graded_class_arithmetic():
    model = make_variety_model("GM3fold")
    a = model.unit() + 2 * model.cls("H")
    b = model.cls("H") - 3 * model.point()
    assert (a + b) - b == a
    assert -(a - a) == model.zero()
    assert Q(1, 2) * (2 * a) == a
    assert a.part(1) == 2 * model.cls("H")
    assert a.coeff(0, "1") == 1 and a.coeff(3, "pt") == 0


def test_zero_coefficients_are_dropped():
    model = make_variety_model("P3")
    c = GradedClass(model, {(1, "H"): Q(0), (3, "pt"): Q(5)})
    assert (1, "H") not in c.coeffs and c.coeffs[(3, "pt")] == 5


def test_unknown_class_rejected():
    model = make_variety_model("P3")
    with pytest.raises(ChowError):
        GradedClass(model, {(1, "X"): Q(1)})
    with pytest.raises(ChowError):
        model.cls("L")


def test_dual_ch_alternates_signs():
    model = make_variety_model("GM3fold")
    c = model.unit() + model.cls("H") + model.cls("l") + model.point()
    d = dual_ch(model, c)
    assert d.coeff(0, "1") == 1
    assert d.coeff(1, "H") == -1
    assert d.coeff(2, "l") == 1
    assert d.coeff(3, "pt") == -1


def test_mismatched_models_rejected():
    a = make_variety_model("P3")
    b = make_variety_model("GM3fold")
    with pytest.raises(ChowError):
        multiply(a, a.unit(), b.unit())


def test_gram_validation():
    with pytest.raises(ChowError):
        make_variety_model("Degree10K3")  # gram required
    with pytest.raises(ChowError):
        make_variety_model("Degree10K3", ((8, 1), (1, 2)))
    with pytest.raises(ChowError):
        make_variety_model("QuarticK3", ((6,),))
    with pytest.raises(ChowError):
        make_variety_model("NoSuchVariety")


def test_model_from_config_override():
    cfg = {"name": "QuarticK3", "gram": [[4, 1], [1, -2]]}
    model = model_from_config(cfg)
    assert model.gram == ((4, 1), (1, -2))
    tweaked = model_from_config(
        {"name": "P3", "mult_override": {"H*H": {"l": "2"}}}
    )
    sq = multiply(tweaked, tweaked.cls("H"), tweaked.cls("H"))
    assert sq == 2 * tweaked.cls("l")
    broken = model_from_config(
        {"name": "GM4fold", "mult_override": {"H*H": {"s2": "1"}}}
    )
    with pytest.raises(ChowError):
        check_ring_axioms(broken)  # (H*H)*H2 != H*(H*H2) once H*H = s2


def test_gm4_schubert_products():
    model = make_variety_model("GM4fold")
    H2, s2 = model.cls("H2"), model.cls("s2")
    assert integrate(model, multiply(model, H2, H2)) == 10
    assert integrate(model, multiply(model, H2, s2)) == 6
    assert integrate(model, multiply(model, s2, s2)) == 4
    assert multiply(model, model.cls("H"), model.cls("H")) == H2
