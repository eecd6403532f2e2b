"""Chern character calculus, Euler pairings and divisorial pushforward.

The Euler pairing is Hirzebruch-Riemann-Roch:

    chi(E, F) = integral of ch(E)^dual . ch(F) . td

and the pushforward along the inclusion j of a smooth divisor X in Y is
Grothendieck-Riemann-Roch:

    ch(j_* F) = j_*( ch(F) . td(T_j) ),  td(T_j) = td(O_X(X|_X))^{-1}.

A :class:`CoverSetup` bundles the data of one branched double cover
(branch divisor X inside the cover Y): the class of X in Y, the twist
degree, the push/pull maps on numerical bases, and the exceptional
collection whose mutations define the transport map of the functor
module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .chow import ChowError, GradedClass, VarietyModel, dual_ch, integrate, make_variety_model, multiply

Q = Fraction


class GrrError(ValueError):
    """Non-integral Euler characteristic or malformed setup data."""


def ch_line_bundle(model: VarietyModel, divisor: GradedClass) -> GradedClass:
    """ch(O(D)) = exp(D), truncated at the dimension of the variety."""
    if any(k != 1 for (k, _) in divisor.coeffs):
        raise ChowError("ch_line_bundle needs a purely codimension-1 class")
    result = model.unit()
    power = model.unit()
    for k in range(1, model.dim + 1):
        power = multiply(model, power, divisor)
        result = result + Q(1, factorial(k)) * power
    return result


def inverse_todd_of_divisor(model: VarietyModel, divisor: GradedClass) -> GradedClass:
    """td(O(D))^{-1} = (1 - exp(-D))/D = sum_k (-D)^k / (k+1)!."""
    result = model.unit()
    power = model.unit()
    for k in range(1, model.dim + 1):
        power = multiply(model, power, divisor)
        result = result + Q((-1) ** k, factorial(k + 1)) * power
    return result


def euler_pairing(
    model: VarietyModel,
    chE: GradedClass,
    chF: GradedClass,
    assert_integral: bool = True,
) -> Q:
    """chi(E, F) via Hirzebruch-Riemann-Roch.

    With ``assert_integral`` (the default) a non-integer result raises
    :class:`GrrError` instead of being returned: for Chern characters of
    genuine classes the pairing is an integer, so a fraction here means a
    wrong intersection table or Todd class upstream.
    """
    prod = multiply(model, multiply(model, dual_ch(model, chE), chF), model.todd)
    chi = integrate(model, prod)
    if assert_integral and chi.denominator != 1:
        raise GrrError(f"non-integral Euler pairing {chi} on {model.name}")
    return chi


@dataclass(frozen=True)
class CoverSetup:
    """One branch-divisor configuration j: X -> Y of a double cover."""

    name: str
    source: VarietyModel                    # X, the branch divisor
    target: VarietyModel                    # Y, the cover
    divisor_class: GradedClass              # class of X in Y
    twist_d: int
    pullback_map: dict                      # Y basis name -> GradedClass on X
    pushforward_map: dict                   # X basis name -> GradedClass on Y
    td_Tj: GradedClass                      # on X
    exceptional_collection: tuple           # ((name, ch on Y), ...)
    target_knum_basis: object               # knum.KuBasis
    source_kind: str                        # "k3-mukai" or "knum"
    source_knum_basis: object = None        # knum.KuBasis when source_kind == "knum"

    def pushforward(self, a: GradedClass) -> GradedClass:
        out = self.target.zero()
        for (_, name), c in a.coeffs.items():
            out = out + c * self.pushforward_map[name]
        return out

    def pullback(self, b: GradedClass) -> GradedClass:
        out = self.source.zero()
        for (_, name), c in b.coeffs.items():
            out = out + c * self.pullback_map[name]
        return out


def divisor_pushforward(setup: CoverSetup, chF: GradedClass) -> GradedClass:
    """ch(j_* F) on the target, by Grothendieck-Riemann-Roch."""
    return setup.pushforward(multiply(setup.source, chF, setup.td_Tj))


def adjoint_euler(
    setup: CoverSetup,
    chE_on_Y: GradedClass,
    chF_on_X: GradedClass,
    assert_integral: bool = False,
) -> Q:
    """chi_Y(E, j_*F) computed on X as chi_X(i*E, F) (adjunction)."""
    return euler_pairing(setup.source, setup.pullback(chE_on_Y), chF_on_X, assert_integral)


def ch_tautological_dual(model: VarietyModel) -> GradedClass:
    """ch of the restricted dual tautological bundle U^dual on a GM variety."""
    if model.name == "GM3fold":
        return GradedClass(
            model, {(0, "1"): Q(2), (1, "H"): Q(1), (2, "l"): Q(1), (3, "pt"): Q(-1, 3)}
        )
    if model.name == "GM4fold":
        return GradedClass(
            model,
            {
                (0, "1"): Q(2),
                (1, "H"): Q(1),
                (2, "H2"): Q(-1, 2),
                (2, "s2"): Q(1),
                (3, "l"): Q(-1, 3),
                (4, "pt"): Q(-1, 12),
            },
        )
    raise ChowError(f"no tautological bundle on {model.name}")


SETUP_NAMES = ("qds", "qds-line", "gm3", "gm4")


def make_cover_setup(kind: str, gram=None) -> CoverSetup:
    """Build one of the supported cover setups.

    ``qds``       quartic K3 (Picard rank 1) inside the quartic double solid
    ``qds-line``  quartic K3 containing a line, Gram ((4,1),(1,-2)) by default
    ``gm3``       degree-10 K3 inside a special GM threefold; Gram
                  ((10,x),(x,y)) required (defaults to ((10,6),(6,2)))
    ``gm4``       GM threefold inside a GM fourfold (source lattice is the
                  kappa lattice, not a Mukai lattice)
    """
    from .knum import make_ku_basis

    if kind == "qds" or kind == "qds-line":
        if gram is None:
            gram = ((4,),) if kind == "qds" else ((4, 1), (1, -2))
        source = make_variety_model("QuarticK3", gram)
        target = make_variety_model("QuarticDoubleSolid")
        divisor = 2 * target.cls("H")
        push = {
            "1": 2 * target.cls("H"),
            "H": 4 * target.cls("l"),
            "pt": target.point(),
        }
        pull = {
            "1": source.unit(),
            "H": source.cls("H"),
            "l": 2 * source.point(),
            "pt": source.zero(),
        }
        if len(gram) == 2:
            push["L"] = Q(gram[0][1]) * target.cls("l")
        exc = (
            ("O", target.unit()),
            ("O(H)", ch_line_bundle(target, target.cls("H"))),
        )
        return CoverSetup(
            name=kind,
            source=source,
            target=target,
            divisor_class=divisor,
            twist_d=2,
            pullback_map=pull,
            pushforward_map=push,
            td_Tj=inverse_todd_of_divisor(source, 2 * source.cls("H")),
            exceptional_collection=exc,
            target_knum_basis=make_ku_basis("mu"),
            source_kind="k3-mukai",
        )

    if kind == "gm3":
        if gram is None:
            gram = ((10, 6), (6, 2))
        source = make_variety_model("Degree10K3", gram)
        target = make_variety_model("GM3fold")
        divisor = target.cls("H")
        push = {
            "1": target.cls("H"),
            "H": 10 * target.cls("l"),
            "L": Q(gram[0][1]) * target.cls("l"),
            "pt": target.point(),
        }
        pull = {
            "1": source.unit(),
            "H": source.cls("H"),
            "l": source.point(),
            "pt": source.zero(),
        }
        exc = (
            ("O", target.unit()),
            ("Udual", ch_tautological_dual(target)),
        )
        return CoverSetup(
            name="gm3",
            source=source,
            target=target,
            divisor_class=divisor,
            twist_d=1,
            pullback_map=pull,
            pushforward_map=push,
            td_Tj=inverse_todd_of_divisor(source, source.cls("H")),
            exceptional_collection=exc,
            target_knum_basis=make_ku_basis("kappa"),
            source_kind="k3-mukai",
        )

    if kind == "gm4":
        source = make_variety_model("GM3fold")
        target = make_variety_model("GM4fold")
        divisor = target.cls("H")
        push = {
            "1": target.cls("H"),
            "H": target.cls("H2"),
            "l": target.cls("l"),
            "pt": target.point(),
        }
        pull = {
            "1": source.unit(),
            "H": source.cls("H"),
            "H2": 10 * source.cls("l"),
            "s2": 6 * source.cls("l"),
            "l": source.point(),
            "pt": source.zero(),
        }
        exc = (
            ("O", target.unit()),
            ("Udual", ch_tautological_dual(target)),
        )
        return CoverSetup(
            name="gm4",
            source=source,
            target=target,
            divisor_class=divisor,
            twist_d=1,
            pullback_map=pull,
            pushforward_map=push,
            td_Tj=inverse_todd_of_divisor(source, source.cls("H")),
            exceptional_collection=exc,
            target_knum_basis=make_ku_basis("lambda"),
            source_kind="knum",
            source_knum_basis=make_ku_basis("kappa"),
        )

    raise GrrError(f"unsupported setup {kind!r} (one of {SETUP_NAMES})")
