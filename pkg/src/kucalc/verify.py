"""Replay of every reference computation as a deterministic check registry.

Each check has a stable id, a human-readable description, and a thunk
returning (expected, computed); it passes iff the two are equal as exact
values.  The registry powers both the ``verify-paper`` CLI subcommand
and the acceptance test suite.  All randomized property suites use a
fixed seed, so output is reproducible byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .chow import GradedClass, check_ring_axioms, integrate, make_variety_model, multiply
from .functor import (
    image_lattice,
    kernel_lattice,
    mutate_class,
    phi_matrix,
    phi_star,
    phi_star_ch,
)
from .grr import (
    adjoint_euler,
    ch_line_bundle,
    ch_tautological_dual,
    divisor_pushforward,
    euler_pairing,
    inverse_todd_of_divisor,
    make_cover_setup,
)
from .k3picard import validate_lattice
from .knum import (
    KnumClass,
    ch_from_mukai,
    express_in_basis,
    gram_from_ch,
    make_ku_basis,
    mukai_pairing,
    mukai_vector,
    sheaf_mukai,
)
from .lift import (
    _mukai_problem,
    _phi_map,
    _setup,
    all_lifts_inequality,
    brute_force_lift,
    check_wall_inequality,
    closed_form_lift_gm3,
    closed_form_lift_qds,
    expected_dimension,
)

Q = Fraction
SEED = 94550


@dataclass
class CheckResult:
    check_id: str
    description: str
    expected: object
    computed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def to_json(self) -> dict:
        return {
            "check_id": self.check_id,
            "description": self.description,
            "expected": str(self.expected),
            "computed": str(self.computed),
            "pass": self.passed,
        }


def _coprime_pairs(bound: int):
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if (a, b) != (0, 0) and gcd(a, b) == 1:
                yield a, b


def _fails(label_results):
    """Collapse a list of (label, ok) into '<n> failures [first...]'."""
    bad = [label for label, ok in label_results if not ok]
    if not bad:
        return "0 failures"
    return f"{len(bad)} failures (first: {bad[:3]})"


# ---------------------------------------------------------------------------
# check groups; each returns a list of CheckResult


def checks_euler_matrices() -> list:
    out = []
    for name, gram in [("mu", ((-1, -1), (-1, -2))), ("kappa", ((-1, 0), (0, -1)))]:
        basis = make_ku_basis(name)
        out.append(CheckResult(
            f"euler.{name}-gram",
            f"Euler matrix of the {name} basis recomputed from Chern characters",
            gram, gram_from_ch(basis),
        ))
    return out


def checks_qds_pipeline() -> list:
    out = []
    setup = make_cover_setup("qds-line")
    Y, X = setup.target, setup.source
    chO = Y.unit()
    chOH = ch_line_bundle(Y, Y.cls("H"))
    jOXH = divisor_pushforward(setup, ch_line_bundle(X, X.cls("H")))
    out.append(CheckResult("qds.chi-O-O(H)", "chi(O_Y, O_Y(H)) on the quartic double solid",
                           Q(4), euler_pairing(Y, chO, chOH)))
    out.append(CheckResult("qds.chi-O(H)-jO_X(H)", "chi(O_Y(H), j_*O_X(H))",
                           Q(2), euler_pairing(Y, chOH, jOXH)))
    out.append(CheckResult("qds.chi-O-jO_X(H)", "chi(O_Y, j_*O_X(H))",
                           Q(4), euler_pairing(Y, chO, jOXH)))
    anchors = [("O_x", (2, -1)), ("O(-H)", (2, 0)), ("O", (2, -2)),
               ("O_H", (0, -2)), ("O_L", (3, -2))]
    for lab, exp in anchors:
        out.append(CheckResult(
            f"qds.phi-{lab}", f"Phi_*([{lab}]) in the mu basis",
            exp, phi_star(setup, sheaf_mukai(X, lab)).coords,
        ))
    mu = make_ku_basis("mu")
    ch_Kx = GradedClass(Y, {(0, "1"): Q(2), (1, "H"): Q(-1), (2, "l"): Q(-1), (3, "pt"): Q(2, 3)})
    kx = express_in_basis(mu, ch_Kx)
    out.append(CheckResult("qds.Kx-class", "class of K_x (ch = 2 - H - H^2/2 + 2p/3) in mu",
                           (2, -1), kx.coords))
    out.append(CheckResult("qds.chi-Kx-Kx", "chi(K_x, K_x)",
                           Q(-2), euler_pairing(Y, ch_Kx, ch_Kx)))
    return out


def checks_gm3_pipeline() -> list:
    out = []
    setup = make_cover_setup("gm3")  # Gram ((10,6),(6,2))
    Y, S = setup.target, setup.source
    jOS = divisor_pushforward(setup, S.unit())
    out.append(CheckResult("gm3.chi-O-O_X", "chi(O_Y, j_*O_X) on the GM threefold",
                           Q(2), euler_pairing(Y, Y.unit(), jOS)))
    udual = ch_tautological_dual(Y)
    mutated = mutate_class(Y, jOS, udual)
    out.append(CheckResult("gm3.chi-O-LU-jO_X", "chi(O_Y, L_{U^dual} j_*O_X)",
                           Q(-23), euler_pairing(Y, Y.unit(), mutated)))
    ch_img = phi_star_ch(setup, sheaf_mukai(S, "O(-H)"))
    expected_ch = GradedClass(
        Y, {(0, "1"): Q(13), (1, "H"): Q(-4), (2, "l"): Q(-10), (3, "pt"): Q(10, 3)}
    )
    out.append(CheckResult("gm3.ch-phi-O(-H)", "ch(Phi(O_X(-H))) = 13 - 4H - H^2 + 10p/3",
                           expected_ch.coeffs, ch_img.coeffs))
    for lab, exp in [("O(-H)", (5, 4)), ("O", (0, 4)), ("O_x", (1, 2))]:
        out.append(CheckResult(
            f"gm3.phi-{lab}", f"Phi_*([{lab}]) in the kappa basis",
            exp, phi_star(setup, sheaf_mukai(S, lab)).coords,
        ))
    results = []
    for x in range(6, 27):
        sp = _setup("gm3", ((10, x), (x, 2)))
        got = phi_star(sp, sheaf_mukai(sp.source, "O(L)")).coords
        results.append((f"x={x}:{got}", got == (1, 6 + x)))
    out.append(CheckResult("gm3.phi-O(L)-family", "Phi_*([O_S(L)]) = kappa_1 + (6+x) kappa_2 for 6 <= x <= 26",
                           "0 failures", _fails(results)))
    for gram, exp, tag in [(((10, 5), (5, 0)), (0, 9), "50"),
                           (((10, 9), (9, 4)), (2, 17), "94"),
                           (((10, 7), (7, 4)), (2, 15), "74")]:
        sp = _setup("gm3", gram)
        out.append(CheckResult(
            f"gm3.phi-O(L)-{tag}", f"Phi_*([O_S(L)]) on Gram {gram}",
            exp, phi_star(sp, sheaf_mukai(sp.source, "O(L)")).coords,
        ))
    return out


def checks_gm4_pipeline() -> list:
    out = []
    setup = make_cover_setup("gm4")
    X, W = setup.source, setup.target
    td_x = GradedClass(X, {(0, "1"): Q(1), (1, "H"): Q(1, 2), (2, "l"): Q(17, 6), (3, "pt"): Q(1)})
    out.append(CheckResult("gm4.td-X", "td(X) = 1 + H/2 + 17H^2/60 + pt on the GM threefold",
                           td_x.coeffs, X.todd.coeffs))
    td_w = GradedClass(W, {(0, "1"): Q(1), (1, "H"): Q(1), (2, "H2"): Q(2, 3),
                           (2, "s2"): Q(-1, 12), (3, "l"): Q(17, 6), (4, "pt"): Q(1)})
    out.append(CheckResult("gm4.td-W", "td(W) = 1 + H + (2H^2/3 - s2/12) + 17H^3/60 + pt",
                           td_w.coeffs, W.todd.coeffs))
    td_tj = GradedClass(X, {(0, "1"): Q(1), (1, "H"): Q(-1, 2), (2, "l"): Q(5, 3), (3, "pt"): Q(-5, 12)})
    out.append(CheckResult("gm4.td-Tj", "td(T_j) = 1 - H/2 + H^2/6 - 5/12 (generic series = stated value)",
                           td_tj.coeffs, setup.td_Tj.coeffs))
    kappa = make_ku_basis("kappa")
    ch1 = phi_star_ch(setup, KnumClass(kappa, (1, 0)))
    exp1 = GradedClass(W, {(0, "1"): Q(-2), (2, "H2"): Q(1), (2, "s2"): Q(-1), (4, "pt"): Q(-1, 2)})
    out.append(CheckResult("gm4.ch-image-kappa1", "ch of the image of kappa_1: -2 + s_{1,1} - pt/2",
                           exp1.coeffs, ch1.coeffs))
    ch2 = phi_star_ch(setup, KnumClass(kappa, (0, 1)))
    exp2 = GradedClass(W, {(0, "1"): Q(-4), (1, "H"): Q(2), (3, "l"): Q(-5, 3)})
    out.append(CheckResult("gm4.ch-image-kappa2", "ch of the image of kappa_2: -4 + 2H - H^3/6",
                           exp2.coeffs, ch2.coeffs))
    out.append(CheckResult("gm4.lambda-kappa1", "image of kappa_1 in the lambda basis",
                           (1, 0), phi_star(setup, KnumClass(kappa, (1, 0))).coords))
    out.append(CheckResult("gm4.lambda-kappa2", "image of kappa_2 in the lambda basis",
                           (0, 1), phi_star(setup, KnumClass(kappa, (0, 1))).coords))
    out.append(CheckResult("gm4.lambda-gram", "Euler matrix of the lambda basis via Riemann-Roch",
                           ((-2, 0), (0, -2)), gram_from_ch(make_ku_basis("lambda"))))
    return out


def checks_lift_qds() -> list:
    mu = make_ku_basis("mu")
    results = []
    for a, b in _coprime_pairs(12):
        cert = closed_form_lift_qds(a, b)
        ok = (
            cert.nonneg_ok
            and cert.wall_ok
            and cert.w_square + 2 < a * a + 2 * a * b + 2 * b * b + 1
            and check_wall_inequality(mu, KnumClass(mu, (a, b)), cert.w_square)
        )
        results.append((f"({a},{b})", ok))
    return [CheckResult(
        "lift.qds-closed-forms",
        "quartic double solid lifts: Phi_*(w)=v, w^2 >= -2, branch formula, wall inequality, |a|,|b| <= 12",
        "0 failures", _fails(results),
    )]


def checks_lift_gm3() -> list:
    out = []
    results = []
    for p, q in _coprime_pairs(12):
        if q == 0 and abs(p) != 1:
            continue
        cert = closed_form_lift_gm3(p, q)
        results.append((f"({p},{q})", cert.nonneg_ok and cert.wall_ok))
    out.append(CheckResult(
        "lift.gm3-closed-forms",
        "GM threefold lifts: Phi_*(w)=v, w^2 >= -2, wall inequality, covered coprime |p|,|q| <= 12",
        "0 failures", _fails(results),
    ))
    for pq, gram, tag in [((0, 1), ((10, 5), (5, 0)), "01"),
                          ((2, 1), ((10, 9), (9, 4)), "21"),
                          ((-2, 1), ((10, 7), (7, 4)), "m21")]:
        cert = closed_form_lift_gm3(*pq)
        out.append(CheckResult(
            f"lift.gm3-special-{tag}",
            f"special case v = {pq}: Gram {gram} and w^2 = -2",
            (gram, -2), (cert.gram, cert.w_square),
        ))
    return out


def checks_oracle() -> list:
    out = []
    mu = make_ku_basis("mu")
    kappa = make_ku_basis("kappa")
    qds_line = make_cover_setup("qds-line")
    pmap = _phi_map("qds-line", qds_line.source.gram)
    results = []
    for a, b in _coprime_pairs(12):
        cert = closed_form_lift_qds(a, b)
        box = max(12, max(abs(x) for x in cert.w.coords()))
        lifts = brute_force_lift(qds_line, KnumClass(mu, (a, b)), box)
        ok = any(l.coords() == cert.w.coords() for l in lifts)
        ok = ok and all(pmap.apply(l).coords == (a, b) for l in lifts)
        ok = ok and all(phi_star(qds_line, l).coords == (a, b) for l in lifts[:2])
        results.append((f"({a},{b})", ok))
    out.append(CheckResult(
        "oracle.qds-brute-force",
        "enumeration finds every closed-form quartic-double-solid lift and only genuine lifts",
        "0 failures", _fails(results),
    ))
    qds = make_cover_setup("qds")
    results = []
    for a, b in _coprime_pairs(12):
        if a % 2 == 0:
            continue
        results.append((f"({a},{b})", brute_force_lift(qds, KnumClass(mu, (a, b)), 12) == []))
    out.append(CheckResult(
        "oracle.qds-odd-no-lift",
        "no lift exists on the Picard-rank-1 quartic K3 when a is odd, |a|,|b| <= 12",
        "0 failures", _fails(results),
    ))
    results = []
    for p, q in _coprime_pairs(12):
        if q == 0 and abs(p) != 1:
            continue
        cert = closed_form_lift_gm3(p, q)
        sp = _setup("gm3", cert.gram)
        box = max(12, max(abs(x) for x in cert.w.coords()))
        lifts = brute_force_lift(sp, KnumClass(kappa, (p, q)), box)
        ok = any(l.coords() == cert.w.coords() for l in lifts)
        gram_map = _phi_map("gm3", cert.gram)
        ok = ok and all(gram_map.apply(l).coords == (p, q) for l in lifts)
        results.append((f"({p},{q})", ok))
    out.append(CheckResult(
        "oracle.gm3-brute-force",
        "enumeration finds every closed-form GM-threefold lift and only genuine lifts",
        "0 failures", _fails(results),
    ))
    return out


def checks_lattices() -> list:
    out = []
    results = []
    for x in range(6, 27):
        rep = validate_lattice(((10, x), (x, 2)), "10-x-2")
        results.append((f"x={x}", rep.verdict))
    out.append(CheckResult("lattice.10-x-2", "((10,x),(x,2)) valid for 6 <= x <= 26",
                           "0 failures", _fails(results)))
    for gram, family, tag in [(((10, 5), (5, 0)), "10-5-0", "10-5-0"),
                              (((10, 7), (7, 4)), "10-x-4", "10-7-4"),
                              (((10, 9), (9, 4)), "10-x-4", "10-9-4"),
                              (((4, 1), (1, -2)), "quartic-line", "4-1-m2")]:
        out.append(CheckResult(f"lattice.{tag}", f"Gram {gram} is a valid specialization",
                               True, validate_lattice(gram, family).verdict))
    out.append(CheckResult("lattice.10-5-2-fails", "((10,5),(5,2)) fails the x != 5 condition",
                           False, validate_lattice(((10, 5), (5, 2)), "10-x-2").verdict))
    return out


def _all_models():
    return [
        make_variety_model("P3"),
        make_variety_model("QuarticDoubleSolid"),
        make_variety_model("QuarticK3"),
        make_variety_model("QuarticK3", ((4, 1), (1, -2))),
        make_variety_model("QuinticDelPezzo3fold"),
        make_variety_model("GM3fold"),
        make_variety_model("GM4fold"),
        make_variety_model("Degree10K3", ((10, 6), (6, 2))),
    ]


def checks_properties() -> list:
    out = []
    rng = random.Random(SEED)

    # Phi_* linearity and pipeline-vs-matrix agreement, 500 vectors per setup
    results = []
    for kind in ("qds", "qds-line", "gm3", "gm4"):
        setup = make_cover_setup(kind)
        pmap = phi_matrix(setup)
        prob = _mukai_problem(kind, setup.source.gram) if setup.source_kind == "k3-mukai" else None

        def rand_class():
            if prob is not None:
                coords = [rng.randint(-9, 9) for _ in range(len(prob.gram))]
                return prob.vector(coords)
            return KnumClass(setup.source_knum_basis, (rng.randint(-9, 9), rng.randint(-9, 9)))

        for i in range(500):
            w1, w2 = rand_class(), rand_class()
            s1, s2 = phi_star(setup, w1), phi_star(setup, w2)
            ok = phi_star(setup, w1 + w2).coords == (s1 + s2).coords
            ok = ok and phi_star(setup, -w1).coords == (-s1).coords
            ok = ok and pmap.apply(w1).coords == s1.coords
            if not ok:
                results.append((f"{kind}#{i}", False))
        results.append((kind, True))
    out.append(CheckResult("prop.phi-linearity", "Phi_* additivity, negation, matrix agreement (500 random vectors per setup)",
                           "0 failures", _fails(results)))

    # adjunction: chi_Y(E, j_*F) = chi_X(i*E, F), exhaustively over bases
    results = []
    for kind in ("qds", "qds-line", "gm3", "gm4"):
        setup = make_cover_setup(kind)
        for ename, chE in setup.exceptional_collection:
            for names in setup.source.graded_basis:
                for n in names:
                    f = setup.source.cls(n)
                    lhs = euler_pairing(setup.target, chE, divisor_pushforward(setup, f),
                                        assert_integral=False)
                    rhs = adjoint_euler(setup, chE, f)
                    results.append((f"{kind}:{ename}:{n}", lhs == rhs))
    out.append(CheckResult("prop.adjunction", "chi_Y(E, j_*F) = chi_X(i*E, F) for all exceptional E and basis F",
                           "0 failures", _fails(results)))

    # projection formula over all basis pairs
    results = []
    for kind in ("qds", "qds-line", "gm3", "gm4"):
        setup = make_cover_setup(kind)
        for names_a in setup.source.graded_basis:
            for na in names_a:
                a = setup.source.cls(na)
                for names_b in setup.target.graded_basis:
                    for nb in names_b:
                        b = setup.target.cls(nb)
                        lhs = integrate(setup.source, multiply(setup.source, a, setup.pullback(b)))
                        rhs = integrate(setup.target, multiply(setup.target, setup.pushforward(a), b))
                        results.append((f"{kind}:{na}.{nb}", lhs == rhs))
    out.append(CheckResult("prop.projection-formula", "deg_X(a . i*b) = deg_Y(j_*a . b) over all basis pairs",
                           "0 failures", _fails(results)))

    # Euler-matrix symmetry of the rank-2 lattices
    results = []
    for name in ("mu", "kappa", "lambda"):
        g = gram_from_ch(make_ku_basis(name))
        results.append((name, g[0][1] == g[1][0]))
    out.append(CheckResult("prop.euler-symmetry", "recomputed Euler matrices are symmetric",
                           "0 failures", _fails(results)))

    # mukai pairing = -chi round trip on random integral classes
    results = []
    for gram in (((4,),), ((4, 1), (1, -2)), ((10, 6), (6, 2)), ((10, 5), (5, 0))):
        name = "QuarticK3" if gram[0][0] == 4 else "Degree10K3"
        k3 = make_variety_model(name, gram)
        rho = len(gram)
        for i in range(200):
            coords = [rng.randint(-8, 8) for _ in range(rho + 2)]
            from .knum import MukaiVector

            w1 = MukaiVector(gram, coords[0], tuple(coords[1:1 + rho]), coords[1 + rho])
            coords = [rng.randint(-8, 8) for _ in range(rho + 2)]
            w2 = MukaiVector(gram, coords[0], tuple(coords[1:1 + rho]), coords[1 + rho])
            chi = euler_pairing(k3, ch_from_mukai(k3, w1), ch_from_mukai(k3, w2))
            ok = mukai_pairing(w1, w2) == -chi
            ok = ok and mukai_vector(k3, ch_from_mukai(k3, w1)) == w1
            if not ok:
                results.append((f"{gram}#{i}", False))
    out.append(CheckResult("prop.mukai-roundtrip", "mukai pairing equals -chi and vector/ch conversion round-trips",
                           "0 failures", _fails(results)))

    # ring axioms of every multiplication table
    results = []
    for model in _all_models():
        try:
            check_ring_axioms(model)
            results.append((model.name, True))
        except Exception:
            results.append((model.name, False))
    out.append(CheckResult("prop.ring-axioms", "associativity and commutativity of every intersection table",
                           "0 failures", _fails(results)))

    # chi(O, O) per model, and twist invariance chi(O(D), O(D)) = chi(O, O)
    results = []
    for model in _all_models():
        expected = Q(2) if model.dim == 2 else Q(1)
        results.append((f"{model.name}:chiOO", integrate(model, model.todd) == expected))
        for i in range(10):
            div = model.zero()
            for n in model.graded_basis[1]:
                div = div + rng.randint(-4, 4) * model.cls(n)
            e = ch_line_bundle(model, div)
            results.append((f"{model.name}:twist#{i}",
                            euler_pairing(model, e, e) == expected))
    out.append(CheckResult("prop.chi-OO", "chi(O,O) is 1 on the Fanos and 2 on the K3s, and is twist invariant",
                           "0 failures", _fails(results)))

    # chi(v,v) <= -1 on the mu and kappa lattices
    from .knum import euler_form

    results = []
    for name in ("mu", "kappa"):
        basis = make_ku_basis(name)
        worst = min(
            euler_form(basis, KnumClass(basis, (a, b)), KnumClass(basis, (a, b)))
            for a in range(-20, 21) for b in range(-20, 21) if (a, b) != (0, 0)
        )
        # both forms are negative definite, so the boxed maximum is global
        results.append((name, worst <= -1 and euler_form(
            basis, KnumClass(basis, (1, 0)), KnumClass(basis, (1, 0))) <= -1))
    out.append(CheckResult("prop.chi-vv-negative", "chi(v,v) <= -1 for every nonzero class in the mu and kappa lattices",
                           "0 failures", _fails(results)))

    # image and kernel structure
    qds = make_cover_setup("qds")
    qds_line = make_cover_setup("qds-line")
    mu = make_ku_basis("mu")
    img1 = image_lattice(phi_matrix(qds))
    img2 = image_lattice(phi_matrix(qds_line))
    out.append(CheckResult("prop.qds-image", "image over the rank-1 K3 is {a even}; with a line it is everything",
                           (False, True, True),
                           (img1.contains(KnumClass(mu, (1, 0))),
                            img1.contains(KnumClass(mu, (2, -1))),
                            img2.contains(KnumClass(mu, (1, 0))))))
    k1 = kernel_lattice(phi_matrix(qds))
    k2 = kernel_lattice(phi_matrix(qds_line))
    out.append(CheckResult("prop.qds-kernels", "kernel ranks 1 and 2, both negative definite",
                           (1, True, 2, True),
                           (k1.rank, k1.negative_definite, k2.rank, k2.negative_definite)))
    rep = all_lifts_inequality(phi_matrix(qds_line), KnumClass(mu, (2, 0)))
    out.append(CheckResult("prop.qds-all-lifts-20", "every lift of (2,0) satisfies the wall inequality, complete verdict",
                           (True, True), (rep.complete, rep.all_satisfy)))
    return out


def checks_dimensions() -> list:
    mu = make_ku_basis("mu")
    kappa = make_ku_basis("kappa")
    lam = make_ku_basis("lambda")
    return [
        CheckResult("dim.mu-01-enriques", "expected dimension of the mu-class (0,1), Enriques moduli",
                    3, expected_dimension(mu, KnumClass(mu, (0, 1)), "Enriques")),
        CheckResult("dim.lambda-10-cy2", "expected dimension of the lambda-class (1,0), CY2 moduli",
                    4, expected_dimension(lam, KnumClass(lam, (1, 0)), "CY2")),
        CheckResult("dim.kappa-11-enriques", "expected dimension of the kappa-class (1,1), Enriques moduli",
                    3, expected_dimension(kappa, KnumClass(kappa, (1, 1)), "Enriques")),
    ]


GROUPS = (
    ("euler", checks_euler_matrices),
    ("qds", checks_qds_pipeline),
    ("gm3", checks_gm3_pipeline),
    ("gm4", checks_gm4_pipeline),
    ("lift-qds", checks_lift_qds),
    ("lift-gm3", checks_lift_gm3),
    ("oracle", checks_oracle),
    ("lattice", checks_lattices),
    ("prop", checks_properties),
    ("dim", checks_dimensions),
)


@dataclass
class VerificationReport:
    results: list

    @property
    def n_pass(self) -> int:
        return sum(1 for r in self.results if r.passed)

    @property
    def n_fail(self) -> int:
        return len(self.results) - self.n_pass

    @property
    def all_pass(self) -> bool:
        return self.n_fail == 0

    def to_json(self) -> dict:
        return {
            "checks": [r.to_json() for r in self.results],
            "summary": {"total": len(self.results), "pass": self.n_pass, "fail": self.n_fail},
        }


def run_verification(pattern: str | None = None) -> VerificationReport:
    """Run all checks; ``pattern`` filters by group name or check id."""
    results = []
    if pattern is None:
        for _, fn in GROUPS:
            results.extend(fn())
        return VerificationReport(results=results)
    matched_groups = [fn for group, fn in GROUPS if pattern in group]
    if matched_groups:
        for fn in matched_groups:
            results.extend(fn())
    else:
        for _, fn in GROUPS:
            results.extend(r for r in fn() if pattern in r.check_id)
    return VerificationReport(results=results)
