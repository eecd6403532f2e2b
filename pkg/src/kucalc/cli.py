"""Command-line front end: exact Euler pairings, Chern characters, the
cover pushforward, lifting certificates, lattice checks, and the full
verification harness.

Class expressions are integer linear combinations of named generators:

    O   O(2H)   O(-H+3L)   O_x   O_L   O_H   I_x   mu(a,b)   kappa(p,q)

e.g. ``2*O_x - I_x + O(H)``.  Exit codes: 0 success, 1 user/parse error,
2 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from .chow import ChowError, GradedClass, VarietyModel, integrate, make_variety_model, multiply
from .functor import image_lattice, kernel_lattice, phi_matrix, phi_star
from .grr import GrrError, ch_line_bundle, euler_pairing, make_cover_setup
from .k3picard import PicardError, validate_lattice
from .knum import KnumClass, KnumError, make_ku_basis, mukai_vector, sheaf_mukai
from .lift import (
    LiftError,
    all_lifts_inequality,
    brute_force_lift,
    closed_form_lift_gm3,
    closed_form_lift_qds,
    expected_dimension,
)
from .verify import run_verification

Q = Fraction


class CliError(ValueError):
    """User-facing parse or usage error."""


VARIETIES = {
    "p3": "P3",
    "qds": "QuarticDoubleSolid",
    "quartic-k3": "QuarticK3",
    "quintic-dp3": "QuinticDelPezzo3fold",
    "gm3": "GM3fold",
    "gm4": "GM4fold",
    "degree10-k3": "Degree10K3",
}


def _load_config(args) -> dict:
    path = getattr(args, "config", None) or os.environ.get("KU_LATTICE_CONFIG")
    if not path:
        return {}
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read config {path}: {exc}") from exc


def _gram_from_config(cfg: dict):
    gram = cfg.get("gram")
    if gram is None:
        return None
    return tuple(tuple(int(x) for x in row) for row in gram)


def _make_model(name: str, cfg: dict) -> VarietyModel:
    canonical = VARIETIES.get(name, name)
    return make_variety_model(canonical, _gram_from_config(cfg))


# ---------------------------------------------------------------------------
# class-expression parsing

_TERM_RE = re.compile(r"^(?:(\d+)\*?)?(.+)$")
_DIV_PART_RE = re.compile(r"([+-]?\d*)\s*([HL])")
_PAIR_RE = re.compile(r"^(mu|kappa|lambda)\((-?\d+),(-?\d+)\)$")


def _split_terms(expr: str):
    """Split a linear combination into (sign, term) pairs at top level."""
    expr = expr.replace(" ", "")
    if not expr:
        raise CliError("empty class expression")
    terms = []
    depth = 0
    sign = 1
    cur = ""
    for i, ch in enumerate(expr):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and i > 0:
            if cur:
                terms.append((sign, cur))
            sign = 1 if ch == "+" else -1
            cur = ""
        elif ch in "+-" and depth == 0 and i == 0:
            sign = 1 if ch == "+" else -1
        else:
            cur += ch
    if cur:
        terms.append((sign, cur))
    if not terms:
        raise CliError(f"cannot parse class expression {expr!r}")
    return terms


def _parse_divisor(model: VarietyModel, body: str) -> GradedClass:
    """Parse the D of O(D): signed integer combination of H and L."""
    div = model.zero()
    pos = 0
    for m in _DIV_PART_RE.finditer(body):
        coeff_txt, name = m.group(1), m.group(2)
        coeff = int(coeff_txt) if coeff_txt not in ("", "+", "-") else (1 if coeff_txt != "-" else -1)
        if name not in model.graded_basis[1]:
            raise CliError(f"{model.name} has no divisor class {name}")
        div = div + coeff * model.cls(name)
        pos = m.end()
    if pos != len(body):
        raise CliError(f"cannot parse divisor {body!r}")
    return div


def _atom_ch(model: VarietyModel, atom: str) -> GradedClass:
    """Chern character of one named generator on the given model."""
    if atom == "0":
        return model.zero()
    if atom == "O":
        return model.unit()
    if atom == "O_x":
        return model.point()
    if atom == "I_x":
        return model.unit() - model.point()
    if atom == "O_H":
        return model.unit() - ch_line_bundle(model, -1 * model.cls("H"))
    if atom == "O_L":
        if model.dim == 2:
            if "L" not in model.graded_basis[1]:
                raise CliError(f"{model.name} has no curve class L")
            L2 = model.gram[1][1]
            return GradedClass(model, {(1, "L"): Q(1), (2, "pt"): Q(-L2, 2)})
        if "l" in model.graded_basis[2]:
            # a line: ch = l + c pt with c fixed by chi(O_line) = 1
            td1 = model.todd.part(1)
            c = 1 - integrate(model, multiply(model, td1, model.cls("l")))
            return model.cls("l") + c * model.point()
        raise CliError(f"{model.name} has no line class")
    m = _PAIR_RE.match(atom)
    if m:
        basis = make_ku_basis(m.group(1))
        if basis.model.name != model.name:
            raise CliError(f"{m.group(1)}-classes live on {basis.model.name}, not {model.name}")
        return KnumClass(basis, (int(m.group(2)), int(m.group(3)))).ch()
    if atom.startswith("O(") and atom.endswith(")"):
        return ch_line_bundle(model, _parse_divisor(model, atom[2:-1]))
    raise CliError(f"unknown class {atom!r}")


def parse_class_ch(model: VarietyModel, expr: str) -> GradedClass:
    """Parse an integer linear combination into a Chern character."""
    out = model.zero()
    for sign, term in _split_terms(expr):
        m = _TERM_RE.match(term)
        coeff = int(m.group(1)) if m.group(1) else 1
        out = out + sign * coeff * _atom_ch(model, m.group(2))
    return out


def parse_source_class(setup, expr: str):
    """Parse a class expression into the source lattice of a setup."""
    if setup.source_kind == "knum":
        basis = setup.source_knum_basis
        total = KnumClass(basis, (0, 0))
        for sign, term in _split_terms(expr):
            m = _TERM_RE.match(term)
            coeff = (int(m.group(1)) if m.group(1) else 1) * sign
            if m.group(2) == "0":
                continue
            pm = _PAIR_RE.match(m.group(2))
            if not pm or pm.group(1) != basis.name:
                raise CliError(f"setup {setup.name} expects {basis.name}(p,q) classes")
            total = total + KnumClass(
                basis, (coeff * int(pm.group(2)), coeff * int(pm.group(3)))
            )
        return total
    ch = parse_class_ch(setup.source, expr)
    return mukai_vector(setup.source, ch)


# ---------------------------------------------------------------------------
# pretty-printing


def format_rational(x: Fraction) -> str:
    return str(x)


def format_graded(ch: GradedClass) -> str:
    if not ch.coeffs:
        return "0"
    parts = []
    for (codim, name), v in sorted(ch.coeffs.items()):
        parts.append(f"{v}" if name == "1" else f"{v}*{name}")
    return " + ".join(parts).replace("+ -", "- ")


def graded_json(ch: GradedClass) -> dict:
    return {f"{codim}.{name}": str(v) for (codim, name), v in sorted(ch.coeffs.items())}


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_euler(args) -> int:
    cfg = _load_config(args)
    model = _make_model(args.variety, cfg)
    chE = parse_class_ch(model, args.classE)
    chF = parse_class_ch(model, args.classF)
    chi = euler_pairing(model, chE, chF, assert_integral=False)
    _emit(args, {"variety": model.name, "chi": str(chi)}, str(chi))
    return 0


def cmd_chern(args) -> int:
    cfg = _load_config(args)
    model = _make_model(args.variety, cfg)
    ch = parse_class_ch(model, args.expr)
    _emit(args, {"variety": model.name, "ch": graded_json(ch)}, format_graded(ch))
    return 0


def _setup_from_args(args):
    cfg = _load_config(args)
    return make_cover_setup(args.setup, _gram_from_config(cfg))


def cmd_phi(args) -> int:
    setup = _setup_from_args(args)
    src = parse_source_class(setup, args.expr)
    out = phi_star(setup, src)
    _emit(args, out.to_json(), f"{out.basis.name}{out.coords}")
    return 0


def cmd_image(args) -> int:
    setup = _setup_from_args(args)
    pmap = phi_matrix(setup)
    img = image_lattice(pmap)
    ker = kernel_lattice(pmap)
    payload = {
        "matrix": [list(r) for r in pmap.matrix],
        "source_basis": list(pmap.source_labels),
        "image": img.to_json(),
        "kernel": ker.to_json(),
    }
    lines = [
        f"matrix rows: {list(list(r) for r in pmap.matrix)} on basis {list(pmap.source_labels)}",
        f"image HNF columns: {[list(c) for c in img.hnf_columns]}",
        f"kernel rank {ker.rank}, gram {[list(r) for r in ker.gram]}, "
        f"negative definite: {ker.negative_definite}",
    ]
    if args.member:
        basis = setup.target_knum_basis
        m = _PAIR_RE.match(args.member.replace(" ", ""))
        if not m or m.group(1) != basis.name:
            raise CliError(f"--member expects {basis.name}(a,b)")
        v = KnumClass(basis, (int(m.group(2)), int(m.group(3))))
        payload["member"] = {"v": v.to_json(), "in_image": img.contains(v)}
        lines.append(f"member {v.coords}: {img.contains(v)}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_lift(args) -> int:
    if args.fano == "qds":
        cert = closed_form_lift_qds(args.a, args.b)
    elif args.fano == "gm3":
        cert = closed_form_lift_gm3(args.a, args.b)
    else:
        raise CliError(f"unknown fano type {args.fano!r}")
    payload = cert.to_json()
    text = (
        f"v = {cert.v.basis.name}{cert.v.coords}, lattice {cert.gram}\n"
        f"w = (r={cert.w.r}, c={cert.w.c}, s={cert.w.s}), w^2 = {cert.w_square}, "
        f"branch {cert.branch}\n"
        f"w^2 >= -2: {cert.nonneg_ok}; wall inequality: {cert.wall_ok}"
    )
    if args.brute:
        from .lift import _setup

        kind = "qds-line" if args.fano == "qds" else "gm3"
        setup = _setup(kind, cert.gram)
        lifts = brute_force_lift(setup, cert.v0, args.box)
        payload["brute_force"] = [w.to_json() for w in lifts]
        text += f"\nbrute force (box {args.box}): {len(lifts)} lifts with w^2 >= -2"
    _emit(args, payload, text)
    return 0


def cmd_lift_all(args) -> int:
    setup = _setup_from_args(args)
    pmap = phi_matrix(setup)
    basis = setup.target_knum_basis
    v = KnumClass(basis, (args.a, args.b))
    rep = all_lifts_inequality(pmap, v, args.box)
    text = (
        f"v = {basis.name}{v.coords}: complete={rep.complete}, "
        f"max w^2 = {rep.max_w_square}, all lifts satisfy the wall inequality: {rep.all_satisfy}"
    )
    _emit(args, rep.to_json(), text)
    return 0


def cmd_lattice_check(args) -> int:
    gram = ((args.d, args.x), (args.x, args.y))
    family = args.family
    if family is None:
        if args.d == 4:
            family = "quartic-line"
        elif args.y == 0:
            family = "10-5-0"
        elif args.y == 4:
            family = "10-x-4"
        else:
            family = "10-x-2"
    rep = validate_lattice(gram, family)
    text = (
        f"gram {gram} family {family}: det={rep.det} (hyperbolic: {rep.hyperbolic_ok}), "
        f"H^perp generated by {rep.v0} of square {rep.v0_square} "
        f"((-2)-class orthogonal to H: {rep.minus_two_orthogonal}), "
        f"family condition: {rep.family_condition_ok} -> verdict {rep.verdict}"
    )
    _emit(args, rep.to_json(), text)
    return 0


def cmd_dim(args) -> int:
    basis = make_ku_basis(args.basis)
    v = KnumClass(basis, (args.a, args.b))
    d = expected_dimension(basis, v, args.kind)
    _emit(args, {"basis": args.basis, "v": list(v.coords), "kind": args.kind, "dim": d}, str(d))
    return 0


def cmd_verify_paper(args) -> int:
    rep = run_verification(args.filter)
    if args.json:
        print(json.dumps(rep.to_json(), sort_keys=True))
    else:
        for r in rep.results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status} {r.check_id}: {r.description}")
            if not r.passed:
                print(f"     expected {r.expected}, computed {r.computed}")
        s = rep.to_json()["summary"]
        print(f"{s['pass']}/{s['total']} checks passed")
    return 0 if rep.all_pass else 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kucalc", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--config", help="JSON config file (default: $KU_LATTICE_CONFIG)")

    sp = sub.add_parser("euler", help="Euler pairing chi(E, F) on a variety")
    sp.add_argument("--variety", required=True, choices=sorted(VARIETIES))
    sp.add_argument("classE")
    sp.add_argument("classF")
    common(sp)
    sp.set_defaults(fn=cmd_euler)

    sp = sub.add_parser("chern", help="Chern character of a class expression")
    sp.add_argument("--variety", required=True, choices=sorted(VARIETIES))
    sp.add_argument("expr")
    common(sp)
    sp.set_defaults(fn=cmd_chern)

    sp = sub.add_parser("phi", help="pushforward of a source class to the rank-2 lattice")
    sp.add_argument("--setup", required=True, choices=["qds", "qds-line", "gm3", "gm4"])
    sp.add_argument("expr")
    common(sp)
    sp.set_defaults(fn=cmd_phi)

    sp = sub.add_parser("image", help="matrix, image and kernel of the pushforward")
    sp.add_argument("--setup", required=True, choices=["qds", "qds-line", "gm3", "gm4"])
    sp.add_argument("--member", help="class to test for image membership, e.g. 'mu(1,0)'")
    common(sp)
    sp.set_defaults(fn=cmd_image)

    sp = sub.add_parser("lift", help="closed-form lifting certificate for a rank-2 class")
    sp.add_argument("--fano", required=True, choices=["qds", "gm3"])
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)
    sp.add_argument("--box", type=int, default=12, help="bound for --brute enumeration")
    sp.add_argument("--brute", action="store_true", help="also enumerate lifts by brute force")
    common(sp)
    sp.set_defaults(fn=cmd_lift)

    sp = sub.add_parser("lift-all", help="wall inequality over the entire lifting coset")
    sp.add_argument("--setup", required=True, choices=["qds", "qds-line", "gm3", "gm4"])
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)
    sp.add_argument("--box", type=int, default=12)
    common(sp)
    sp.set_defaults(fn=cmd_lift_all)

    sp = sub.add_parser("lattice-check", help="validity of a rank-2 K3 Picard lattice")
    sp.add_argument("d", type=int, help="H^2 (degree)")
    sp.add_argument("x", type=int, help="H.L")
    sp.add_argument("y", type=int, help="L^2")
    sp.add_argument("--family", choices=["10-x-2", "10-5-0", "10-x-4", "quartic-line"])
    common(sp)
    sp.set_defaults(fn=cmd_lattice_check)

    sp = sub.add_parser("dim", help="expected moduli dimension of a rank-2 class")
    sp.add_argument("--basis", required=True, choices=["mu", "kappa", "lambda"])
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)
    sp.add_argument("--kind", default="Enriques", choices=["Enriques", "CY2"])
    common(sp)
    sp.set_defaults(fn=cmd_dim)

    sp = sub.add_parser("verify-paper", help="run every reference check")
    sp.add_argument("--filter", help="only run checks matching this pattern")
    common(sp)
    sp.set_defaults(fn=cmd_verify_paper)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors; those are user errors
        return 1 if exc.code else 0
    try:
        return args.fn(args)
    except (CliError, LiftError, PicardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ChowError, GrrError, KnumError) as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
