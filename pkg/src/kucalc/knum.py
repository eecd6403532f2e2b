"""Numerical Grothendieck lattices: rank-2 Euler-form lattices and Mukai lattices.

Three rank-2 lattices appear, each with an explicit basis of Chern
characters on its variety and an integer Gram matrix of the Euler form:

* ``mu``     on the quartic double solid, Gram ((-1,-1),(-1,-2))
* ``kappa``  on the GM threefold, Gram ((-1,0),(0,-1))
* ``lambda`` on the GM fourfold, Gram ((-2,0),(0,-2))

The stored Gram matrices are recomputed from the Chern characters via
the Euler pairing at construction time and must agree exactly.

K3 classes are stored as Mukai vectors (r, c, s) with c in the Picard
lattice and s = r + deg ch_2, so every entry is an integer; the Mukai
pairing <(r,c,s),(r',c',s')> = c.c' - rs' - r's equals -chi.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chow import GradedClass, VarietyModel, make_variety_model
from .grr import GrrError, euler_pairing
from .linalg import solve_rational

Q = Fraction

BASIS_NAMES = ("mu", "kappa", "lambda")


class KnumError(ValueError):
    """Basis mismatch, class not in span, or non-integral coordinates."""


@dataclass(frozen=True)
class KuBasis:
    name: str
    model: VarietyModel
    basis_ch: tuple  # (GradedClass, GradedClass)
    gram: tuple      # ((int,int),(int,int))

    @property
    def rank(self) -> int:
        return len(self.basis_ch)


@dataclass(frozen=True)
class KnumClass:
    basis: KuBasis
    coords: tuple  # pair of ints

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    def ch(self) -> GradedClass:
        out = self.basis.model.zero()
        for c, b in zip(self.coords, self.basis.basis_ch):
            out = out + c * b
        return out

    def __add__(self, other: "KnumClass") -> "KnumClass":
        _same_basis(self, other)
        return KnumClass(self.basis, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "KnumClass") -> "KnumClass":
        _same_basis(self, other)
        return KnumClass(self.basis, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "KnumClass":
        return KnumClass(self.basis, tuple(-a for a in self.coords))

    def to_json(self) -> dict:
        return {"basis": self.basis.name, "coords": list(self.coords)}


def _same_basis(v: KnumClass, w: KnumClass) -> None:
    if v.basis.name != w.basis.name:
        raise KnumError(f"basis mismatch: {v.basis.name} vs {w.basis.name}")


def euler_form(basis: KuBasis, v: KnumClass, w: KnumClass) -> int:
    if v.basis.name != basis.name or w.basis.name != basis.name:
        raise KnumError("classes do not belong to the given basis")
    total = 0
    for i, vi in enumerate(v.coords):
        for j, wj in enumerate(w.coords):
            total += vi * basis.gram[i][j] * wj
    return total


def make_ku_basis(name: str) -> KuBasis:
    """Build the mu, kappa or lambda basis with its frozen Gram matrix."""
    if name == "mu":
        model = make_variety_model("QuarticDoubleSolid")
        b1 = GradedClass(model, {(0, "1"): Q(1), (2, "l"): Q(-1)})
        b2 = GradedClass(model, {(1, "H"): Q(1), (2, "l"): Q(-1), (3, "pt"): Q(-2, 3)})
        gram = ((-1, -1), (-1, -2))
    elif name == "kappa":
        model = make_variety_model("GM3fold")
        b1 = GradedClass(model, {(0, "1"): Q(1), (2, "l"): Q(-2)})
        b2 = GradedClass(model, {(0, "1"): Q(2), (1, "H"): Q(-1), (3, "pt"): Q(5, 6)})
        gram = ((-1, 0), (0, -1))
    elif name == "lambda":
        model = make_variety_model("GM4fold")
        b1 = GradedClass(
            model, {(0, "1"): Q(-2), (2, "H2"): Q(1), (2, "s2"): Q(-1), (4, "pt"): Q(-1, 2)}
        )
        b2 = GradedClass(model, {(0, "1"): Q(-4), (1, "H"): Q(2), (3, "l"): Q(-5, 3)})
        gram = ((-2, 0), (0, -2))
    else:
        raise KnumError(f"unknown basis {name!r} (one of {BASIS_NAMES})")
    basis = KuBasis(name=name, model=model, basis_ch=(b1, b2), gram=gram)
    recomputed = gram_from_ch(basis)
    if recomputed != gram:
        raise GrrError(f"{name}: Euler matrix {recomputed} != stored {gram}")
    return basis


def gram_from_ch(basis: KuBasis) -> tuple:
    """Recompute the Euler matrix of a KuBasis from its Chern characters."""
    out = []
    for bi in basis.basis_ch:
        row = []
        for bj in basis.basis_ch:
            row.append(int(euler_pairing(basis.model, bi, bj)))
        out.append(tuple(row))
    return tuple(out)


def express_in_basis(basis: KuBasis, ch: GradedClass) -> KnumClass:
    """Solve ch = a.ch(b1) + b.ch(b2) exactly; fail loudly otherwise."""
    if ch.model.name != basis.model.name:
        raise KnumError(f"class lives on {ch.model.name}, basis on {basis.model.name}")
    keys = sorted(set(ch.coeffs) | {k for b in basis.basis_ch for k in b.coeffs})
    rows = [[b.coeffs.get(k, Q(0)) for b in basis.basis_ch] for k in keys]
    rhs = [ch.coeffs.get(k, Q(0)) for k in keys]
    sol = solve_rational(rows, rhs)
    if sol is None:
        raise KnumError(f"class {ch!r} is not in the span of the {basis.name} basis")
    if any(x.denominator != 1 for x in sol):
        raise KnumError(f"non-integral {basis.name} coordinates {sol} for {ch!r}")
    return KnumClass(basis, tuple(int(x) for x in sol))


# ---------------------------------------------------------------------------
# Mukai lattices of K3 surfaces


@dataclass(frozen=True)
class MukaiVector:
    gram: tuple  # Picard Gram matrix
    r: int
    c: tuple     # integer coordinates in the Picard lattice
    s: int

    def __post_init__(self):
        object.__setattr__(self, "gram", tuple(tuple(int(x) for x in row) for row in self.gram))
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))

    def coords(self) -> tuple:
        return (self.r,) + self.c + (self.s,)

    def __add__(self, other: "MukaiVector") -> "MukaiVector":
        _same_lattice(self, other)
        return MukaiVector(self.gram, self.r + other.r,
                           tuple(a + b for a, b in zip(self.c, other.c)), self.s + other.s)

    def __sub__(self, other: "MukaiVector") -> "MukaiVector":
        return self + (-1) * other

    def __neg__(self) -> "MukaiVector":
        return (-1) * self

    def __rmul__(self, k: int) -> "MukaiVector":
        return MukaiVector(self.gram, k * self.r, tuple(k * x for x in self.c), k * self.s)

    def square(self) -> int:
        return mukai_pairing(self, self)

    def to_json(self) -> dict:
        return {"r": self.r, "c": list(self.c), "s": self.s, "gram": [list(r) for r in self.gram]}


def _same_lattice(a: MukaiVector, b: MukaiVector) -> None:
    if a.gram != b.gram:
        raise KnumError(f"Picard lattice mismatch: {a.gram} vs {b.gram}")


def mukai_pairing(a: MukaiVector, b: MukaiVector) -> int:
    _same_lattice(a, b)
    cc = sum(a.c[i] * a.gram[i][j] * b.c[j] for i in range(len(a.c)) for j in range(len(b.c)))
    return cc - a.r * b.s - b.r * a.s


def mukai_vector(k3: VarietyModel, ch: GradedClass) -> MukaiVector:
    """Mukai vector (r, c, s) of an integral K3 class; s = r + deg ch_2."""
    if k3.dim != 2 or k3.gram is None:
        raise KnumError(f"{k3.name} is not a K3 model with a Picard lattice")
    r = ch.coeff(0, "1")
    c = tuple(ch.coeff(1, n) for n in k3.graded_basis[1])
    s = r + ch.coeff(2, "pt")
    for val in (r, *c, s):
        if val.denominator != 1:
            raise KnumError(f"non-integral Mukai vector ({r}, {c}, {s})")
    return MukaiVector(k3.gram, int(r), tuple(int(x) for x in c), int(s))


def ch_from_mukai(k3: VarietyModel, w: MukaiVector) -> GradedClass:
    """Inverse of :func:`mukai_vector`."""
    if w.gram != k3.gram:
        raise KnumError("Mukai vector belongs to a different Picard lattice")
    coeffs = {(0, "1"): Q(w.r), (2, "pt"): Q(w.s - w.r)}
    for name, ci in zip(k3.graded_basis[1], w.c):
        coeffs[(1, name)] = Q(ci)
    return GradedClass(k3, coeffs)


# standard sheaf classes on a K3, as Mukai vectors


def sheaf_mukai(k3: VarietyModel, label: str) -> MukaiVector:
    """Mukai vectors of the named sheaves used throughout: O, O(D), O_x,
    I_x, O_H (hyperplane section), O_L (a line, rank-2 lattices only)."""
    from .grr import ch_line_bundle

    names = k3.graded_basis[1]
    if label == "O":
        return MukaiVector(k3.gram, 1, (0,) * len(names), 1)
    if label == "O_x":
        return MukaiVector(k3.gram, 0, (0,) * len(names), 1)
    if label == "I_x":
        return MukaiVector(k3.gram, 1, (0,) * len(names), 0)
    if label == "O_H":
        # structure sheaf of a hyperplane section: [O] - [O(-H)]
        return sheaf_mukai(k3, "O") - mukai_vector(k3, ch_line_bundle(k3, -1 * k3.cls("H")))
    if label == "O(-H)":
        return mukai_vector(k3, ch_line_bundle(k3, -1 * k3.cls("H")))
    if label == "O(H)":
        return mukai_vector(k3, ch_line_bundle(k3, k3.cls("H")))
    if label == "O_L":
        # structure sheaf of the rational curve L: ch(O_L) = L - (L^2/2) pt
        if "L" not in names:
            raise KnumError(f"{k3.name}: no curve class L in the Picard lattice")
        L2 = k3.gram[1][1]
        ch = GradedClass(k3, {(1, "L"): Q(1), (2, "pt"): Q(-L2, 2)})
        return mukai_vector(k3, ch)
    if label == "O(L)":
        if "L" not in names:
            raise KnumError(f"{k3.name}: no curve class L in the Picard lattice")
        return mukai_vector(k3, ch_line_bundle(k3, k3.cls("L")))
    raise KnumError(f"unknown sheaf label {label!r}")
