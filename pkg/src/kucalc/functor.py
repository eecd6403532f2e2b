"""Class-level transport through the cover functor.

The pushforward Phi_* of a :class:`~kucalc.grr.CoverSetup` acts on a
class by twisting with O(dH), pushing forward along the branch divisor
(Grothendieck-Riemann-Roch) and then left-mutating through the
exceptional collection on the cover, right-to-left; the result is
expressed in the rank-2 target basis.  At class level a left mutation is

    [L_E F] = [F] - chi(E, F) [E].

Besides the pointwise map this module computes its matrix on a fixed
source basis, the Hermite normal form of the image sublattice with a
membership test, and the kernel sublattice with the restriction of the
Mukai form and a definiteness verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chow import GradedClass, VarietyModel, multiply
from .grr import CoverSetup, ch_line_bundle, divisor_pushforward, euler_pairing
from .knum import (
    KnumClass,
    KnumError,
    MukaiVector,
    ch_from_mukai,
    euler_form,
    express_in_basis,
    mukai_pairing,
    sheaf_mukai,
)
from .linalg import column_hnf, hnf_membership, integer_kernel, is_negative_definite, solve_rational

Q = Fraction


def mutate_class(model: VarietyModel, chF: GradedClass, chE: GradedClass) -> GradedClass:
    """[L_E F] = [F] - chi(E,F) [E]."""
    return chF - euler_pairing(model, chE, chF) * chE


def _source_ch(setup: CoverSetup, source_class) -> GradedClass:
    if setup.source_kind == "k3-mukai":
        if not isinstance(source_class, MukaiVector):
            raise KnumError(f"setup {setup.name} expects a Mukai vector")
        return ch_from_mukai(setup.source, source_class)
    if not isinstance(source_class, KnumClass) or (
        source_class.basis.name != setup.source_knum_basis.name
    ):
        raise KnumError(f"setup {setup.name} expects a {setup.source_knum_basis.name}-class")
    return source_class.ch()


def phi_star_ch(setup: CoverSetup, source_class) -> GradedClass:
    """The pipeline up to (not including) the basis expression: the Chern
    character on the target of twist by O(dH), pushforward, and the left
    mutations through the exceptional collection, applied right-to-left."""
    ch = _source_ch(setup, source_class)
    twist = ch_line_bundle(setup.source, setup.twist_d * setup.source.cls("H"))
    ch = multiply(setup.source, ch, twist)
    ch = divisor_pushforward(setup, ch)
    for _, chE in reversed(setup.exceptional_collection):
        ch = mutate_class(setup.target, ch, chE)
    return ch


def phi_star(setup: CoverSetup, source_class) -> KnumClass:
    """Full pipeline: twist by O(dH), push forward, mutate, express in basis."""
    return express_in_basis(setup.target_knum_basis, phi_star_ch(setup, source_class))


@dataclass(frozen=True)
class PhiMap:
    setup: CoverSetup
    source_labels: tuple     # names of the source basis classes
    source_basis: tuple      # MukaiVector or KnumClass per label
    matrix: tuple            # rows of the 2 x n integer matrix

    @property
    def columns(self) -> list:
        n = len(self.source_labels)
        return [[self.matrix[i][j] for i in range(len(self.matrix))] for j in range(n)]

    def source_coords(self, w) -> list:
        """Integer coordinates of a source class in the fixed source basis."""
        if self.setup.source_kind == "k3-mukai":
            target = [Q(x) for x in w.coords()]
            cols = [[Q(x) for x in b.coords()] for b in self.source_basis]
        else:
            target = [Q(x) for x in w.coords]
            cols = [[Q(x) for x in b.coords] for b in self.source_basis]
        rows = [[cols[j][i] for j in range(len(cols))] for i in range(len(target))]
        sol = solve_rational(rows, target)
        if sol is None or any(x.denominator != 1 for x in sol):
            raise KnumError(f"class {w} is not integral in the source basis")
        return [int(x) for x in sol]

    def apply(self, w) -> KnumClass:
        """Matrix form of phi_star; must agree with the pipeline."""
        coords = self.source_coords(w)
        out = tuple(sum(row[j] * coords[j] for j in range(len(coords))) for row in self.matrix)
        return KnumClass(self.setup.target_knum_basis, out)


def phi_matrix(setup: CoverSetup) -> PhiMap:
    """Columnwise phi_star over the fixed source basis.

    For K3 sources the basis is the sheaf basis O, O(-H), O_x (plus O_L on
    rank-2 lattices, or O(L) for the degree-10 families); for the GM4
    setup it is the kappa basis.
    """
    if setup.source_kind == "k3-mukai":
        if setup.source.name == "QuarticK3":
            labels = ["O", "O(-H)", "O_x"]
            if len(setup.source.gram) == 2:
                labels.append("O_L")
        else:
            labels = ["O", "O(-H)", "O_x", "O(L)"]
        basis = tuple(sheaf_mukai(setup.source, lab) for lab in labels)
    else:
        kb = setup.source_knum_basis
        labels = [f"{kb.name}1", f"{kb.name}2"]
        basis = tuple(KnumClass(kb, (1, 0) if i == 0 else (0, 1)) for i in range(2))
    cols = [phi_star(setup, b).coords for b in basis]
    matrix = tuple(tuple(col[i] for col in cols) for i in range(2))
    return PhiMap(setup=setup, source_labels=tuple(labels), source_basis=basis, matrix=matrix)


@dataclass(frozen=True)
class ImageReport:
    target_basis_name: str
    hnf_columns: tuple  # canonical basis of the image sublattice

    def contains(self, v: KnumClass) -> bool:
        return hnf_membership([list(c) for c in self.hnf_columns], list(v.coords)) is not None

    def to_json(self) -> dict:
        return {
            "target_basis": self.target_basis_name,
            "hnf_columns": [list(c) for c in self.hnf_columns],
        }


def image_lattice(pmap: PhiMap) -> ImageReport:
    hnf = column_hnf([list(c) for c in pmap.columns])
    return ImageReport(
        target_basis_name=pmap.setup.target_knum_basis.name,
        hnf_columns=tuple(tuple(c) for c in hnf),
    )


@dataclass(frozen=True)
class KernelReport:
    basis: tuple        # kernel generators as source classes
    gram: tuple         # pairing of the source lattice restricted to the kernel
    negative_definite: bool

    @property
    def rank(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "basis": [
                b.to_json() if hasattr(b, "to_json") else list(b) for b in self.basis
            ],
            "gram": [list(r) for r in self.gram],
            "negative_definite": self.negative_definite,
        }


def kernel_lattice(pmap: PhiMap) -> KernelReport:
    rows = [list(r) for r in pmap.matrix]
    combos = integer_kernel(rows)
    if pmap.setup.source_kind == "k3-mukai":
        basis = []
        for combo in combos:
            w = None
            for k, b in zip(combo, pmap.source_basis):
                term = k * b
                w = term if w is None else w + term
            basis.append(w)
        gram = tuple(
            tuple(mukai_pairing(a, b) for b in basis) for a in basis
        )
    else:
        kb = pmap.setup.source_knum_basis
        basis = []
        for combo in combos:
            w = KnumClass(kb, (0, 0))
            for k, b in zip(combo, pmap.source_basis):
                w = w + KnumClass(kb, tuple(k * x for x in b.coords))
            basis.append(w)
        gram = tuple(
            tuple(euler_form(kb, a, b) for b in basis) for a in basis
        )
    return KernelReport(
        basis=tuple(basis),
        gram=gram,
        negative_definite=is_negative_definite([list(r) for r in gram]),
    )
