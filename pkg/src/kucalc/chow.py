"""Exact models of numerical cohomology rings of the supported varieties.

A :class:`VarietyModel` is a graded basis per codimension, a rational
multiplication table, a degree map on the top graded piece (normalized so
the point class integrates to 1) and the Todd class of the tangent bundle.
All coefficients are ``fractions.Fraction``; there is no floating point
anywhere in the package.

Supported varieties:

* ``P3`` -- projective 3-space.
* ``QuarticDoubleSolid`` -- double cover of P3 branched in a quartic
  surface; H^3 = 2.
* ``QuarticK3`` -- quartic K3 surface, Picard rank 1 (H^2 = 4) or rank 2
  with a user-supplied Gram matrix such as ((4,1),(1,-2)) for a quartic
  containing a line.
* ``QuinticDelPezzo3fold`` -- codimension-3 linear section of Gr(2,5),
  H^3 = 5.
* ``GM3fold`` -- Gushel-Mukai threefold, H^3 = 10.
* ``GM4fold`` -- Gushel-Mukai fourfold, H^4 = 10, with rank-2 codim-2
  piece spanned by H^2 and the pulled-back Schubert class sigma_2.
* ``Degree10K3`` -- degree-10 polarized K3, rank-2 Picard lattice given
  by a Gram matrix ((10,x),(x,y)).

Curve classes on the Picard-rank-1 threefolds are collapsed to rational
multiples of the class ``l`` normalized by H.l = 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product

Q = Fraction

SUPPORTED = (
    "P3",
    "QuarticDoubleSolid",
    "QuarticK3",
    "QuinticDelPezzo3fold",
    "GM3fold",
    "GM4fold",
    "Degree10K3",
)


class ChowError(ValueError):
    """Malformed variety data, mismatched models, or bad class input."""


@dataclass(frozen=True)
class VarietyModel:
    """Graded numerical cohomology ring with intersection and degree data.

    Immutable after construction; safe to share between threads.
    """

    name: str
    dim: int
    graded_basis: tuple[tuple[str, ...], ...]   # one tuple of names per codim
    mult_table: dict = field(hash=False)        # (name_a, name_b) -> {name_c: Fraction}
    degree_map: dict = field(hash=False)        # top-codim name -> Fraction
    todd: "GradedClass" = field(hash=False)
    gram: tuple | None = None                   # Picard Gram matrix for surfaces

    def codim_of(self, name: str) -> int:
        for k, names in enumerate(self.graded_basis):
            if name in names:
                return k
        raise ChowError(f"{self.name}: unknown basis class {name!r}")

    def zero(self) -> "GradedClass":
        return GradedClass(self, {})

    def unit(self) -> "GradedClass":
        return self.cls("1")

    def cls(self, name: str, coeff=1) -> "GradedClass":
        k = self.codim_of(name)
        return GradedClass(self, {(k, name): Q(coeff)})

    def point(self) -> "GradedClass":
        return self.cls(self.graded_basis[-1][0])

    @property
    def degree(self) -> Q:
        """Degree of H^dim."""
        h = self.cls("H")
        p = h
        for _ in range(self.dim - 1):
            p = multiply(self, p, h)
        return integrate(self, p)


@dataclass
class GradedClass:
    """Rational linear combination of graded basis classes of one model."""

    model: VarietyModel
    coeffs: dict  # (codim, name) -> Fraction

    def __post_init__(self):
        self.coeffs = {k: Q(v) for k, v in self.coeffs.items() if v != 0}
        for (codim, name) in self.coeffs:
            if codim > self.model.dim or name not in self.model.graded_basis[codim]:
                raise ChowError(f"{self.model.name}: no class {name!r} in codim {codim}")

    def coeff(self, codim: int, name: str) -> Q:
        return self.coeffs.get((codim, name), Q(0))

    def part(self, codim: int) -> "GradedClass":
        return GradedClass(self.model, {k: v for k, v in self.coeffs.items() if k[0] == codim})

    def __add__(self, other: "GradedClass") -> "GradedClass":
        _check_same(self, other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Q(0)) + v
        return GradedClass(self.model, out)

    def __sub__(self, other: "GradedClass") -> "GradedClass":
        return self + (-1) * other

    def __neg__(self) -> "GradedClass":
        return (-1) * self

    def __rmul__(self, scalar) -> "GradedClass":
        s = Q(scalar)
        return GradedClass(self.model, {k: s * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, GradedClass):
            return multiply(self.model, self, other)
        return self.__rmul__(other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedClass)
            and self.model.name == other.model.name
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for (codim, name), v in sorted(self.coeffs.items()):
            terms.append(f"{v}*{name}" if name != "1" else f"{v}")
        return " + ".join(terms)


def _check_same(a: GradedClass, b: GradedClass) -> None:
    if a.model.name != b.model.name or a.model.gram != b.model.gram:
        raise ChowError(f"mismatched models: {a.model.name} vs {b.model.name}")


def multiply(model: VarietyModel, a: GradedClass, b: GradedClass) -> GradedClass:
    """Bilinear extension of the multiplication table, truncated above dim."""
    _check_same(a, b)
    out: dict = {}
    for (ka, na), ca in a.coeffs.items():
        for (kb, nb), cb in b.coeffs.items():
            k = ka + kb
            if k > model.dim:
                continue
            for nc, s in _table_entry(model, na, nb).items():
                key = (k, nc)
                out[key] = out.get(key, Q(0)) + ca * cb * s
    return GradedClass(model, out)


def _table_entry(model: VarietyModel, na: str, nb: str) -> dict:
    if na == "1":
        return {nb: Q(1)}
    if nb == "1":
        return {na: Q(1)}
    key = (na, nb) if (na, nb) in model.mult_table else (nb, na)
    try:
        return model.mult_table[key]
    except KeyError:
        raise ChowError(f"{model.name}: no product {na}*{nb} in table") from None


def integrate(model: VarietyModel, a: GradedClass) -> Q:
    """Degree map on the top graded piece; lower codimensions are dropped."""
    total = Q(0)
    for name in model.graded_basis[-1]:
        total += a.coeff(model.dim, name) * model.degree_map[name]
    return total


def dual_ch(model: VarietyModel, a: GradedClass) -> GradedClass:
    """Sign (-1)^codim on each graded piece (the ch(E)-dual of a class)."""
    return GradedClass(
        model, {(k, n): (v if k % 2 == 0 else -v) for (k, n), v in a.coeffs.items()}
    )


# ---------------------------------------------------------------------------
# model construction


def _threefold(name: str, deg: int, todd_l: Q, todd1_h: Q) -> VarietyModel:
    """Picard-rank-1 threefold with basis 1, H, l (H.l = 1), pt."""
    table = {
        ("H", "H"): {"l": Q(deg)},
        ("H", "l"): {"pt": Q(1)},
        ("H", "pt"): {},
        ("l", "l"): {},
        ("l", "pt"): {},
        ("pt", "pt"): {},
    }
    model = VarietyModel(
        name=name,
        dim=3,
        graded_basis=(("1",), ("H",), ("l",), ("pt",)),
        mult_table=table,
        degree_map={"pt": Q(1)},
        todd=None,  # placeholder, replaced below
    )
    todd = GradedClass(
        model,
        {(0, "1"): Q(1), (1, "H"): todd1_h, (2, "l"): todd_l, (3, "pt"): Q(1)},
    )
    object.__setattr__(model, "todd", todd)
    return model


def _k3(name: str, gram) -> VarietyModel:
    gram = tuple(tuple(int(x) for x in row) for row in gram)
    rank = len(gram)
    if rank not in (1, 2) or any(len(r) != rank for r in gram):
        raise ChowError("K3 Gram matrix must be 1x1 or 2x2")
    if rank == 2 and gram[0][1] != gram[1][0]:
        raise ChowError("K3 Gram matrix must be symmetric")
    names = ("H",) if rank == 1 else ("H", "L")
    table = {}
    for i, ni in enumerate(names):
        for j, nj in enumerate(names):
            if i <= j:
                table[(ni, nj)] = {"pt": Q(gram[i][j])}
    for n in names:
        table[(n, "pt")] = {}
    table[("pt", "pt")] = {}
    model = VarietyModel(
        name=name,
        dim=2,
        graded_basis=(("1",), names, ("pt",)),
        mult_table=table,
        degree_map={"pt": Q(1)},
        todd=None,
        gram=gram,
    )
    todd = GradedClass(model, {(0, "1"): Q(1), (2, "pt"): Q(2)})
    object.__setattr__(model, "todd", todd)
    return model


def _gm4fold() -> VarietyModel:
    # codim-2 intersection numbers from Schubert calculus on Gr(2,5),
    # doubled for the branched cover: H^4=10, H^2.s2=6, s2^2=4;
    # codim 3 is numerically rank 1, l = H^3/10.
    table = {
        ("H", "H"): {"H2": Q(1)},
        ("H", "H2"): {"l": Q(10)},
        ("H", "s2"): {"l": Q(6)},
        ("H", "l"): {"pt": Q(1)},
        ("H", "pt"): {},
        ("H2", "H2"): {"pt": Q(10)},
        ("H2", "s2"): {"pt": Q(6)},
        ("s2", "s2"): {"pt": Q(4)},
        ("H2", "l"): {},
        ("s2", "l"): {},
        ("l", "l"): {},
        ("H2", "pt"): {},
        ("s2", "pt"): {},
        ("l", "pt"): {},
        ("pt", "pt"): {},
    }
    model = VarietyModel(
        name="GM4fold",
        dim=4,
        graded_basis=(("1",), ("H",), ("H2", "s2"), ("l",), ("pt",)),
        mult_table=table,
        degree_map={"pt": Q(1)},
        todd=None,
    )
    # td(W) = 1 + H + (2/3 H^2 - 1/12 s2) + 17/60 H^3 + pt, with H^3 = 10 l
    todd = GradedClass(
        model,
        {
            (0, "1"): Q(1),
            (1, "H"): Q(1),
            (2, "H2"): Q(2, 3),
            (2, "s2"): Q(-1, 12),
            (3, "l"): Q(17, 6),
            (4, "pt"): Q(1),
        },
    )
    object.__setattr__(model, "todd", todd)
    return model


def make_variety_model(name: str, gram=None) -> VarietyModel:
    """Build one of the supported variety models.

    ``gram`` is required for Degree10K3 and optional for QuarticK3
    (defaults to the Picard-rank-1 lattice (4)).
    """
    if name == "P3":
        # c1 = 4H, c2 = 6H^2: td = 1 + 2H + 11/6 l + pt (l = H^2)
        return _threefold("P3", 1, Q(11, 6), Q(2))
    if name == "QuarticDoubleSolid":
        # c1 = 2H, c2 = 12 l: td2 = (4H^2 + 12 l)/12 = 5/3 l (H^2 = 2l)
        return _threefold("QuarticDoubleSolid", 2, Q(5, 3), Q(1))
    if name == "QuinticDelPezzo3fold":
        # c1 = 2H, c2 = 12 l: td2 = (20 l + 12 l)/12 = 8/3 l
        return _threefold("QuinticDelPezzo3fold", 5, Q(8, 3), Q(1))
    if name == "GM3fold":
        # td = 1 + H/2 + 17/60 H^2 + pt, and 17/60 H^2 = 17/6 l
        return _threefold("GM3fold", 10, Q(17, 6), Q(1, 2))
    if name == "GM4fold":
        return _gm4fold()
    if name == "QuarticK3":
        g = gram if gram is not None else ((4,),)
        g = tuple(tuple(int(x) for x in row) for row in g)
        if g[0][0] != 4:
            raise ChowError("QuarticK3 Gram matrix must have H^2 = 4")
        return _k3("QuarticK3", g)
    if name == "Degree10K3":
        if gram is None:
            raise ChowError("Degree10K3 requires a Gram matrix")
        g = tuple(tuple(int(x) for x in row) for row in gram)
        if len(g) != 2 or g[0][0] != 10:
            raise ChowError("Degree10K3 Gram matrix must be 2x2 with H^2 = 10")
        return _k3("Degree10K3", g)
    raise ChowError(f"unsupported variety {name!r} (one of {SUPPORTED})")


def model_from_config(cfg: dict) -> VarietyModel:
    """Build a model from a declarative JSON-style dict.

    Keys: ``name`` (required), ``gram`` (optional), ``mult_override``
    (optional, {"a*b": {"c": "p/q", ...}} for testing).
    """
    model = make_variety_model(cfg["name"], cfg.get("gram"))
    override = cfg.get("mult_override")
    if override:
        table = dict(model.mult_table)
        for key, entry in override.items():
            na, nb = key.split("*")
            table[(na, nb)] = {n: Q(v) for n, v in entry.items()}
        object.__setattr__(model, "mult_table", table)
    return model


def load_config(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


# ---------------------------------------------------------------------------
# structural checks used by the test suite


def check_ring_axioms(model: VarietyModel) -> None:
    """Exhaustive associativity/commutativity over the basis; raises on failure."""
    gens = [model.cls(n) for names in model.graded_basis for n in names]
    for a, b in combinations_with_replacement(gens, 2):
        if multiply(model, a, b) != multiply(model, b, a):
            raise ChowError(f"{model.name}: {a} * {b} not commutative")
    for a, b, c in product(gens, repeat=3):
        left = multiply(model, multiply(model, a, b), c)
        right = multiply(model, a, multiply(model, b, c))
        if left != right:
            raise ChowError(f"{model.name}: ({a}*{b})*{c} != {a}*({b}*{c})")
