"""Constructive lifting of rank-2 lattice classes through the cover map.

For a class v in the rank-2 target lattice the goal is a Mukai vector w
on a suitably specialized K3 cover with phi_star(w) = v and w^2 >= -2,
together with the strict wall inequality

    w^2 + 2 < -chi(v, v) + 1

that guarantees a stable object not fixed by the residual involution.

Two independent routes are implemented: closed-form case analysis
(six branches for the quartic double solid on a quartic K3 containing a
line; the odd/even/negative branches with per-case degree-10 Picard
lattices for the GM threefold) and a brute-force enumeration of the full
lifting coset, used as an oracle for the closed forms.  Every
certificate recomputes phi_star(w) and the Mukai square on construction
and refuses to exist if either check fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd

from .grr import CoverSetup, make_cover_setup
from .knum import KnumClass, KuBasis, MukaiVector, euler_form, make_ku_basis, sheaf_mukai
from .linalg import (
    integer_kernel,
    is_negative_definite,
    isqrt_ceil,
    solve_integer,
    solve_rational,
    _det,
)

Q = Fraction


class LiftError(ValueError):
    """Zero vector, inputs outside the covered cases, or class not in image."""


@lru_cache(maxsize=None)
def _setup(kind: str, gram=None) -> CoverSetup:
    return make_cover_setup(kind, gram)


@lru_cache(maxsize=None)
def _phi_map(kind: str, gram=None):
    from .functor import phi_matrix

    return phi_matrix(_setup(kind, gram))


@dataclass(frozen=True)
class LiftCertificate:
    fano_type: str          # "qds" or "gm3"
    v: KnumClass            # the requested class (possibly non-primitive)
    k: int                  # multiplicity: v = k * v0 with v0 primitive
    v0: KnumClass           # the primitive part actually lifted
    gram: tuple             # Picard Gram of the specialized K3
    x: int | None           # the H.L entry of the specialization
    w: MukaiVector          # lift of v0
    w_square: int
    branch: str
    nonneg_ok: bool         # w^2 >= -2
    wall_ok: bool           # w^2 + 2 < -chi(v0,v0) + 1
    diagnostics: tuple = () # every branch that applies to (primitive) input
    complete: bool = True   # closed forms always certify exactly

    def to_json(self) -> dict:
        return {
            "fano_type": self.fano_type,
            "v": self.v.to_json(),
            "k": self.k,
            "v_primitive": self.v0.to_json(),
            "gram": [list(r) for r in self.gram],
            "x": self.x,
            "w": self.w.to_json(),
            "w_square": self.w_square,
            "branch": self.branch,
            "nonneg_ok": self.nonneg_ok,
            "wall_ok": self.wall_ok,
            "diagnostics": list(self.diagnostics),
            "complete": self.complete,
        }


def _primitive(a: int, b: int):
    g = gcd(a, b)
    return g, a // g, b // g


def _finalize(fano_type, setup_kind, gram, x, basis, a, b, k, w, branch, formula, diagnostics):
    """Assemble a certificate, rechecking the pushforward and the square."""
    from .functor import phi_star

    v0 = KnumClass(basis, (a, b))
    v = KnumClass(basis, (k * a, k * b))
    got = phi_star(_setup(setup_kind, gram), w)
    if got.coords != v0.coords:
        raise LiftError(f"branch {branch}: phi_star(w) = {got.coords}, expected {v0.coords}")
    w_square = w.square()
    if w_square != formula:
        raise LiftError(f"branch {branch}: w^2 = {w_square}, formula gives {formula}")
    return LiftCertificate(
        fano_type=fano_type,
        v=v,
        k=k,
        v0=v0,
        gram=gram,
        x=x,
        w=w,
        w_square=w_square,
        branch=branch,
        nonneg_ok=w_square >= -2,
        wall_ok=check_wall_inequality(basis, v0, w_square),
        diagnostics=tuple(diagnostics),
    )


# ---------------------------------------------------------------------------
# quartic double solid


QDS_GRAM = ((4, 1), (1, -2))


def _qds_branches(a: int, b: int) -> list:
    """All applicable cases for a >= 0, in the order they are tried."""
    out = []
    if a % 2 == 0:
        ap = a // 2
        if ap + b >= 0:
            out.append("even-nonneg")
        else:
            gap = -(ap + b)
            out.append("even-gap-even" if gap % 2 == 0 else "even-gap-odd")
    else:
        ap = (a - 1) // 2
        if ap + b + 1 >= 0:
            out.append("odd-nonneg")
            if ap + b + 1 == 0:
                out.append("odd-gap-even")  # h = 0 case coincides
        else:
            gap = -(ap + b + 1)
            out.append("odd-gap-odd" if gap % 2 == 1 else "odd-gap-even")
    return out


def closed_form_lift_qds(a: int, b: int) -> LiftCertificate:
    """Closed-form lift on the quartic K3 with a line, Gram ((4,1),(1,-2)).

    Case analysis on v = a mu_1 + b mu_2 (reduced to primitive, a >= 0);
    each branch has an explicit w and an explicit polynomial for w^2.
    """
    if (a, b) == (0, 0):
        raise LiftError("zero vector")
    # the case analysis covers every nonzero vector directly, so no
    # reduction to a primitive class is needed here
    k, a0, b0 = 1, a, b
    sign = 1
    if a0 < 0 or (a0 == 0 and b0 < 0):
        sign, a0, b0 = -1, -a0, -b0

    k3 = _setup("qds-line", QDS_GRAM).source
    O = sheaf_mukai(k3, "O")
    O_x = sheaf_mukai(k3, "O_x")
    I_x = sheaf_mukai(k3, "I_x")
    O_H = sheaf_mukai(k3, "O_H")
    O_L = sheaf_mukai(k3, "O_L")

    branches = _qds_branches(a0, b0)
    branch = branches[0]
    if a0 % 2 == 0:
        ap = a0 // 2
        if branch == "even-nonneg":
            w = ap * O_x - (ap + b0) * I_x
            formula = 2 * ap * (ap + b0)
        elif branch == "even-gap-even":
            h = (-(ap + b0)) // 2
            w = ap * O_x + h * O_H
            formula = 4 * h * h
        else:  # even-gap-odd
            h = (-(ap + b0) + 1) // 2
            w = ap * O_x - 1 * I_x + h * O_H
            formula = 4 * h * h + 2 * ap - 4 * h
    else:
        ap = (a0 - 1) // 2
        if branch == "odd-nonneg":
            w = ap * O_x - (ap + b0) * I_x + O_L - O
            formula = -2 + 2 * ap * (ap + b0 + 1)
        elif branch == "odd-gap-odd":
            h = (-(ap + b0 + 1) + 1) // 2
            w = ap * O_x + h * O_H + O_L - O
            formula = 4 * h * h - 2 * h - 2 + 2 * ap
        else:  # odd-gap-even
            h = (-(ap + b0 + 1)) // 2
            w = (ap - 1) * O_x + O_L + h * O_H
            formula = -2 + 4 * h * h + 2 * h
    if sign < 0:
        w = -w
        a0, b0 = -a0, -b0
    return _finalize("qds", "qds-line", QDS_GRAM, 1, make_ku_basis("mu"),
                     a0, b0, k, w, branch, formula, branches)


# ---------------------------------------------------------------------------
# GM threefold


def _gm3_template(gram, b_coeff: int, q: int, n: int) -> MukaiVector:
    """w = -[O_S(L)] + b[O_S] - q[O_S(-H)] + n[O_x] on the given lattice."""
    k3 = _setup("gm3", gram).source
    return (
        -1 * sheaf_mukai(k3, "O(L)")
        + b_coeff * sheaf_mukai(k3, "O")
        - q * sheaf_mukai(k3, "O(-H)")
        + n * sheaf_mukai(k3, "O_x")
    )


def closed_form_lift_gm3(p: int, q: int) -> LiftCertificate:
    """Closed-form lift for v = p kappa_1 + q kappa_2.

    The degree-10 Picard lattice is specialized per case: ((10,x),(x,2))
    with x = q+6 (p odd) or x = q+4 (p even, q != 1), ((10,9),(9,2)) for
    q = 1 and |p| > 2, and the three exceptional lattices ((10,5),(5,0)),
    ((10,9),(9,4)), ((10,7),(7,4)) for (p,q) = (0,1), (2,1), (-2,1).
    Coverage: coprime (p,q) with q != 0, plus (p,q) = (+-1, 0).
    """
    if (p, q) == (0, 0):
        raise LiftError("zero vector")
    k, p0, q0 = _primitive(p, q)
    sign = 1
    if q0 < 0 or (q0 == 0 and p0 < 0):
        sign, p0, q0 = -1, -p0, -q0

    kappa = make_ku_basis("kappa")
    diagnostics: list = []
    if p0 % 2 == 1:
        if q0 == 0 and p0 != 1:
            raise LiftError(f"({p}, {q}) is outside the covered cases")
        branch = "p-odd"
        x, y = q0 + 6, 2
        gram = ((10, x), (x, y))
        b_coeff = -q0 + (5 - p0) // 2
        w = _gm3_template(gram, b_coeff, q0, p0 + 5 * q0 + 1)
        formula = (p0 * p0 - 1) // 2 - 2
    else:
        if q0 == 0:
            raise LiftError(f"({p}, {q}) is outside the covered cases")
        if q0 != 1:
            branch = "p-even"
            x, y = q0 + 4, 2
            gram = ((10, x), (x, y))
            b_coeff = -q0 + 2 - p0 // 2
            w = _gm3_template(gram, b_coeff, q0, p0 + 5 * q0 + 1)
            formula = (p0 * p0) // 2
        elif p0 == 0:
            branch = "p-even-q1-p0"
            x, y = 5, 0
            gram = ((10, x), (x, y))
            k3 = _setup("gm3", gram).source
            w = sheaf_mukai(k3, "O(L)") - 2 * sheaf_mukai(k3, "O")
            formula = -2
        elif p0 == 2:
            branch = "p-even-q1-p2"
            x, y = 9, 4
            gram = ((10, x), (x, y))
            k3 = _setup("gm3", gram).source
            w = sheaf_mukai(k3, "O(L)") - 4 * sheaf_mukai(k3, "O")
            formula = -2
        elif p0 == -2:
            branch = "p-even-q1-pm2"
            x, y = 7, 4
            gram = ((10, x), (x, y))
            k3 = _setup("gm3", gram).source
            w = -1 * (sheaf_mukai(k3, "O(L)") - 4 * sheaf_mukai(k3, "O"))
            formula = -2
        else:
            branch = "p-even-q1"
            x, y = 9, 2
            gram = ((10, x), (x, y))
            b_coeff = 2 - p0 // 2
            w = _gm3_template(gram, b_coeff, q0, p0 + 6)
            formula = (p0 * p0) // 2 - 6
    diagnostics.append(branch)
    if sign < 0:
        w = -w
        p0, q0 = -p0, -q0
        branch = f"negated:{branch}"
    return _finalize("gm3", "gm3", gram, x, kappa, p0, q0, k, w, branch, formula, diagnostics)


# ---------------------------------------------------------------------------
# brute-force oracle and full-coset analysis


@dataclass(frozen=True)
class _MukaiProblem:
    """Phi_* in standard Mukai coordinates (r, c_1..c_rho, s)."""

    setup: CoverSetup
    matrix: tuple        # 2 x n
    gram: tuple          # n x n Mukai form on coordinates

    def square(self, coords) -> int:
        return sum(
            coords[i] * self.gram[i][j] * coords[j]
            for i in range(len(coords))
            for j in range(len(coords))
        )

    def vector(self, coords) -> MukaiVector:
        g = self.setup.source.gram
        rho = len(g)
        return MukaiVector(g, coords[0], tuple(coords[1 : 1 + rho]), coords[1 + rho])


@lru_cache(maxsize=None)
def _mukai_problem(kind: str, gram) -> _MukaiProblem:
    from .functor import phi_star

    setup = _setup(kind, gram)
    if setup.source_kind != "k3-mukai":
        raise LiftError(f"setup {kind} has no Mukai source lattice")
    g = setup.source.gram
    rho = len(g)
    n = rho + 2
    units = []
    for i in range(n):
        coords = [0] * n
        coords[i] = 1
        units.append(MukaiVector(g, coords[0], tuple(coords[1 : 1 + rho]), coords[1 + rho]))
    cols = [phi_star(setup, u).coords for u in units]
    matrix = tuple(tuple(col[i] for col in cols) for i in range(2))
    full = [[0] * n for _ in range(n)]
    for i in range(rho):
        for j in range(rho):
            full[1 + i][1 + j] = g[i][j]
    full[0][1 + rho] = full[1 + rho][0] = -1
    return _MukaiProblem(setup=setup, matrix=matrix, gram=tuple(tuple(r) for r in full))


def _coset(prob: _MukaiProblem, v: KnumClass):
    """Particular integer solution and saturated kernel of the Mukai-coordinate map."""
    rows = [list(r) for r in prob.matrix]
    x0 = solve_integer(rows, list(v.coords))
    ker = integer_kernel(rows)
    return x0, ker


def brute_force_lift(setup: CoverSetup, v: KnumClass, box: int = 12) -> list:
    """All w with Mukai coordinates in [-box, box], phi_star(w) = v, w^2 >= -2.

    The lifting coset is enumerated exactly (particular solution plus
    kernel lattice), so the cost is polynomial in ``box`` rather than
    exponential in the lattice rank.  Results are sorted by (w^2, coords).
    """
    if box < 1:
        raise LiftError("box must be >= 1")
    prob = _mukai_problem(setup.name, setup.source.gram)
    x0, ker = _coset(prob, v)
    if x0 is None:
        return []
    found = []
    for coords in _coset_points_in_box(x0, ker, box):
        sq = prob.square(coords)
        if sq >= -2:
            found.append((sq, coords))
    found.sort()
    return [prob.vector(c) for _, c in found]


def _interval(a: int, c: int, box: int):
    """Integer t-range with |a + t c| <= box, c != 0."""
    lo, hi = Q(-box - a, c), Q(box - a, c)
    if c < 0:
        lo, hi = hi, lo
    return _ceil(lo), _floor(hi)


def _floor(x: Q) -> int:
    return x.numerator // x.denominator


def _ceil(x: Q) -> int:
    return -((-x.numerator) // x.denominator)


def _coset_points_in_box(x0, ker, box):
    """All integer points x0 + K t with every coordinate in [-box, box].

    The kernel rank is at most 2 here; ranges are narrowed coordinate by
    coordinate so the enumeration stays proportional to the output size.
    """
    n = len(x0)
    m = len(ker)
    if m == 0:
        if all(abs(x) <= box for x in x0):
            yield tuple(x0)
        return
    if m > 2:
        raise LiftError("coset enumeration supports kernel rank <= 2")
    # range of t_1 from any coordinate row where ker[0] acts invertibly
    # after eliminating t_2 (rank 2) or directly (rank 1)
    if m == 1:
        lo, hi = None, None
        for j in range(n):
            if ker[0][j] != 0:
                a, b = _interval(x0[j], ker[0][j], box)
                lo = a if lo is None else max(lo, a)
                hi = b if hi is None else min(hi, b)
        for t1 in range(lo, hi + 1):
            coords = tuple(x0[j] + t1 * ker[0][j] for j in range(n))
            if all(abs(x) <= box for x in coords):
                yield coords
        return
    # m == 2: eliminate t_2 between pairs of rows to bound t_1
    lo, hi = None, None
    for j in range(n):
        for jj in range(n):
            # row combination with zero t_2 coefficient:
            # ker[1][jj]*row_j - ker[1][j]*row_jj
            c1 = ker[1][jj] * ker[0][j] - ker[1][j] * ker[0][jj]
            if c1 == 0:
                continue
            a0 = ker[1][jj] * x0[j] - ker[1][j] * x0[jj]
            bound = box * (abs(ker[1][jj]) + abs(ker[1][j]))
            a, b = _interval(a0, c1, bound)
            lo = a if lo is None else max(lo, a)
            hi = b if hi is None else min(hi, b)
    if lo is None:
        raise LiftError("degenerate kernel basis")
    for t1 in range(lo, hi + 1):
        lo2, hi2 = None, None
        feasible = True
        for j in range(n):
            partial = x0[j] + t1 * ker[0][j]
            if ker[1][j] == 0:
                if abs(partial) > box:
                    feasible = False
                    break
                continue
            a, b = _interval(partial, ker[1][j], box)
            lo2 = a if lo2 is None else max(lo2, a)
            hi2 = b if hi2 is None else min(hi2, b)
        if not feasible or lo2 is None:
            continue
        for t2 in range(lo2, hi2 + 1):
            coords = tuple(x0[j] + t1 * ker[0][j] + t2 * ker[1][j] for j in range(n))
            if all(abs(x) <= box for x in coords):
                yield coords


def check_wall_inequality(basis: KuBasis, v: KnumClass, w_square: int) -> bool:
    """Strict inequality w^2 + 2 < -chi(v,v) + 1."""
    return w_square + 2 < -euler_form(basis, v, v) + 1


def expected_dimension(basis: KuBasis, v: KnumClass, kind: str) -> int:
    """Expected moduli dimension: -chi(v,v) + 1 (Enriques) or + 2 (CY2)."""
    if kind not in ("Enriques", "CY2"):
        raise LiftError(f"unknown moduli kind {kind!r}")
    return -euler_form(basis, v, v) + (1 if kind == "Enriques" else 2)


@dataclass(frozen=True)
class AllLiftsReport:
    v: KnumClass
    complete: bool           # exact coset maximum vs bounded enumeration
    negative_definite: bool
    max_w_square: int | None
    all_satisfy: bool
    box: int | None = None
    kernel_rank: int = 0

    def to_json(self) -> dict:
        return {
            "v": self.v.to_json(),
            "complete": self.complete,
            "negative_definite": self.negative_definite,
            "max_w_square": self.max_w_square,
            "all_satisfy": self.all_satisfy,
            "box": self.box,
            "kernel_rank": self.kernel_rank,
        }


def all_lifts_inequality(pmap, v: KnumClass, box: int = 12) -> AllLiftsReport:
    """Verify the wall inequality over the entire lifting coset of v.

    If the Mukai form is negative definite on the kernel of Phi_*, the
    supremum of w^2 over the coset is attained and computed exactly, so
    the verdict is complete; otherwise the coset is enumerated within the
    coordinate box and the verdict is flagged partial.
    """
    prob = _mukai_problem(pmap.setup.name, pmap.setup.source.gram)
    x0, ker = _coset(prob, v)
    if x0 is None:
        raise LiftError(f"{tuple(v.coords)} is not in the image of phi_star")
    basis = pmap.setup.target_knum_basis
    rhs = -euler_form(basis, v, v) + 1
    m = len(ker)
    if m == 0:
        sq = prob.square(x0)
        return AllLiftsReport(v=v, complete=True, negative_definite=True,
                              max_w_square=sq, all_satisfy=sq + 2 < rhs, kernel_rank=0)
    gk = [[sum(ker[i][a] * prob.gram[a][b] * ker[j][b]
               for a in range(len(x0)) for b in range(len(x0)))
           for j in range(m)] for i in range(m)]
    if is_negative_definite(gk):
        max_sq = _coset_max_square(prob, x0, ker, gk)
        return AllLiftsReport(v=v, complete=True, negative_definite=True,
                              max_w_square=max_sq, all_satisfy=max_sq + 2 < rhs,
                              kernel_rank=m)
    worst = None
    ok = True
    for coords in _coset_points_in_box(x0, ker, box):
        sq = prob.square(coords)
        worst = sq if worst is None else max(worst, sq)
        if sq + 2 >= rhs:
            ok = False
    return AllLiftsReport(v=v, complete=False, negative_definite=False,
                          max_w_square=worst, all_satisfy=ok, box=box, kernel_rank=m)


def _coset_max_square(prob: _MukaiProblem, x0, ker, gk) -> int:
    """Exact maximum of w^2 over x0 + K t, t integral (gk negative definite).

    f(t) = f(t*) + (t - t*)^T gk (t - t*) with t* the rational maximizer,
    so integer candidates lie in the ellipsoid where the quadratic
    correction does not drop below the best rounded value.
    """
    m = len(ker)
    n = len(x0)
    lin = [sum(x0[a] * prob.gram[a][b] * ker[i][b] for a in range(n) for b in range(n))
           for i in range(m)]
    const = prob.square(x0)

    def f(t):
        quad = sum(t[i] * gk[i][j] * t[j] for i in range(m) for j in range(m))
        return const + 2 * sum(lin[i] * t[i] for i in range(m)) + quad

    tstar = solve_rational([[Q(gk[i][j]) for j in range(m)] for i in range(m)],
                           [Q(-lin[i]) for i in range(m)])
    fstar = const + sum(Q(2 * lin[i]) * tstar[i] for i in range(m)) + sum(
        tstar[i] * Q(gk[i][j]) * tstar[j] for i in range(m) for j in range(m)
    )
    # seed with every floor/ceil rounding of t*
    best = None
    roundings = []
    for i in range(m):
        fl = tstar[i].numerator // tstar[i].denominator
        roundings.append((fl, fl + 1))
    for combo in product(*roundings):
        val = f(combo)
        best = val if best is None else max(best, val)
    # enumerate the ellipsoid (t - t*)^T (-gk) (t - t*) <= fstar - best
    delta = fstar - Q(best)
    p = [[Q(-gk[i][j]) for j in range(m)] for i in range(m)]
    detp = _det(p)
    ranges = []
    for i in range(m):
        if m > 1:
            cof = _det([[p[a][b] for b in range(m) if b != i] for a in range(m) if a != i])
        else:
            cof = Q(1)
        radius = _frac_sqrt_ub(delta * cof / detp)
        ranges.append(range(_floor(tstar[i] - radius), _ceil(tstar[i] + radius) + 1))
    for t in product(*ranges):
        val = f(t)
        if val > best:
            best = val
    return best


def _frac_sqrt_ub(x: Q) -> Q:
    """A rational upper bound for sqrt(max(x, 0))."""
    if x <= 0:
        return Q(0)
    return Q(isqrt_ceil(x))
