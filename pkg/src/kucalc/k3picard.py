"""Validity checks for the rank-2 K3 Picard lattices used as specializations.

A specialization lattice is usable when it is hyperbolic (determinant
negative, so a K3 with that Picard group exists by surjectivity of the
period map), contains no (-2)-class orthogonal to the polarization H
(so the polarization stays ample on the whole family), and satisfies
the per-family extra condition of the Brill-Noether criterion (x != 5
for the degree-10 lattices ((10,x),(x,2)); vacuous elsewhere, where only
the explicitly stated conditions are checked).

In rank 2 the orthogonal complement of H is generated by one primitive
vector v0, and t v0 has square -2 only for t = +-1, so the (-2)-class
test reduces to v0^2 = -2.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

FAMILIES = ("10-x-2", "10-5-0", "10-x-4", "quartic-line")

_FAMILY_H2 = {"10-x-2": 10, "10-5-0": 10, "10-x-4": 10, "quartic-line": 4}


class PicardError(ValueError):
    """Malformed Gram matrix or degenerate polarization."""


@dataclass(frozen=True)
class PicardLatticeReport:
    gram: tuple
    family: str
    det: int
    hyperbolic_ok: bool
    v0: tuple                  # primitive generator of H^perp
    v0_square: int
    minus_two_orthogonal: bool
    family_condition_ok: bool

    @property
    def verdict(self) -> bool:
        return self.hyperbolic_ok and not self.minus_two_orthogonal and self.family_condition_ok

    def to_json(self) -> dict:
        return {
            "gram": [list(r) for r in self.gram],
            "family": self.family,
            "det": self.det,
            "hyperbolic_ok": self.hyperbolic_ok,
            "orthogonal_primitive": list(self.v0),
            "orthogonal_primitive_square": self.v0_square,
            "minus_two_orthogonal": self.minus_two_orthogonal,
            "family_condition_ok": self.family_condition_ok,
            "verdict": self.verdict,
        }


def _check_gram(gram) -> tuple:
    gram = tuple(tuple(int(x) for x in row) for row in gram)
    if len(gram) != 2 or any(len(r) != 2 for r in gram):
        raise PicardError("Gram matrix must be 2x2")
    if gram[0][1] != gram[1][0]:
        raise PicardError("Gram matrix must be symmetric")
    return gram


def orthogonal_primitive(gram, h_index: int = 0) -> tuple:
    """Primitive integral generator of H^perp, first nonzero entry positive."""
    gram = _check_gram(gram)
    # v = (a, b) with a g[h][0] + b g[h][1] = 0
    g0, g1 = gram[h_index][0], gram[h_index][1]
    if g0 == 0 and g1 == 0:
        raise PicardError("polarization row is zero; lattice degenerate")
    a, b = g1, -g0
    d = gcd(a, b)
    a, b = a // d, b // d
    if a < 0 or (a == 0 and b < 0):
        a, b = -a, -b
    return (a, b)


def _square(gram, v) -> int:
    return sum(v[i] * gram[i][j] * v[j] for i in range(2) for j in range(2))


def validate_lattice(gram, family: str) -> PicardLatticeReport:
    """Full validity report for one specialization lattice."""
    gram = _check_gram(gram)
    if family not in FAMILIES:
        raise PicardError(f"unknown family {family!r} (one of {FAMILIES})")
    if gram[0][0] != _FAMILY_H2[family]:
        raise PicardError(f"family {family} requires H^2 = {_FAMILY_H2[family]}")
    det = gram[0][0] * gram[1][1] - gram[0][1] * gram[1][0]
    v0 = orthogonal_primitive(gram)
    v0_sq = _square(gram, v0)
    # only the 10-x-2 family carries a numeric condition; the others are
    # Brill-Noether general for every admissible x
    family_ok = gram[0][1] != 5 if family == "10-x-2" else True
    return PicardLatticeReport(
        gram=gram,
        family=family,
        det=det,
        hyperbolic_ok=det < 0,
        v0=v0,
        v0_square=v0_sq,
        minus_two_orthogonal=(v0_sq == -2),
        family_condition_ok=family_ok,
    )
