"""Sweep the specialization lattices and report which ones are usable.

A rank-2 lattice ((d,x),(x,y)) qualifies when it is hyperbolic, carries
no (-2)-class orthogonal to the polarization, and meets its family
condition.  The x = 5 member of the ((10,x),(x,2)) family is the lone
failure in the ranges below.
"""

from kucalc.k3picard import validate_lattice


def main():
    print("family ((10,x),(x,2)):")
    for x in range(4, 12):
        rep = validate_lattice(((10, x), (x, 2)), "10-x-2")
        mark = "ok " if rep.verdict else "BAD"
        print(f"  x={x:2d}: det={rep.det:4d} v0={rep.v0} v0^2={rep.v0_square:4d}  {mark}")

    print("\nspecial lattices:")
    for gram, family in [
        (((10, 5), (5, 0)), "10-5-0"),
        (((10, 7), (7, 4)), "10-x-4"),
        (((10, 9), (9, 4)), "10-x-4"),
        (((4, 1), (1, -2)), "quartic-line"),
    ]:
        rep = validate_lattice(gram, family)
        print(f"  {gram} [{family}]: verdict {rep.verdict}")


if __name__ == "__main__":
    main()
