"""Property tests for the exact linear algebra helpers."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from kucalc.linalg import (
    column_hnf,
    hnf_membership,
    integer_kernel,
    is_negative_definite,
    isqrt_ceil,
    solve_integer,
    solve_rational,
)

ints = st.integers(min_value=-9, max_value=9)


def matrices(rows, cols):
    return st.lists(st.lists(ints, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@given(matrices(3, 3), st.lists(ints, min_size=3, max_size=3))
@settings(max_examples=200)
def test_solve_rational_solves(a, x):
    rows = [[Fraction(v) for v in row] for row in a]
    b = [sum(Fraction(a[i][j]) * x[j] for j in range(3)) for i in range(3)]
    sol = solve_rational(rows, b)
    if sol is not None:
        assert all(
            sum(rows[i][j] * sol[j] for j in range(3)) == b[i] for i in range(3)
        )


@given(matrices(2, 4), st.lists(ints, min_size=4, max_size=4))
@settings(max_examples=200)
def test_solve_integer_roundtrip(a, x):
    b = [sum(a[i][j] * x[j] for j in range(4)) for i in range(2)]
    sol = solve_integer(a, b)
    assert sol is not None  # b is in the image by construction
    assert all(isinstance(v, int) for v in sol)
    assert all(sum(a[i][j] * sol[j] for j in range(4)) == b[i] for i in range(2))


def test_solve_integer_detects_infeasible():
    assert solve_integer([[2, 0], [0, 2]], [1, 2]) is None
    assert solve_integer([[1, 1], [1, 1]], [0, 1]) is None
    assert solve_integer([[2, 4]], [6]) == [3, 0] or solve_integer([[2, 4]], [6]) is not None


@given(matrices(2, 4))
@settings(max_examples=200)
def test_integer_kernel_annihilates(a):
    ker = integer_kernel(a)
    for v in ker:
        assert all(sum(a[i][j] * v[j] for j in range(4)) == 0 for i in range(2))
    # rank-nullity over Q
    from kucalc.linalg import rational_nullspace

    assert len(ker) == len(rational_nullspace([[Fraction(x) for x in r] for r in a]))


@given(st.lists(st.lists(ints, min_size=3, max_size=3), min_size=1, max_size=4))
@settings(max_examples=200)
def test_hnf_membership_of_generators(cols):
    hnf = column_hnf([list(c) for c in cols])
    for c in cols:
        assert hnf_membership(hnf, list(c)) is not None


@given(st.lists(st.lists(ints, min_size=3, max_size=3), min_size=1, max_size=3),
       st.lists(ints, min_size=3, max_size=3))
@settings(max_examples=200)
def test_hnf_membership_certificate(cols, probe):
    hnf = column_hnf([list(c) for c in cols])
    coords = hnf_membership(hnf, list(probe))
    if coords is not None:
        rebuilt = [sum(coords[k] * hnf[k][i] for k in range(len(hnf))) for i in range(3)]
        assert rebuilt == list(probe)


def test_column_hnf_canonical():
    # same lattice, different generators, same canonical basis
    a = column_hnf([[2, 0], [0, 3]])
    b = column_hnf([[2, 3], [2, 0], [0, 3]])
    assert a == b


def test_negative_definite():
    assert is_negative_definite([])
    assert is_negative_definite([[-2]])
    assert is_negative_definite([[-2, -1], [-1, -2]])
    assert not is_negative_definite([[2]])
    assert not is_negative_definite([[-1, -2], [-2, -1]])  # det < 0
    assert not is_negative_definite([[0, 0], [0, -1]])  # semi-definite


@given(st.fractions(min_value=0, max_value=10**6))
@settings(max_examples=200)
def test_isqrt_ceil(x):
    n = isqrt_ceil(x)
    assert n * n >= x
    if n > 0:
        assert Fraction((n - 1) * (n - 1)) < x
