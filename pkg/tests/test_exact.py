import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinsphere.errors import AnnihilationFailure
from spinsphere.exact import (
    ComplexRational,
    ExactMatrix,
    HalfInt,
    binomial,
    double_factorial,
    lagrange_projectors,
    rank_and_kernel,
)

small_ints = st.integers(min_value=-6, max_value=6)
nonzero_ints = small_ints.filter(lambda v: v != 0)
fracs = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=4))


def test_binomial_values():
    assert binomial(5, 2) == 10
    assert binomial(5, 0) == 1
    assert binomial(5, 6) == 0
    assert binomial(5, -1) == 0


def test_double_factorial_values():
    assert double_factorial(7) == 105  # 7*5*3*1
    assert double_factorial(6) == 48
    assert double_factorial(0) == 1
    assert double_factorial(1) == 1


@given(st.integers(-40, 40), st.integers(-40, 40))
def test_halfint_matches_fraction_arithmetic(a, b):
    x, y = HalfInt(a), HalfInt(b)
    assert (x + y).as_fraction() == x.as_fraction() + y.as_fraction()
    assert (x - y).as_fraction() == x.as_fraction() - y.as_fraction()
    assert (x < y) == (x.as_fraction() < y.as_fraction())
    assert (x == y) == (x.as_fraction() == y.as_fraction())


def test_halfint_parse_and_str():
    assert HalfInt.parse("3/2").doubled == 3
    assert HalfInt.parse("-1/2").doubled == -1
    assert HalfInt.parse("2").doubled == 4
    assert str(HalfInt(3)) == "3/2"
    assert str(HalfInt(-4)) == "-2"
    assert HalfInt(3).is_integer is False
    assert HalfInt(4).is_integer is True
    with pytest.raises(ValueError):
        HalfInt.parse("1/3")


@given(nonzero_ints, nonzero_ints)
def test_rational_roundtrip(a, b):
    assert Fraction(a, b) * Fraction(b, a) == 1


@given(fracs, fracs, fracs, fracs)
def test_complex_rational_field(a, b, c, d):
    z = ComplexRational(a, b)
    w = ComplexRational(c, d)
    assert z.conjugate().conjugate() == z
    assert (z + w) - w == z
    assert z * w == w * z
    if not w.is_zero():
        assert (z / w) * w == z


def test_rank_and_kernel_identity():
    rank, kernel = rank_and_kernel(ExactMatrix.identity(3))
    assert rank == 3 and kernel == []


def test_rank_and_kernel_zero():
    rank, kernel = rank_and_kernel(ExactMatrix.zeros(2, 5))
    assert rank == 0 and len(kernel) == 5


matrix_strategy = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(
            st.lists(st.tuples(fracs, fracs), min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
)


@settings(max_examples=60, deadline=None)
@given(matrix_strategy)
def test_rank_kernel_properties(rows):
    m = ExactMatrix.from_rows(rows)
    rank, kernel = rank_and_kernel(m)
    assert rank + len(kernel) == m.cols
    # fraction-free elimination agrees with the RREF rank
    assert m.rank() == rank
    for vec in kernel:
        for i in range(m.rows):
            acc = ComplexRational(0)
            for j in range(m.cols):
                acc = acc + m.entry(i, j) * vec[j]
            assert acc.is_zero()


def test_lagrange_diagonal_example():
    m = ExactMatrix.from_rows([[1, 0], [0, 2]])
    p1, p2 = lagrange_projectors(m, [1, 2])
    assert p1 == ExactMatrix.from_rows([[1, 0], [0, 0]])
    assert p2 == ExactMatrix.from_rows([[0, 0], [0, 1]])


def test_lagrange_identity_example():
    m = ExactMatrix.identity(4)
    (p,) = lagrange_projectors(m, [1])
    assert p == m


def test_lagrange_non_diagonal():
    m = ExactMatrix.from_rows([[1, 1], [0, 2]])
    p1, p2 = lagrange_projectors(m, [1, 2])
    assert p1 == ExactMatrix.from_rows([[1, -1], [0, 0]])
    assert p2 == ExactMatrix.from_rows([[0, 1], [0, 1]])


def test_lagrange_annihilation_failure():
    m = ExactMatrix.from_rows([[1, 0], [0, 2]])
    with pytest.raises(AnnihilationFailure):
        lagrange_projectors(m, [1, 3])


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.sampled_from([Fraction(0), Fraction(1), Fraction(2), Fraction(-1, 2)]),
             min_size=2, max_size=5)
)
def test_lagrange_projector_properties(diag):
    m = ExactMatrix.from_rows(
        [[diag[i] if i == j else 0 for j in range(len(diag))] for i in range(len(diag))]
    )
    eigs = sorted(set(diag))
    projs = lagrange_projectors(m, eigs)
    n = len(diag)
    total = ExactMatrix.zeros(n, n)
    for c, p in zip(eigs, projs):
        assert p @ p == p
        assert m @ p == p.scale(c)
        total = total + p
    assert total == ExactMatrix.identity(n)
    for i, pi in enumerate(projs):
        for j, pj in enumerate(projs):
            if i != j:
                assert (pi @ pj).is_zero()


def test_matrix_algebra_basics():
    a = ExactMatrix.from_rows([[Fraction(1, 2), 1], [0, ComplexRational(0, 1)]])
    b = ExactMatrix.from_rows([[2, 0], [ComplexRational(0, -1), 1]])
    prod = a @ b
    assert prod.entry(0, 0) == ComplexRational(1, -1)
    assert prod.entry(0, 1) == ComplexRational(1)
    assert prod.entry(1, 0) == ComplexRational(1)  # i * (-i)
    assert prod.entry(1, 1) == ComplexRational(0, 1)
    assert (a - a).is_zero()
    assert a.conj_transpose().entry(1, 1) == ComplexRational(0, -1)
    assert (a + a).entry(0, 0) == ComplexRational(1)
    assert a.trace() == ComplexRational(Fraction(1, 2), 1)
