import pytest
from hypothesis import given
from hypothesis import strategies as st

from icosamono.lattice import (
    NotContained,
    RankDeficient,
    Sublattice,
    as_matrix,
    certify_generation,
    det,
    hermite_rows,
    identity,
    kernel_basis,
    lattice_quotient,
    mat_mul,
    mat_vec,
    rank,
    smith_normal_form,
    solve_integer,
)

small = st.integers(-6, 6)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m).map(as_matrix)
        )
    )


def test_snf_known_example():
    # diag(2, 6) up to unimodular change
    a = as_matrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert smith_normal_form(a).factors == (2, 6, 12)


def test_det_bareiss():
    assert det(as_matrix([[2, 1], [7, 4]])) == 1
    assert det(as_matrix([[0, 1, 2], [1, 0, 3], [4, -3, 8]])) == -2
    assert det(identity(5)) == 1


@given(matrices())
def test_snf_decomposition(a):
    r = smith_normal_form(a)
    assert mat_mul(mat_mul(r.u, a), r.v) == r.d
    assert abs(det(r.u)) == 1 and abs(det(r.v)) == 1
    for i, row in enumerate(r.d):
        for j, x in enumerate(row):
            if i != j:
                assert x == 0


@given(matrices())
def test_snf_divisibility_chain(a):
    f = [x for x in smith_normal_form(a).factors if x]
    assert all(x > 0 for x in f)
    assert all(f[i + 1] % f[i] == 0 for i in range(len(f) - 1))
    assert all(x == 0 for x in smith_normal_form(a).factors[len(f):])


@given(matrices())
def test_kernel_is_kernel_and_saturated(a):
    k = kernel_basis(a)
    n = len(a[0])
    assert k.rank == n - rank(a)
    for v in k.basis:
        assert not any(mat_vec(a, v))
    assert k.is_saturated()


@given(matrices(), st.lists(small, min_size=4, max_size=4))
def test_solve_integer_consistent(a, x):
    x = x[: len(a[0])]
    b = mat_vec(a, x)
    y = solve_integer(a, b)
    assert y is not None and mat_vec(a, y) == b


def test_solve_integer_none():
    assert solve_integer(as_matrix([[2, 0], [0, 2]]), (1, 0)) is None


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=5))
def test_hermite_spans_same_lattice(rows):
    h = hermite_rows(rows, 3)
    lat = Sublattice(3, h)
    assert all(lat.contains(r) for r in rows)
    back = Sublattice.span(rows, 3)
    assert all(back.contains(r) for r in h)


def test_lattice_quotient():
    sup = Sublattice.full(3)
    sub = Sublattice.span([(2, 0, 0), (0, 6, 0)], 3)
    assert lattice_quotient(sub, sup) == [2, 6, 0]
    assert lattice_quotient(sup, sup) == []
    with pytest.raises(NotContained):
        lattice_quotient(sup, sub)


def test_certify_generation():
    pairing = as_matrix([[0, 1], [-1, 0]])
    assert certify_generation(pairing, as_matrix([[1, 1], [0, 1]]))
    assert not certify_generation(pairing, as_matrix([[2, 0], [0, 1]]))
    with pytest.raises(RankDeficient):
        certify_generation(pairing, as_matrix([[1, 0]]))
    with pytest.raises(ValueError):
        certify_generation(as_matrix([[0, 2], [-2, 0]]), identity(2))
