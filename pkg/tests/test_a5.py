import pytest
from hypothesis import given
from hypothesis import strategies as st

from icosamono import a5
from icosamono.lattice import identity, mat_mul, mat_scale, transpose

LAT = a5.eo_lattice()
ELEMENTS = sorted(LAT.elements)
group_elements = st.sampled_from(ELEMENTS)
vectors = st.lists(st.integers(-9, 9), min_size=6, max_size=6).map(tuple)


def test_group_order():
    assert len(LAT.elements) == 60
    assert len(set(LAT.elements.values())) == 60


def test_generator_relation():
    s2, s3, s5 = (LAT.action[n] for n in a5.GENERATOR_NAMES)
    assert mat_mul(mat_mul(s2, s3), s5) == identity(6)


def test_x_squared_and_commutes():
    assert mat_mul(LAT.x, LAT.x) == mat_scale(5, identity(6))
    assert all(mat_mul(LAT.x, m) == mat_mul(m, LAT.x) for m in LAT.elements.values())


def test_x_of_e():
    e = LAT.basis_vector("e")
    assert LAT.apply_x(e) == (0, 1, 1, 1, 1, 1)


def test_commutant_is_span_of_id_and_x():
    rep = a5.verify_endo_ring()
    assert rep.commutant_rank == 2
    assert rep.commutant_is_span_id_x


def test_two_plus_x_is_an_automorphism():
    # (X + 2)(X - 2) = 5 - 4 = 1, so the units are not only +-1
    rep = a5.verify_endo_ring()
    assert (1, 2) in rep.units_in_box and (1, -2) in rep.units_in_box
    assert not rep.units_are_plus_minus_id
    assert mat_mul(a5.endo(1, 2), a5.endo(1, -2)) == identity(6)


def test_isometric_automorphisms_are_plus_minus_id():
    assert a5.verify_endo_ring().isometries_are_plus_minus_id


def test_orbit_of_e():
    orb = a5.orbit(LAT.basis_vector("e"))
    assert len(orb) == 12
    assert all(tuple(-x for x in v) in orb for v in orb)


def test_even_sublattice_index():
    assert a5.even_sublattice_index() == [2]


def test_odd_permutation_rejected():
    with pytest.raises(a5.OddPermutation):
        LAT.matrix(a5.perm_from_cycles([[1, 2]]))


@given(group_elements, group_elements)
def test_action_is_homomorphism(g, h):
    assert LAT.matrix(a5.perm_mul(g, h)) == mat_mul(LAT.matrix(g), LAT.matrix(h))


@given(group_elements, vectors, vectors)
def test_inner_product_invariant(g, v, w):
    assert LAT.inner(LAT.act(g, v), LAT.act(g, w)) == LAT.inner(v, w)


@given(vectors, vectors)
def test_x_self_adjoint(v, w):
    assert LAT.inner(LAT.apply_x(v), w) == LAT.inner(v, LAT.apply_x(w))
    assert transpose(LAT.x) == LAT.x


@given(group_elements)
def test_signed_permutations(g):
    assert a5.is_signed_permutation(LAT.matrix(g))
