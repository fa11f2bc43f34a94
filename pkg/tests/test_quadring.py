from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from icosamono.quadring import F4, OElem, OoElem, QuadMatrix2, X, Y, embed_oo, real_embeddings, reduce_mod2

ints = st.integers(-50, 50)
oo = st.builds(OoElem, ints, ints)
oe = st.builds(OElem, ints, ints)


def test_generators():
    assert X * X == 5
    assert Y * Y == Y + 1
    assert embed_oo(X) == 2 * Y - 1


@given(oo, oo, oo)
def test_oo_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0


@given(oe, oe, oe)
def test_o_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(oo, oo)
def test_embedding_is_homomorphism(a, b):
    assert embed_oo(a * b) == embed_oo(a) * embed_oo(b)
    assert embed_oo(a + b) == embed_oo(a) + embed_oo(b)
    assert embed_oo(a).to_oo() == a


@given(oe, oe)
def test_norm_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()
    assert a * a.conj() == a.norm()


@given(oe, oe)
def test_reduce_mod2_is_homomorphism(a, b):
    assert reduce_mod2(a * b) == reduce_mod2(a) * reduce_mod2(b)
    assert reduce_mod2(a + b) == reduce_mod2(a) + reduce_mod2(b)


def test_oo_reduces_into_f2():
    assert all(reduce_mod2(OoElem(a, b)).in_f2() for a in range(2) for b in range(2))


def test_f4_is_field():
    els = F4.elements()
    assert all(x * x.inverse() == F4(1) for x in els if x.value)
    assert all(x + x == F4(0) for x in els)
    w = F4(2)
    assert w * w == w + F4(1)
    with pytest.raises(ZeroDivisionError):
        F4(0).inverse()


def test_units():
    assert (2 + X).is_unit() and (X - 2) * (X + 2) == 1
    assert not (1 + X).is_unit()
    assert Y.is_unit()


@given(oo, oo, oo)
def test_quadmatrix_inverse(a, b, c):
    # [[1 + ab, a], [b, 1]] has determinant 1
    m = QuadMatrix2.of(((1 + a * b, a), (b, 1))) * QuadMatrix2.of(((1, 0), (c, 1)))
    assert m.is_sl2()
    assert (m * m.inverse()).is_identity()


@given(oo, oo)
def test_det_multiplicative(a, b):
    m = QuadMatrix2.of(((a, b), (b, a + 1)))
    n = QuadMatrix2.of(((b, 1), (a, X)))
    assert (m * n).det() == m.det() * n.det()


@given(oo)
def test_parse_roundtrip_oo(a):
    assert OoElem.parse(str(a)) == a


@given(oe)
def test_parse_roundtrip_o(a):
    assert OElem.parse(str(a)) == a


def test_parse_grammar():
    assert OoElem.parse(" 3 - 2*X ") == OoElem(3, -2)
    assert OoElem.parse("-X") == OoElem(0, -1)
    assert OElem.parse("Y") == Y
    with pytest.raises(ValueError):
        OoElem.parse("3+Y")
    with pytest.raises(ValueError):
        OoElem.parse("")


@given(oe, st.integers(8, 80))
def test_real_embeddings_certified(a, bits):
    (lo1, hi1), (lo2, hi2) = real_embeddings(a, bits)
    assert 0 <= hi1 - lo1 < Fraction(1, 2**bits)
    assert 0 <= hi2 - lo2 < Fraction(1, 2**bits)
    # the two images sum to the trace and multiply to the norm
    assert lo1 + lo2 <= 2 * a.a + a.b <= hi1 + hi2
    prods = [p * q for p in (lo1, hi1) for q in (lo2, hi2)]
    assert min(prods) <= a.norm() <= max(prods)


def test_real_embeddings_golden_ratio():
    (lo, hi), (lo2, hi2) = real_embeddings(Y)
    assert lo * lo <= hi + 1 and hi * hi >= lo + 1
    assert lo > 1 and hi2 < 0
