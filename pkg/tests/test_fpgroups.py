import pytest
from hypothesis import given
from hypothesis import strategies as st

from icosamono import fpgroups as fp
from icosamono.monodromy import displayed_generators
from icosamono.quadring import OElem, QuadMatrix2

a, b = ((0, 1),), ((1, 1),)


def cyclic(n):
    return fp.FpGroup(("a",), (fp.power(a, n),))


S3 = fp.FpGroup(("a", "b"), (fp.power(a, 3), fp.power(b, 2), fp.power(fp.word(a, b), 2)))
A5 = fp.FpGroup(("a", "b"), (fp.power(a, 2), fp.power(b, 3), fp.power(fp.word(a, b), 5)))


def test_small_indices():
    assert fp.todd_coxeter(cyclic(4), [fp.power(a, 2)]).index == 2
    assert fp.todd_coxeter(S3, [b]).index == 3
    assert fp.todd_coxeter(S3, [a]).index == 2
    assert fp.todd_coxeter(S3, []).index == 6
    assert fp.todd_coxeter(S3, [a, b]).index == 1
    assert fp.todd_coxeter(A5, []).index == 60


def test_overflow():
    with pytest.raises(fp.Overflow):
        fp.todd_coxeter(A5, [], limit=60)
    with pytest.raises(fp.Overflow):
        fp.todd_coxeter(fp.sl2o_presentation(), fp.MONODROMY_WORDS, limit=5)


def test_without_conjugates_same_index():
    assert fp.todd_coxeter(A5, [], conjugates=False).index == 60


words = st.lists(st.tuples(st.integers(0, 1), st.sampled_from((1, -1))), max_size=12).map(fp.free_reduce)


@given(words, words)
def test_word_algebra(u, v):
    assert fp.free_reduce(u + fp.inverse(u)) == ()
    assert fp.inverse(fp.inverse(u)) == u
    assert fp.power(u, -1) == fp.free_reduce(fp.inverse(u))
    assert fp.free_reduce(fp.commutator(u, v) + fp.commutator(v, u)) == ()


@given(words)
def test_table_action_respects_relators(w):
    t = fp.todd_coxeter(A5, [])
    for c in range(0, 60, 13):
        assert t.act(t.act(c, w), fp.inverse(w)) == c


def test_presentation_relators_evaluate_to_identity():
    g = fp.sl2o_presentation()
    assert len(g.relators) == 12
    for r in g.relators:
        assert fp.word_to_matrix(r).is_identity()


def test_words_give_monodromy_matrices():
    for w, m in zip(fp.MONODROMY_WORDS, displayed_generators()):
        assert fp.word_to_matrix(w) == m.embed()


def test_generators_in_sl2o():
    for m in fp.generator_matrices():
        assert m.ring is OElem and m.is_sl2()


def test_index_chain():
    t = fp.todd_coxeter(fp.sl2o_presentation(), fp.MONODROMY_WORDS)
    assert t.index == 20 and t.is_valid()
    fin = fp.index_oo_in_o()
    assert (fin.order_f4, fin.order_f2, fin.index) == (60, 6, 10)
    assert fin.reduction_onto
    chain = fp.certify_index_two(table=t)
    assert chain.index_in_sl2oo == 2
    assert chain.fibre_sizes == (2,) * 10


def test_certificate_rejects_wrong_table():
    # adding A3 to the subgroup collapses the table to a single coset,
    # which the index-ten quotient cannot divide
    t = fp.todd_coxeter(fp.sl2o_presentation(), list(fp.MONODROMY_WORDS) + [((fp.A3, 1),)], limit=10_000)
    assert t.index == 1
    with pytest.raises(fp.InconsistentChain):
        fp.certify_index_two(table=t)


def test_dump_format():
    t = fp.todd_coxeter(S3, [b])
    lines = t.dump().splitlines()
    assert lines[0] == "# cosets=3 columns=a,a^-1,b,b^-1"
    assert [int(x) for x in lines[1].split()][0] == 0
    assert len(lines) == 4 and all(len(l.split()) == 5 for l in lines[1:])


def test_identity_matrix():
    assert QuadMatrix2.identity(OElem).is_identity()
