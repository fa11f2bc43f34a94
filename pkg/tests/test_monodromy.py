import pytest
from hypothesis import given
from hypothesis import strategies as st

from icosamono import monodromy, surfaces
from icosamono.quadring import OoElem, QuadMatrix2

X = OoElem(0, 1)
CASES = [(m, k) for m in ("sigma", "pi") for k in (surfaces.TRUNCATION, surfaces.EDGE)]


def test_local_matrices():
    assert monodromy.local_monodromy("sigma", "truncation") == QuadMatrix2.of(((1, X - 2), (0, 1)))
    assert monodromy.local_monodromy("sigma", "edge") == QuadMatrix2.of(((3, X - 1), (-(X + 1), -1)))
    assert monodromy.local_monodromy("pi", "truncation") == QuadMatrix2.of(((1, X), (0, 1)))
    assert monodromy.local_monodromy("pi", "edge") == QuadMatrix2.of(((X - 2, 2 * X - 4), (-(X - 1), 4 - X)))


@pytest.mark.parametrize("model,kind", CASES)
def test_vanishing_class_counts(model, kind):
    sizes = {("sigma", "truncation"): 10, ("sigma", "edge"): 15, ("pi", "truncation"): 6, ("pi", "edge"): 15}
    assert len(monodromy.vanishing_set(model, kind)) == sizes[(model, kind)]


def test_p_conjugation_and_third_generator():
    p = monodromy.basis_change_p()
    s_edge = monodromy.local_monodromy("sigma", "edge")
    assert monodromy.local_monodromy("pi", "edge") == p.inverse() * s_edge * p
    assert monodromy.third_generator() == QuadMatrix2.of(((1, 0), (-X, 1)))


def test_rho_zero():
    assert monodromy.rho_zero_inverse() == QuadMatrix2.of(((0, 1), (-1, -1)))
    r0 = monodromy.rho_zero()
    assert (r0**3).is_identity() and not r0.is_identity()


def test_generators_preserve_form():
    form = monodromy.isotypic.homology_generators("sigma").z_basis_form
    for g in monodromy.global_generators():
        assert g.is_sl2()
        assert monodromy.preserves_form(g, form)


def test_report_all_pass():
    assert [c.name for c in monodromy.monodromy_report() if not c.passed] == []


def test_express_failure():
    bad = ((1, 0, 0, 0, 0, 0),) + tuple((0,) * 6 for _ in range(19))
    with pytest.raises(monodromy.ExpressFailure):
        monodromy._express("sigma", bad)


def test_unknown_degeneration():
    with pytest.raises(surfaces.UnknownLabel):
        monodromy.vanishing_set("sigma", "cusp")


@pytest.mark.parametrize("model,kind", CASES)
def test_picard_lefschetz_properties(model, kind):
    vs = monodromy.vanishing_set(model, kind)
    hb = surfaces.homology(model)
    classes = st.lists(st.integers(-3, 3), min_size=hb.rank, max_size=hb.rank).map(tuple)

    for l in vs.classes:
        assert monodromy.picard_lefschetz(vs, l) == l
        neg = tuple(-c for c in l)
        assert monodromy.picard_lefschetz(vs, neg) == neg

    flipped = monodromy.VanishingSet(model, kind, tuple(tuple(-c for c in l) for l in vs.classes))

    @given(classes, classes)
    def check(x, y):
        tx, ty = monodromy.picard_lefschetz(vs, x), monodromy.picard_lefschetz(vs, y)
        assert hb.pair_classes(tx, ty) == hb.pair_classes(x, y)
        assert monodromy.picard_lefschetz(flipped, x) == tx

    check()
