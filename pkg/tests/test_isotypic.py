import pytest
from hypothesis import given
from hypothesis import strategies as st

from icosamono import isotypic, surfaces
from icosamono.lattice import mat_scale, transpose
from icosamono.quadring import OoElem
from icosamono.suites import FROZEN_FORM

MODELS = ("sigma", "pi")


@pytest.mark.parametrize("model", MODELS)
def test_hom_ranks(model):
    mods = isotypic.chain_modules(model)
    ranks = tuple(isotypic.hom_lattice(mods[k]).rank for k in ("C2", "B1", "Z_trc", "Z_edge", "H1"))
    assert ranks == (2, 2, 2, 2, 4)


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("key", ["C2", "B1", "Z_trc", "Z_edge", "Z1", "H1"])
def test_two_routes_agree(model, key):
    mod = isotypic.chain_modules(model)[key]
    assert isotypic.hom_lattice(mod).lattice.basis == isotypic.hom_lattice_by_fixed_vectors(mod).basis


@pytest.mark.parametrize("model", MODELS)
def test_x_equations(model):
    for _, eqs in isotypic.X_EQUATIONS[model].items():
        for lhs, rhs in eqs:
            assert isotypic.x_equation_holds(model, lhs, rhs)


@pytest.mark.parametrize("model", MODELS)
def test_expansions_in_u_v(model):
    gens = isotypic.homology_generators(model)
    for name, (a, c) in isotypic.EXPANSIONS[model].items():
        got = gens.express(isotypic.p_map(model, name))
        assert got == (OoElem(*a), OoElem(*c))


@pytest.mark.parametrize("model", MODELS)
def test_u_v_generate_and_frozen_form(model):
    gens = isotypic.homology_generators(model)
    assert gens.generates
    u, v = gens.u, gens.v
    got = (isotypic.symplectic_form(model, u, v), isotypic.symplectic_form(model, u, isotypic.compose_x(v)))
    assert got == FROZEN_FORM
    f = gens.z_basis_form
    assert f == ((0, 0, 0, -30), (0, 0, -30, 0), (0, 30, 0, 0), (30, 0, 0, 0))


def test_frozen_form_from_h1_columns():
    # independent route: pair the six columns of U and XV as classes in H1
    model = "sigma"
    gens = isotypic.homology_generators(model)
    hb = surfaces.homology(model)
    xv = isotypic.compose_x(gens.v)
    total = sum(hb.pair_classes(a, b) for a, b in zip(transpose(gens.u), transpose(xv)))
    assert total == FROZEN_FORM[1]


def _maps(model):
    basis = isotypic.hom_lattice(isotypic.chain_modules(model)["H1"]).basis_maps
    coeffs = st.lists(st.integers(-5, 5), min_size=len(basis), max_size=len(basis))

    def combine(cs):
        out = None
        for k, m in zip(cs, basis):
            t = mat_scale(k, m)
            out = t if out is None else tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(out, t))
        return out

    return coeffs.map(combine)


@pytest.mark.parametrize("model", MODELS)
def test_form_properties(model):
    @given(_maps(model), _maps(model))
    def check(phi, psi):
        f = isotypic.symplectic_form
        assert f(model, phi, phi) == 0
        assert f(model, phi, psi) == -f(model, psi, phi)
        assert f(model, isotypic.compose_x(phi), psi) == f(model, phi, isotypic.compose_x(psi))

    check()


def test_non_equivariant_map_detected():
    mod = isotypic.chain_modules("sigma")["H1"]
    bad = tuple(tuple(1 if (i, j) == (0, 0) else 0 for j in range(6)) for i in range(mod.rank))
    assert not isotypic.is_equivariant(mod, bad)
    assert isotypic.homology_generators("sigma").express(bad) is None


def test_unknown_named_map():
    with pytest.raises(surfaces.UnknownLabel):
        isotypic.named_map("sigma", "nonsense")
