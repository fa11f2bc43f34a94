import pytest
from hypothesis import given
from hypothesis import strategies as st

from icosamono import a5, intersections, surfaces
from icosamono.lattice import mat_mul

MODELS = ("sigma", "pi")
ELEMENTS = sorted(a5.eo_lattice().elements)


@pytest.mark.parametrize("model", MODELS)
def test_cells_and_euler_characteristic(model):
    cx = surfaces.build(model)
    assert (cx.n0, cx.n1, cx.n2) == (30, 60, 12)
    assert cx.euler_characteristic == -18
    assert surfaces.betti_numbers(model) == (1, 20, 1)


@pytest.mark.parametrize("model", MODELS)
def test_boundary_squared_zero(model):
    cx = surfaces.build(model)
    assert not any(any(r) for r in mat_mul(cx.boundary1, cx.boundary2))


@pytest.mark.parametrize("model", MODELS)
def test_homology_free_with_unimodular_gram(model):
    hb = surfaces.homology(model)
    assert hb.rank == 20 and hb.torsion == ()
    assert surfaces.unimodular(hb.gram)


@pytest.mark.parametrize("model", MODELS)
def test_equivariance_of_boundaries(model):
    cx = surfaces.build(model)
    for g in ELEMENTS[::7]:
        a0, a1, a2 = cx.group_action(g)
        assert mat_mul(cx.boundary1, a1) == mat_mul(a0, cx.boundary1)
        assert mat_mul(cx.boundary2, a2) == mat_mul(a1, cx.boundary2)


def test_intersection_tables():
    failed = [c for c in intersections.table_report() if not c.passed]
    assert failed == []


def test_special_table_values():
    # the non-unit entries of the tables: 5 on the base vertex and -2 past it
    pi = surfaces.build("pi")
    vals = surfaces.structured_cycles("pi")
    e = surfaces.model_data("pi").base_label
    assert pi.intersection(vals["edge"], pi.truncation_cycle(e)) == 5
    sigma = surfaces.build("sigma")
    svals = surfaces.structured_cycles("sigma")
    got = {sigma.intersection(svals["trc'"], sigma.edge_cycle(y)) for y in range(60)}
    assert -2 in got


def _classes(model):
    hb = surfaces.homology(model)
    return st.lists(st.integers(-4, 4), min_size=hb.rank, max_size=hb.rank).map(tuple)


@pytest.mark.parametrize("model", MODELS)
def test_pairing_properties(model):
    hb = surfaces.homology(model)

    @given(_classes(model), _classes(model), _classes(model), st.sampled_from(ELEMENTS))
    def check(x, y, z, g):
        assert hb.pair_classes(x, y) == -hb.pair_classes(y, x)
        xz = tuple(a + b for a, b in zip(x, z))
        assert hb.pair_classes(xz, y) == hb.pair_classes(x, y) + hb.pair_classes(z, y)
        act = hb.action(g)
        gx = tuple(sum(r[j] * x[j] for j in range(hb.rank)) for r in act)
        gy = tuple(sum(r[j] * y[j] for j in range(hb.rank)) for r in act)
        assert hb.pair_classes(gx, gy) == hb.pair_classes(x, y)

    check()


@pytest.mark.parametrize("model", MODELS)
def test_cycle_pairing_matches_homology_pairing(model):
    cx = surfaces.build(model)
    hb = surfaces.homology(model)
    loops = [cx.truncation_cycle(x) for x in range(3)] + [cx.edge_cycle(y) for y in range(0, 60, 17)]
    for a in loops:
        for b in loops:
            assert cx.intersection(a, b) == hb.pair_classes(hb.classify(a), hb.classify(b))


@pytest.mark.parametrize("model", MODELS)
def test_dump_format(model):
    text = surfaces.dump_complex(model)
    lines = text.splitlines()
    assert lines[0].startswith("# complex")
    assert len(lines) == 1 + 30 + 60 + 12
    for line in lines[1:]:
        dim, idx, kind, *rest = line.split(" ")
        assert dim in "012" and idx.isdigit()
        assert rest[0].startswith("boundary=")
        assert [f.split("=")[0] for f in rest[1:]] == ["s2", "s3", "s5", "iota"]
    assert surfaces.dump_complex(model) == text


def test_unknown_labels():
    with pytest.raises(surfaces.UnknownLabel):
        surfaces.build("torus")
    with pytest.raises(ValueError):
        surfaces.homology("sigma").classify([1] + [0] * 59)


@pytest.mark.parametrize("model", MODELS)
def test_stabilizer_orders(model):
    # 0-cells have stabilizers of order 2, 2-cells of order 5
    cx = surfaces.build(model)
    for dim, n, order in ((0, cx.n0, 2), (2, cx.n2, 5)):
        for j in range(n):
            assert sum(1 for g in ELEMENTS if cx.group_action(g)[dim][j][j]) == order


@pytest.mark.parametrize("model", MODELS)
def test_iota_fixed_cells(model):
    cx = surfaces.build(model)
    i0, i1, i2 = cx.iota_action()
    assert all(i0[j][j] == 1 for j in range(cx.n0))
    fixed = [j for j in range(cx.n1) if i1[j][j]]
    assert {cx.cell_kind(j) for j in fixed} == {surfaces.TRUNCATION} and len(fixed) == 30
    assert all(i1[j][j] == 1 for j in fixed)
    assert not any(i2[j][j] for j in range(cx.n2))
