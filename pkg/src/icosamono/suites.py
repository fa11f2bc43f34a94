"""Verification suites, run in dependency order by the command line tool."""

from __future__ import annotations

from typing import Callable

from . import a5, intersections, isotypic, monodromy, surfaces
from .checks import Check
from .lattice import identity, mat_mul, mat_scale, mat_vec, transpose
from .quadring import OElem, OoElem, X, Y, embed_oo

SUITE_ORDER = ("rep-a5", "surface-models", "isotypic", "monodromy", "fp-groups")


def rep_a5_checks() -> list[Check]:
    lat = a5.eo_lattice()
    mats = list(lat.elements.values())
    out = [
        Check.equal("Eo.group_order", 60, len(lat.elements)),
        Check.equal("Eo.matrices_distinct", 60, len(set(mats))),
        Check.true("Eo.generators_signed_permutations", all(a5.is_signed_permutation(m) for m in lat.action.values())),
        Check.true("Eo.orthonormal_invariant_form", all(mat_mul(transpose(m), m) == identity(6) for m in mats)),
        Check.true("Eo.X_squared_is_5", mat_mul(lat.x, lat.x) == mat_scale(5, identity(6))),
        Check.true("Eo.X_commutes_with_group", all(mat_mul(lat.x, m) == mat_mul(m, lat.x) for m in mats)),
        Check.true("Eo.X_self_adjoint", transpose(lat.x) == lat.x),
    ]
    rep = a5.verify_endo_ring()
    out.append(Check.equal("Eo.commutant_rank", 2, rep.commutant_rank))
    out.append(Check.true("Eo.commutant_is_Z[X]", rep.commutant_is_span_id_x))
    units = ", ".join(_render_endo(a, b) for a, b in rep.units_in_box)
    out.append(Check("Eo.automorphisms_are_plus_minus_id", rep.units_are_plus_minus_id, "1, -1", units))
    isos = ", ".join(_render_endo(a, b) for a, b in rep.isometric_units)
    out.append(Check("Eo.isometric_automorphisms_are_plus_minus_id", rep.isometries_are_plus_minus_id, "1, -1", isos))
    e = lat.basis_vector("e")
    orb = a5.orbit(e)
    out.append(Check.equal("Eo.orbit_of_e_size", 12, len(orb)))
    out.append(Check.true("Eo.orbit_of_e_closed_under_negation", all(tuple(-x for x in v) in orb for v in orb)))
    out.append(Check.equal("Eo.even_sublattice_index", [2], a5.even_sublattice_index()))
    even = a5.even_sublattice()
    out.append(
        Check.true(
            "Eo.even_sublattice_stable_under_2Y-1",
            all(even.contains(mat_vec(lat.x, v)) for v in even.basis),
        )
    )
    out.append(Check.true("O.embedding_X_to_2Y-1", embed_oo(X) == 2 * Y - 1 and (2 * Y - 1) * (2 * Y - 1) == OElem(5, 0)))
    return out


def _render_endo(a: int, b: int) -> str:
    return str(OoElem(b, a))


def surface_checks() -> list[Check]:
    return surface_structure_checks() + intersections.table_report()


def surface_structure_checks() -> list[Check]:
    out: list[Check] = []
    for model in ("sigma", "pi"):
        tag = isotypic.MODEL_TAG[model]
        cx = surfaces.build(model)
        hb = surfaces.homology(model)
        zero = tuple(tuple(0 for _ in range(cx.n2)) for _ in range(cx.n0))
        out.append(Check.equal(f"{tag}.cell_counts", (30, 60, 12), (cx.n0, cx.n1, cx.n2)))
        out.append(Check.equal(f"{tag}.euler_characteristic", -18, cx.euler_characteristic))
        out.append(Check.true(f"{tag}.boundary_squared_zero", mat_mul(cx.boundary1, cx.boundary2) == zero))
        out.append(Check.equal(f"{tag}.betti_numbers", (1, 20, 1), surfaces.betti_numbers(model)))
        out.append(Check.equal(f"{tag}.H1_rank", 20, hb.rank))
        out.append(Check.equal(f"{tag}.H1_torsion", (), tuple(hb.torsion)))
        actions = dict(cx.generator_actions())
        actions["iota"] = cx.iota_action()
        for name, (a0, a1, a2) in actions.items():
            ok = mat_mul(cx.boundary1, a1) == mat_mul(a0, cx.boundary1) and mat_mul(cx.boundary2, a2) == mat_mul(
                a1, cx.boundary2
            )
            out.append(Check.true(f"{tag}.boundaries_commute_with_{name}", ok))
        i1 = cx.iota_action()[1]
        out.append(Check.true(f"{tag}.iota_involution", mat_mul(i1, i1) == identity(cx.n1)))
        out.append(Check.equal(f"{tag}.oriented_1cell_orbits", (60, 60), oriented_orbits(model)))
        vals = surfaces.structured_cycles(model)
        cyc = all(cx.is_cycle(vals[n]) for n in surfaces.CYCLE_NAMES) and cx.is_cycle(vals[model])
        out.append(Check.true(f"{tag}.named_chains_are_cycles_and_halves_exist", cyc))
    return out


def oriented_orbits(model: str) -> tuple[int, ...]:
    """Sizes of the orbits of the group on signed 1-cells, when each orbit is free."""
    cx = surfaces.build(model)
    mats = [cx.group_action(g)[1] for g in a5.eo_lattice().elements]
    seen: set[tuple[int, int]] = set()
    sizes = []
    for c in range(cx.n1):
        for s in (1, -1):
            if (c, s) in seen:
                continue
            orbit = set()
            for m in mats:
                col = [m[r][c] * s for r in range(cx.n1)]
                (r,) = [r for r in range(cx.n1) if col[r]]
                orbit.add((r, col[r]))
            if len(orbit) != len(mats):
                return ()
            seen |= orbit
            sizes.append(len(orbit))
    return tuple(sorted(sizes))


def isotypic_checks() -> list[Check]:
    out = isotypic.structure_report("sigma") + isotypic.structure_report("pi")
    for model in ("sigma", "pi"):
        gens = isotypic.homology_generators(model)
        tag = isotypic.MODEL_TAG[model]
        f = gens.z_basis_form
        out.append(Check.true(f"{tag}.form_alternating", transpose(f) == mat_scale(-1, f)))
        u, v = gens.u, gens.v
        fx = isotypic.symplectic_form(model, isotypic.compose_x(u), v)
        xf = isotypic.symplectic_form(model, u, isotypic.compose_x(v))
        out.append(Check.true(f"{tag}.X_self_adjoint_for_form", fx == xf))
        got = (isotypic.symplectic_form(model, u, v), isotypic.symplectic_form(model, u, isotypic.compose_x(v)))
        out.append(Check.equal(f"{tag}.form(U,V),form(U,XV)", FROZEN_FORM, got))
        out.append(Check.true(f"{tag}.form_pairs_U_with_V_over_Oo", got != (0, 0)))
    return out


# Frozen golden values, cross-checked against pairing the six columns in H1 directly.
# The integer contraction of U with V vanishes; the pairing is carried by U with XV.
FROZEN_FORM = (0, -30)


def monodromy_checks() -> list[Check]:
    return monodromy.monodromy_report()


SUITES: dict[str, Callable[[], list[Check]]] = {
    "rep-a5": rep_a5_checks,
    "surface-models": surface_checks,
    "isotypic": isotypic_checks,
    "monodromy": monodromy_checks,
}
