"""Entrywise checks of the intersection tables on both surface models."""

from __future__ import annotations

from typing import Callable

from . import surfaces
from .checks import Check
from .lattice import det, transpose

MODEL_TAG = {"sigma": "Sigma", "pi": "Pi"}


def loop_table(model: str) -> list[Check]:
    """Truncation loops against edge loops, and loops of the same type."""
    cx = surfaces.build(model)
    m = cx.base
    tag = MODEL_TAG[model]
    trc = [cx.truncation_cycle(x) for x in range(len(m.vertices))]
    edge = [cx.edge_cycle(y) for y in range(60)]
    mismatches = []
    for x, a in enumerate(trc):
        for y, b in enumerate(edge):
            got = cx.intersection(a, b)
            # the loop y - iota(y) arrives at tm(y) and at ini(iota y)
            if x in (m.tm(y), m.ini(m.iota[y])):
                want = 1
            elif x in (m.ini(y), m.tm(m.iota[y])):
                want = -1
            else:
                want = 0
            if got != want:
                mismatches.append((x, y, want, got))
    out = [Check(f"{tag}.trc_edge_pairing", not mismatches, "0 off the loop, +1 where the loop arrives", f"{len(mismatches)} mismatches")]
    same_trc = all(cx.intersection(a, b) == 0 for a in trc for b in trc)
    same_edge = all(cx.intersection(a, b) == 0 for a in edge for b in edge)
    out.append(Check.true(f"{tag}.trc_trc_pairing_zero", same_trc))
    out.append(Check.true(f"{tag}.edge_edge_pairing_zero", same_edge))
    return out


def gram_checks(model: str) -> list[Check]:
    g = surfaces.homology(model).gram
    tag = MODEL_TAG[model]
    neg = tuple(tuple(-x for x in row) for row in g)
    return [
        Check.true(f"{tag}.gram_antisymmetric", transpose(g) == neg),
        Check.equal(f"{tag}.gram_det", 1, det(g)),
    ]


def _table(
    name: str,
    cx: surfaces.EquivariantComplex,
    chain,
    cycles: dict[int, tuple],
    rule: Callable[[int], int],
) -> Check:
    bad = []
    for label, cyc in cycles.items():
        got = cx.intersection(chain, cyc)
        want = rule(label)
        if got != want:
            bad.append(f"{label}:{want}!={got}")
    return Check(name, not bad, "all entries match", "; ".join(bad) if bad else f"{len(cycles)} entries match")


def _zero_against(name: str, cx, chains, cycles) -> Check:
    ok = all(cx.intersection(c, z) == 0 for c in chains for z in cycles)
    return Check.true(name, ok)


def sigma_special_table() -> list[Check]:
    cx = surfaces.build("sigma")
    m = cx.base
    data = surfaces.model_data("sigma")
    vals = surfaces.structured_cycles("sigma")
    on_e, v_e, iv_e = data.sets["on_e"], data.sets["V_e"], data.sets["iota_V_e"]
    dx = {x: cx.truncation_cycle(x) for x in data.rep_vertices}
    dy = {y: cx.edge_cycle(y) for y in data.rep_darts}
    all_x = [cx.truncation_cycle(x) for x in range(len(m.vertices))]
    all_y = [cx.edge_cycle(y) for y in range(60)]
    out = [
        Check.equal("Sigma.R0_size", 10, len(dx)),
        Check.equal("Sigma.R1_size", 15, len(dy)),
        _zero_against("Sigma.edge_maps_vs_edge_loops", cx, (vals["edge"], vals["edge'"]), all_y),
        _zero_against("Sigma.trc_maps_vs_trc_loops", cx, (vals["trc"], vals["trc'"]), all_x),
        _table("Sigma.<sigma_edge(e),delta_x>", cx, vals["edge"], dx, lambda x: 1 if x in on_e else -1),
        _table("Sigma.<sigma'_edge(e),delta_x>", cx, vals["edge'"], dx, lambda x: 0 if x in on_e else 2),
    ]

    def trc_rule(y: int) -> int:
        return -1 if m.ini(y) in on_e and m.tm(y) in v_e else 0

    def trc2_rule(y: int) -> int:
        if m.ini(y) in on_e and m.tm(y) in v_e:
            return 1
        if m.ini(y) in v_e and m.tm(y) in iv_e:
            return -2
        return 0

    out.append(_table("Sigma.<sigma_trc(e),delta_y>", cx, vals["trc"], dy, trc_rule))
    out.append(_table("Sigma.<sigma'_trc(e),delta_y>", cx, vals["trc'"], dy, trc2_rule))
    return out


def pi_special_table() -> list[Check]:
    cx = surfaces.build("pi")
    m = cx.base
    data = surfaces.model_data("pi")
    vals = surfaces.structured_cycles("pi")
    e = data.base_label
    link_e, link_ie = data.sets["link_e"], data.sets["link_iota_e"]
    reps = set(data.rep_vertices)
    tx = {x: cx.truncation_cycle(x) for x in data.rep_vertices}
    # darts into e are the reverses of darts out of e and are left out
    ty = {y: cx.edge_cycle(y) for y in range(60) if m.ini(y) in reps and m.tm(y) != e}
    all_x = [cx.truncation_cycle(x) for x in range(len(m.vertices))]
    all_y = [cx.edge_cycle(y) for y in range(60)]
    out = [
        Check.equal("Pi.R0_size", 6, len(tx)),
        _zero_against("Pi.edge_maps_vs_edge_loops", cx, (vals["edge"], vals["edge'"]), all_y),
        _zero_against("Pi.trc_maps_vs_trc_loops", cx, (vals["trc"], vals["trc'"]), all_x),
        _table("Pi.<pi_edge(e),theta_x>", cx, vals["edge"], tx, lambda x: 5 if x == e else -1),
        _table("Pi.<pi'_edge(e),theta_x>", cx, vals["edge'"], tx, lambda x: 0 if x == e else 2),
        _table("Pi.<pi_trc(e),theta_y>", cx, vals["trc"], ty, lambda y: -1 if m.ini(y) == e else 0),
    ]

    def trc2_rule(y: int) -> int:
        if m.ini(y) == e:
            return 1
        if m.ini(y) in link_e and m.tm(y) in link_ie:
            return -2
        return 0

    out.append(_table("Pi.<pi'_trc(e),theta_y>", cx, vals["trc'"], ty, trc2_rule))
    return out


def truncation_loops_antipodal(model: str) -> Check:
    """The loop around the antipodal vertex is the same loop with reversed orientation."""
    cx = surfaces.build(model)
    m = cx.base
    ok = all(
        cx.truncation_cycle(m.vertex_iota(x)) == tuple(-c for c in cx.truncation_cycle(x)) for x in range(len(m.vertices))
    )
    return Check.true(f"{MODEL_TAG[model]}.trc_loop_antipode_reverses", ok)


def edge_loops_reverse(model: str) -> Check:
    """Reversing a dart, or moving it to its antipode, negates its loop."""
    cx = surfaces.build(model)
    m = cx.base
    ok = all(
        cx.edge_cycle(m.theta[y]) == tuple(-c for c in cx.edge_cycle(y))
        and cx.edge_cycle(m.iota[y]) == tuple(-c for c in cx.edge_cycle(y))
        for y in range(60)
    )
    return Check.true(f"{MODEL_TAG[model]}.edge_loop_reversal_negates", ok)


def table_report() -> list[Check]:
    out: list[Check] = []
    for model in ("sigma", "pi"):
        out += loop_table(model)
        out += gram_checks(model)
        out.append(truncation_loops_antipodal(model))
        out.append(edge_loops_reverse(model))
    out += sigma_special_table()
    out += pi_special_table()
    return out
