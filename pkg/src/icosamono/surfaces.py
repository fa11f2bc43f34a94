"""The two genus-10 surface models as cell complexes with an A5 action.

Both surfaces come from a regular map on the icosahedral group. Darts are
the 60 group elements; the group acts on darts by left multiplication and
the map structure is given by right multiplication:

* the dodecahedron uses vertex rotation d -> d*s3 and edge reversal d -> d*s2,
* the great dodecahedron uses vertex rotation d -> d*s5^2 and the same reversal.

An antipodal involution is right multiplication by an involution that
inverts the rotation generator and commutes with s2.

Truncating every vertex and gluing each boundary loop to its antipodal loop
gives a closed oriented surface of genus 10. Its cells are

* 0-cells: darts modulo the antipode (30),
* edge-type 1-cells: edges of the map, one per pair {d, reverse(d)} (30),
* truncation-type 1-cells: corners modulo the antipode (30),
* 2-cells: faces of the map, each now a decagon (12).

Edge-type cells come first in every 1-chain, truncation cells after them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from itertools import permutations
from typing import Optional, Sequence

from . import a5
from .a5 import Perm, perm_inv, perm_mul, perm_parity
from .lattice import (
    Matrix,
    Sublattice,
    Vector,
    as_matrix,
    det,
    image_basis,
    kernel_basis,
    mat_mul,
    mat_vec,
    smith_normal_form,
    solve_integer,
    transpose,
    vec_mat,
)

Chain = tuple[int, ...]
SignedDart = tuple[int, int]  # (1-cell index, +1 or -1)

EDGE, TRUNCATION = "edge", "truncation"


class UnknownLabel(KeyError):
    pass


class NotDivisible(ValueError):
    pass


class NotEquivariant(ValueError):
    pass


def _even_perms() -> tuple[Perm, ...]:
    return tuple(sorted(p for p in permutations(range(1, 6)) if not perm_parity(p)))


def _orbits(perm: Sequence[int]) -> list[tuple[int, ...]]:
    seen: set[int] = set()
    out = []
    for i in range(len(perm)):
        if i in seen:
            continue
        orb, j = [], i
        while j not in seen:
            seen.add(j)
            orb.append(j)
            j = perm[j]
        out.append(tuple(orb))
    return out


def _antipode_for(rotation: Perm) -> Perm:
    """The unique non-identity element commuting with s2 and inverting the rotation."""
    found = [
        t
        for t in _even_perms()
        if t != a5.IDENTITY
        and perm_mul(t, a5.S2) == perm_mul(a5.S2, t)
        and perm_mul(perm_mul(perm_inv(t), rotation), t) == perm_inv(rotation)
    ]
    if len(found) != 1:
        raise AssertionError(f"expected one antipodal element, found {len(found)}")
    return found[0]


@dataclass(frozen=True, eq=False)
class RegularMap:
    """A map on the 60 group elements given by right multiplications."""

    name: str
    darts: tuple[Perm, ...]
    index: dict[Perm, int] = field(repr=False)
    rho: tuple[int, ...] = field(repr=False)
    theta: tuple[int, ...] = field(repr=False)
    iota: tuple[int, ...] = field(repr=False)
    antipode: Perm
    vertex_of: tuple[int, ...] = field(repr=False)
    face_of: tuple[int, ...] = field(repr=False)
    vertices: tuple[tuple[int, ...], ...] = field(repr=False)
    faces: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def phi(self) -> tuple[int, ...]:
        """Face permutation rho^-1 theta; the face of d lies on its left."""
        rinv = [0] * len(self.rho)
        for i, j in enumerate(self.rho):
            rinv[j] = i
        return tuple(rinv[self.theta[d]] for d in range(len(self.rho)))

    def left(self, g: Perm) -> tuple[int, ...]:
        return tuple(self.index[perm_mul(g, d)] for d in self.darts)

    def ini(self, d: int) -> int:
        return self.vertex_of[d]

    def tm(self, d: int) -> int:
        return self.vertex_of[self.theta[d]]

    def vertex_iota(self, x: int) -> int:
        return self.vertex_of[self.iota[self.vertices[x][0]]]

    def face_vertices(self, f: int) -> frozenset[int]:
        return frozenset(self.vertex_of[d] for d in self.faces[f])

    def neighbours(self, x: int) -> frozenset[int]:
        return frozenset(self.tm(d) for d in self.vertices[x])

    def vertex_stabilizer(self, x: int) -> list[Perm]:
        verts = set(self.vertices[x])
        return [g for g in self.darts if {self.index[perm_mul(g, self.darts[d])] for d in verts} == verts]


def regular_map(name: str, rotation: Perm) -> RegularMap:
    darts = _even_perms()
    index = {d: i for i, d in enumerate(darts)}
    t = _antipode_for(rotation)
    rho = tuple(index[perm_mul(d, rotation)] for d in darts)
    theta = tuple(index[perm_mul(d, a5.S2)] for d in darts)
    iota = tuple(index[perm_mul(d, t)] for d in darts)
    m = RegularMap(name, darts, index, rho, theta, iota, t, (), (), (), ())
    phi = m.phi
    vorbs = sorted(_orbits(rho))
    forbs = sorted(_orbits(phi))
    vertex_of = [0] * 60
    for k, o in enumerate(vorbs):
        for d in o:
            vertex_of[d] = k
    face_of = [0] * 60
    for k, o in enumerate(forbs):
        for d in o:
            face_of[d] = k
    return RegularMap(name, darts, index, rho, theta, iota, t, tuple(vertex_of), tuple(face_of), tuple(vorbs), tuple(forbs))


@cache
def dodecahedron() -> RegularMap:
    return regular_map("dodecahedron", a5.S3)


@cache
def great_dodecahedron() -> RegularMap:
    return regular_map("great dodecahedron", perm_mul(a5.S5, a5.S5))


@dataclass(frozen=True, eq=False)
class EquivariantComplex:
    """A truncated and antipodally glued regular map.

    boundary1 is n0 x n1 and boundary2 is n1 x n2, acting on column vectors.
    rotation[v] lists the outgoing signed 1-cell darts at v counterclockwise.
    """

    name: str
    base: RegularMap = field(repr=False)
    n0: int
    n1: int
    n2: int
    boundary1: Matrix = field(repr=False)
    boundary2: Matrix = field(repr=False)
    rotation: tuple[tuple[SignedDart, ...], ...] = field(repr=False)
    point_of: tuple[int, ...] = field(repr=False)  # dart -> 0-cell
    edge_cell: tuple[SignedDart, ...] = field(repr=False)  # dart -> (cell, sign along dart)
    corner_cell: tuple[SignedDart, ...] = field(repr=False)  # corner d -> (cell, sign of v(d)->v(rho d))
    cell1_ends: tuple[tuple[int, int], ...] = field(repr=False)
    face_walks: tuple[tuple[SignedDart, ...], ...] = field(repr=False)

    @property
    def euler_characteristic(self) -> int:
        return self.n0 - self.n1 + self.n2

    def cell_kind(self, c: int) -> str:
        return EDGE if c < 30 else TRUNCATION

    # -- symmetries -------------------------------------------------------

    def dart_action(self, dmap: Sequence[int], preserves_orientation: bool) -> tuple[Matrix, Matrix, Matrix]:
        """Chain maps induced by a dart bijection compatible with the map structure."""
        m = self.base
        a0 = [[0] * self.n0 for _ in range(self.n0)]
        for d in range(60):
            a0[self.point_of[dmap[d]]][self.point_of[d]] = 1
        a1 = [[0] * self.n1 for _ in range(self.n1)]
        ends_lookup = {frozenset(e): c for c, e in enumerate(self.cell1_ends) if c >= 30}
        for d in range(60):
            c, s = self.edge_cell[d]
            if s != 1:
                continue
            c2, s2 = self.edge_cell[dmap[d]]
            a1[c2][c] = s2
        for d in range(60):
            c, s = self.corner_cell[d]
            if s != 1:
                continue
            p, q = self.point_of[dmap[d]], self.point_of[dmap[m.rho[d]]]
            c2 = ends_lookup[frozenset((p, q))]
            a1[c2][c] = 1 if self.cell1_ends[c2] == (p, q) else -1
        a2 = [[0] * self.n2 for _ in range(self.n2)]
        for f, orb in enumerate(m.faces):
            d = dmap[orb[0]]
            if preserves_orientation:
                a2[m.face_of[d]][f] = 1
            else:
                a2[m.face_of[m.theta[d]]][f] = -1
        return as_matrix(a0), as_matrix(a1), as_matrix(a2)

    def group_action(self, g: Perm) -> tuple[Matrix, Matrix, Matrix]:
        return _group_action(self, g)

    def generator_actions(self) -> dict[str, tuple[Matrix, Matrix, Matrix]]:
        return {name: self.group_action(g) for name, g in zip(a5.GENERATOR_NAMES, a5.GENERATORS)}

    def iota_action(self) -> tuple[Matrix, Matrix, Matrix]:
        return self.dart_action(self.base.iota, preserves_orientation=False)

    def act1(self, g: Perm, chain: Sequence[int]) -> Chain:
        return mat_vec(self.group_action(g)[1], chain)

    def act2(self, g: Perm, chain: Sequence[int]) -> Chain:
        return mat_vec(self.group_action(g)[2], chain)

    # -- chains -----------------------------------------------------------

    def zero1(self) -> list[int]:
        return [0] * self.n1

    def boundary_of_faces(self, chain2: Sequence[int]) -> Chain:
        return mat_vec(self.boundary2, chain2)

    def is_cycle(self, chain: Sequence[int]) -> bool:
        return not any(mat_vec(self.boundary1, chain))

    def truncation_cycle(self, x: int) -> Chain:
        """The loop around vertex x of the map, following the vertex rotation."""
        m = self.base
        if not 0 <= x < len(m.vertices):
            raise UnknownLabel(f"no vertex {x} in the {m.name}")
        out = self.zero1()
        for d in m.vertices[x]:
            c, s = self.corner_cell[d]
            out[c] += s
        return tuple(out)

    def edge_cycle(self, y: int) -> Chain:
        """The loop y - iota(y) made of the two segments over dart y and its antipode."""
        m = self.base
        if not 0 <= y < 60:
            raise UnknownLabel(f"no dart {y} in the {m.name}")
        out = self.zero1()
        for d, k in ((y, 1), (m.iota[y], -1)):
            c, s = self.edge_cell[d]
            out[c] += k * s
        return tuple(out)

    def face_chain(self, f: int) -> Chain:
        out = [0] * self.n2
        out[f] = 1
        return tuple(out)

    # -- intersection -----------------------------------------------------

    def intersection(self, a: Sequence[int], b: Sequence[int]) -> int:
        """Algebraic intersection number of two 1-cycles.

        b is pushed off to its left. At each vertex the pushed copy runs
        along an arc from a fixed reference sector to the sector it needs,
        and every crossing of a's outgoing flow along that arc is counted.
        A crossing where b turns counterclockwise across a ray on which a
        flows outward counts +1.
        """
        total = 0
        rot = self.rotation
        pos = self._positions
        for c, beta in enumerate(b):
            if not beta:
                continue
            u, w = self.cell1_ends[c]
            pu = pos[(c, 1)]
            pw = pos[(c, -1)]
            out_u = rot[u]
            out_w = rot[w]
            s = 0
            for i in range(pu + 1):
                cc, sg = out_u[i]
                s += a[cc] * sg
            for i in range(pw, len(out_w)):
                cc, sg = out_w[i]
                s += a[cc] * sg
            total += beta * s
        return total

    @property
    def _positions(self) -> dict[SignedDart, int]:
        return _positions(self)


@cache
def _positions(cx: EquivariantComplex) -> dict[SignedDart, int]:
    return {sd: i for v in cx.rotation for i, sd in enumerate(v)}


@cache
def _group_action(cx: EquivariantComplex, g: Perm) -> tuple[Matrix, Matrix, Matrix]:
    return cx.dart_action(cx.base.left(g), preserves_orientation=True)


def truncate_and_glue(name: str, m: RegularMap) -> EquivariantComplex:
    # 0-cells
    reps0 = sorted({min(d, m.iota[d]) for d in range(60)})
    idx0 = {r: i for i, r in enumerate(reps0)}
    point_of = tuple(idx0[min(d, m.iota[d])] for d in range(60))

    ends: list[tuple[int, int]] = []
    edge_cell: list[SignedDart] = [(0, 0)] * 60
    for d in range(60):
        if d < m.theta[d]:
            c = len(ends)
            ends.append((point_of[d], point_of[m.theta[d]]))
            edge_cell[d] = (c, 1)
            edge_cell[m.theta[d]] = (c, -1)
    if len(ends) != 30:
        raise AssertionError("expected 30 edges")

    # corner d runs from point(d) to point(rho d); it is glued to corner
    # rho^-1(iota d), which runs the other way
    rinv = [0] * 60
    for i, j in enumerate(m.rho):
        rinv[j] = i
    corner_cell: list[SignedDart] = [(0, 0)] * 60
    for d in range(60):
        partner = rinv[m.iota[d]]
        if d < partner:
            c = len(ends)
            ends.append((point_of[d], point_of[m.rho[d]]))
            corner_cell[d] = (c, 1)
            corner_cell[partner] = (c, -1)
    if len(ends) != 60:
        raise AssertionError("expected 30 truncation cells")

    # faces: walk d, then the truncation side at tm(d) back towards phi(d)
    phi = m.phi
    walks = []
    for orb in m.faces:
        walk: list[SignedDart] = []
        d = orb[0]
        for _ in range(len(orb)):
            walk.append(edge_cell[d])
            x = rinv[m.theta[d]]
            c, s = corner_cell[x]
            walk.append((c, -s))
            d = phi[d]
        walks.append(tuple(walk))

    n0, n1, n2 = 30, 60, len(walks)
    b1 = [[0] * n1 for _ in range(n0)]
    for c, (p, q) in enumerate(ends):
        b1[q][c] += 1
        b1[p][c] -= 1
    b2 = [[0] * n2 for _ in range(n1)]
    for f, walk in enumerate(walks):
        for c, s in walk:
            b2[c][f] += s

    # rotation from face corners: for consecutive (in, out), rot(out) = reverse(in)
    nxt: dict[SignedDart, SignedDart] = {}
    for walk in walks:
        for i, (c_in, s_in) in enumerate(walk):
            c_out, s_out = walk[(i + 1) % len(walk)]
            nxt[(c_out, s_out)] = (c_in, -s_in)
    if len(nxt) != 2 * n1:
        raise AssertionError("face walks do not use every oriented 1-cell exactly once")

    def tail(sd: SignedDart) -> int:
        c, s = sd
        return ends[c][0] if s == 1 else ends[c][1]

    rotation = []
    for v in range(n0):
        outs = sorted(sd for sd in nxt if tail(sd) == v)
        cyc = [outs[0]]
        while True:
            n = nxt[cyc[-1]]
            if n == cyc[0]:
                break
            cyc.append(n)
        if sorted(cyc) != outs:
            raise AssertionError(f"vertex {v} is not a manifold point")
        rotation.append(tuple(cyc))

    return EquivariantComplex(
        name=name,
        base=m,
        n0=n0,
        n1=n1,
        n2=n2,
        boundary1=as_matrix(b1),
        boundary2=as_matrix(b2),
        rotation=tuple(rotation),
        point_of=point_of,
        edge_cell=tuple(edge_cell),
        corner_cell=tuple(corner_cell),
        cell1_ends=tuple(ends),
        face_walks=tuple(walks),
    )


@cache
def build_sigma() -> EquivariantComplex:
    return truncate_and_glue("sigma", dodecahedron())


@cache
def build_pi() -> EquivariantComplex:
    return truncate_and_glue("pi", great_dodecahedron())


def build(model: str) -> EquivariantComplex:
    if model == "sigma":
        return build_sigma()
    if model == "pi":
        return build_pi()
    raise UnknownLabel(f"unknown model {model!r}")


# -- homology ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class HomologyBasis:
    """A basis of H1 given by cycle representatives.

    cycles.basis is a Z-basis of Z1 whose first boundary_rank rows span B1;
    the remaining rows represent a basis of H1.
    """

    complex: EquivariantComplex = field(repr=False)
    rank: int
    boundary_rank: int
    cycles: Sublattice = field(repr=False)
    change: Matrix = field(repr=False)  # HNF coords of Z1 -> adapted coords
    representatives: tuple[Chain, ...] = field(repr=False)
    gram: Matrix = field(repr=False)
    torsion: tuple[int, ...]

    def classify(self, z: Sequence[int]) -> Vector:
        c = self.cycles.coordinates(z)
        if c is None:
            raise ValueError("chain is not a cycle")
        full = vec_mat(c, self.change)
        return tuple(full[self.boundary_rank :])

    def is_boundary(self, z: Sequence[int]) -> bool:
        return not any(self.classify(z))

    def pair_classes(self, u: Sequence[int], v: Sequence[int]) -> int:
        return sum(x * g * y for x, row in zip(u, self.gram) for g, y in zip(row, v) if x and g and y)

    def action(self, g: Perm) -> Matrix:
        """Matrix of g on H1 in this basis; column j is the image of basis class j."""
        a1 = self.complex.group_action(g)[1]
        cols = [self.classify(mat_vec(a1, r)) for r in self.representatives]
        return transpose(as_matrix(cols))


@cache
def homology(model: str) -> HomologyBasis:
    cx = build(model)
    z1 = kernel_basis(cx.boundary1, cx.n1)
    b1 = image_basis(cx.boundary2)
    coords = [z1.coordinates(r) for r in b1.basis]
    if any(c is None for c in coords):
        raise AssertionError("boundaries are not cycles")
    snf = smith_normal_form(as_matrix(coords))
    r = snf.rank
    torsion = tuple(f for f in snf.factors[:r] if f != 1)
    # z = c * Z = (c v) * (v^-1 Z)
    vinv = _unimodular_inverse(snf.v)
    adapted = mat_mul(vinv, z1.basis)
    reps = tuple(adapted[r:])
    gram = as_matrix([[cx.intersection(a, b) for b in reps] for a in reps])
    return HomologyBasis(cx, len(reps), r, z1, snf.v, reps, gram, torsion)


def _unimodular_inverse(m: Matrix) -> Matrix:
    n = len(m)
    cols = []
    for j in range(n):
        e = tuple(1 if i == j else 0 for i in range(n))
        x = solve_integer(m, e)
        if x is None:
            raise AssertionError("matrix is not unimodular")
        cols.append(x)
    return transpose(as_matrix(cols))


def betti_numbers(model: str) -> tuple[int, int, int]:
    cx = build(model)
    r1 = smith_normal_form(cx.boundary1).rank
    r2 = smith_normal_form(cx.boundary2).rank
    return (cx.n0 - r1, cx.n1 - r1 - r2, cx.n2 - r2)


def dual_class(model: str, targets: Sequence[tuple[Chain, int]]) -> Chain:
    """A cycle c with intersection(c, z) == t for every (z, t) in targets."""
    hb = homology(model)
    cx = hb.complex
    rows = []
    rhs = []
    for z, t in targets:
        zc = hb.classify(z)
        # <c, z> = sum_i c_i <w_i, z> = sum_i c_i (gram zc)_i
        rows.append(mat_vec(hb.gram, zc))
        rhs.append(t)
    if not rows:
        return tuple([0] * cx.n1)
    sol = solve_integer(as_matrix(rows), rhs)
    if sol is None:
        raise ValueError("no integral class realizes the requested pairings")
    return tuple(vec_mat(sol, as_matrix(hb.representatives)))


# -- distinguished structure of the models ------------------------------------


def _group_element_for(target: int) -> Perm:
    """The first group element (in sorted order) sending e to +e_j, or e itself."""
    lat = a5.eo_lattice()
    for g in sorted(lat.elements):
        col = tuple(row[0] for row in lat.elements[g])
        if col[target] == 1:
            return g
    raise AssertionError("orbit of e misses a basis vector")


@cache
def basis_elements() -> tuple[Perm, ...]:
    """g_0..g_5 with g_k e equal to the k-th basis vector of the lattice."""
    return tuple(_group_element_for(k) for k in range(6))


@dataclass(frozen=True)
class ModelData:
    """Basepoint and the distinguished vertex and dart sets of one model."""

    model: str
    base_label: int  # face (sigma) or vertex (pi) of the regular map
    h: Perm
    rep_vertices: tuple[int, ...]
    rep_darts: tuple[int, ...]
    sets: dict[str, frozenset[int]] = field(repr=False)


def _stabilized_by_s5(m: RegularMap, cells: Sequence[tuple[int, ...]]) -> list[int]:
    s5 = m.left(a5.S5)
    return [k for k, orb in enumerate(cells) if {s5[d] for d in orb} == set(orb)]


H_E: Perm = a5.word_to_perm([0, 2, 2, 2, 0, 2, 2, 0])  # s2 s5^3 s2 s5^2 s2


@cache
def model_data(model: str) -> ModelData:
    cx = build(model)
    m = cx.base
    if model == "sigma":
        e = _stabilized_by_s5(m, m.faces)[0]
        on_e = m.face_vertices(e)
        on_ie = frozenset(m.vertex_iota(x) for x in on_e)
        near = frozenset(m.tm(d) for x in on_e for d in m.vertices[x])
        v_e = frozenset(x for x in near if x not in on_e and x not in on_ie)
        iv_e = frozenset(m.vertex_iota(x) for x in v_e)
        e_e = frozenset(d for d in range(60) if m.ini(d) in on_e and m.tm(d) not in on_e)
        e2_e = frozenset(d for d in range(60) if m.ini(d) in v_e and m.tm(d) in iv_e)
        rep_v = tuple(sorted(on_e | v_e))
        sets = {"on_e": on_e, "on_iota_e": on_ie, "V_e": v_e, "iota_V_e": iv_e, "E_e": e_e, "E'_e": e2_e}
    else:
        e = _stabilized_by_s5(m, m.vertices)[0]
        ie = m.vertex_iota(e)
        link_e = m.neighbours(e)
        link_ie = m.neighbours(ie)
        z_e = next(f for f in range(len(m.faces)) if m.face_vertices(f) == link_e)
        z_ie = next(f for f in range(len(m.faces)) if m.face_vertices(f) == link_ie)
        from_e = frozenset(m.vertices[e])
        across = frozenset(d for d in range(60) if m.ini(d) in link_e and m.tm(d) in link_ie)
        rep_v = tuple(sorted({e} | link_e))
        sets = {
            "e": frozenset({e}),
            "iota_e": frozenset({ie}),
            "link_e": link_e,
            "link_iota_e": link_ie,
            "z_e": frozenset({z_e}),
            "z_iota_e": frozenset({z_ie}),
            "from_e": from_e,
            "across": across,
        }
    inner = on_e if model == "sigma" else frozenset({e})
    return ModelData(model, e, H_E, rep_v, _dart_reps(m, set(rep_v), inner), sets)


def _dart_reps(m: RegularMap, rep_vertices: set[int], inner: frozenset[int]) -> tuple[int, ...]:
    """One dart from each class {y, iota y, -y, -iota y}, starting in rep_vertices.

    Darts leaving the inner vertex set are preferred, so an edge joining two
    representative vertices is oriented away from the base cell.
    """
    chosen = []
    seen: set[int] = set()
    for d in sorted(range(60), key=lambda d: (m.ini(d) not in inner, d)):
        if d in seen or m.ini(d) not in rep_vertices:
            continue
        cls = {d, m.iota[d], m.theta[d], m.iota[m.theta[d]]}
        seen |= cls
        chosen.append(d)
    return tuple(sorted(chosen))


def _half(chain: Sequence[int], what: str) -> Chain:
    if any(x % 2 for x in chain):
        raise NotDivisible(f"{what} is not divisible by 2")
    return tuple(x // 2 for x in chain)


def _add(*chains: Sequence[int], coeffs: Optional[Sequence[int]] = None) -> Chain:
    coeffs = coeffs or [1] * len(chains)
    n = len(chains[0])
    return tuple(sum(k * c[i] for k, c in zip(coeffs, chains)) for i in range(n))


def _orbit_sum(cx: EquivariantComplex, chain: Sequence[int], dim: int) -> Chain:
    """Sum over the basis vectors e0..e4 of g_j applied to the chain at e."""
    gs = basis_elements()[1:]
    parts = [mat_vec(cx.group_action(g)[dim], chain) for g in gs]
    return _add(*parts)


CHAIN_NAMES = ("cel", "cel'", "bound", "bound'", "trc", "trc'", "edge", "edge'")
CYCLE_NAMES = ("bound", "bound'", "trc", "trc'", "edge", "edge'")


@cache
def structured_cycles(model: str) -> dict[str, Chain]:
    """Values at e of the named equivariant maps.

    "cel" and "cel'" are 2-chains, every other entry is a 1-chain. The key
    "sigma" (model sigma) or "pi" (model pi) holds the halved combination,
    and "even_sum" the combination before halving.
    """
    cx = build(model)
    m = cx.base
    d = model_data(model)
    s = d.sets
    out: dict[str, Chain] = {}
    if model == "sigma":
        f = d.base_label
        fi = m.face_of[m.theta[m.iota[m.faces[f][0]]]]
        cel = _add(cx.face_chain(f), cx.face_chain(fi), coeffs=(1, -1))
        cel2 = _orbit_sum(cx, cel, 2)
        out["cel"], out["cel'"] = cel, cel2
        out["bound"] = cx.boundary_of_faces(cel)
        out["bound'"] = _half(cx.boundary_of_faces(_add(cel, cel2)), "boundary of cel + cel'")
        out["trc"] = _add(*[cx.truncation_cycle(x) for x in sorted(s["on_e"])])
        out["trc'"] = _add(*[cx.truncation_cycle(x) for x in sorted(s["V_e"])])
        out["edge"] = _add(*[cx.edge_cycle(y) for y in sorted(s["E_e"])])
        out["edge'"] = _half(_add(*[cx.edge_cycle(y) for y in sorted(s["E'_e"])]), "sum over E'_e")
        even = _add(out["bound'"], out["edge'"], out["trc"], out["trc'"])
        out["even_sum"] = even
        out["sigma"] = _half(even, "bound' + edge' + trc + trc'")
    else:
        (z_e,) = s["z_e"]
        (z_ie,) = s["z_iota_e"]
        (e,) = s["e"]
        cel = _add(cx.face_chain(z_e), cx.face_chain(z_ie), coeffs=(1, -1))
        cel2 = _orbit_sum(cx, cel, 2)
        out["cel"], out["cel'"] = cel, cel2
        out["bound"] = cx.boundary_of_faces(cel)
        out["bound'"] = _half(cx.boundary_of_faces(_add(cel2, cel, coeffs=(1, -1))), "boundary of cel' - cel")
        out["trc"] = cx.truncation_cycle(e)
        out["trc'"] = _add(*[cx.truncation_cycle(x) for x in sorted(s["link_e"])])
        out["edge"] = _add(*[cx.edge_cycle(y) for y in sorted(s["from_e"])])
        out["edge'"] = _half(_add(*[cx.edge_cycle(y) for y in sorted(s["across"])]), "sum over the across set")
        even = _add(out["bound'"], out["trc"], out["trc'"], out["edge'"], coeffs=(1, 1, -1, 1))
        out["even_sum"] = even
        out["pi"] = _half(even, "bound' + trc - trc' + edge'")
    return out


def distinguished_cycle(model: str, kind: str, label: int) -> Chain:
    cx = build(model)
    if kind == TRUNCATION:
        return cx.truncation_cycle(label)
    if kind == EDGE:
        return cx.edge_cycle(label)
    raise UnknownLabel(f"unknown cycle kind {kind!r}")


def truncation_vertex_reps(model: str) -> tuple[int, ...]:
    return model_data(model).rep_vertices


def unimodular(gram: Matrix) -> bool:
    return abs(det(gram)) == 1


# -- dump ---------------------------------------------------------------------


def dump_complex(model: str) -> str:
    """Plain-text incidence listing, one line per cell.

    Format per line (fields separated by a single space):
    <dim> <id> <kind> boundary=<signed cells> s2=<cell> s3=<cell> s5=<cell> iota=<cell>
    where a signed cell is written +k or -k and boundary lists are comma
    separated (empty for 0-cells).
    """
    cx = build(model)
    acts = cx.generator_actions()
    iota = cx.iota_action()

    def image(mat: Matrix, j: int) -> str:
        for i, row in enumerate(mat):
            if row[j]:
                return f"{'+' if row[j] > 0 else '-'}{i}"
        raise AssertionError("not a signed permutation")

    def bnd(mat: Matrix, j: int) -> str:
        return ",".join(f"{'+' if row[j] > 0 else '-'}{i}" for i, row in enumerate(mat) if row[j])

    lines = [f"# complex {cx.name}: {cx.n0} 0-cells, {cx.n1} 1-cells, {cx.n2} 2-cells"]
    for dim, n in ((0, cx.n0), (1, cx.n1), (2, cx.n2)):
        for j in range(n):
            kind = "point" if dim == 0 else ("face" if dim == 2 else cx.cell_kind(j))
            b = "" if dim == 0 else bnd(cx.boundary1 if dim == 1 else cx.boundary2, j)
            imgs = " ".join(f"{k}={image(acts[k][dim], j)}" for k in a5.GENERATOR_NAMES)
            lines.append(f"{dim} {j} {kind} boundary={b} {imgs} iota={image(iota[dim], j)}")
    return "\n".join(lines) + "\n"
