"""Equivariant maps from the rank-6 lattice into chains and homology.

A map E_o -> M is stored as a matrix with one column per basis vector
(e, e0, ..., e4) of E_o, written in the coordinates of M. Precomposition with
X makes every such lattice a module over Z[X]/(X^2-5).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from typing import Optional, Sequence

from . import a5, surfaces
from .a5 import Perm
from .checks import Check
from .lattice import (
    Matrix,
    Sublattice,
    as_matrix,
    certify_generation,
    det,
    identity,
    image_basis,
    invariant_factors,
    kernel_basis,
    lattice_quotient,
    mat_add,
    mat_mul,
    mat_scale,
    mat_vec,
    solve_integer,
    transpose,
    vec_mat,
)
from .quadring import OoElem

MapMatrix = Matrix  # rank(M) x 6


@dataclass(frozen=True, eq=False)
class Module:
    """A free Z-module with an A5 action.

    actions[name] is the matrix of a generator in module coordinates.
    For a submodule of a chain group, basis holds its rows in the chain group.
    """

    name: str
    rank: int
    actions: dict[str, Matrix] = field(repr=False)
    basis: Optional[Matrix] = field(default=None, repr=False)

    def element(self, g: Perm) -> Matrix:
        word = a5.eo_lattice().words[g]
        mats = [self.actions[a5.GENERATOR_NAMES[i]] for i in word]
        out = identity(self.rank)
        for m in mats:
            out = mat_mul(out, m)
        return out

    def coordinates(self, v: Sequence[int]) -> tuple[int, ...]:
        if self.basis is None:
            return tuple(v)
        c = Sublattice(len(self.basis[0]), self.basis).coordinates(v)
        if c is None:
            raise ValueError(f"vector does not lie in {self.name}")
        return c

    def ambient(self, coords: Sequence[int]) -> tuple[int, ...]:
        if self.basis is None:
            return tuple(coords)
        return vec_mat(coords, self.basis)


def submodule(name: str, lattice: Sublattice, ambient_actions: dict[str, Matrix]) -> Module:
    """Restrict an action on Z^n to an invariant sublattice."""
    sub = Sublattice(lattice.ambient_rank, lattice.basis)
    acts = {}
    for g, m in ambient_actions.items():
        cols = []
        for row in lattice.basis:
            c = sub.coordinates(mat_vec(m, row))
            if c is None:
                raise ValueError(f"{name} is not invariant under {g}")
            cols.append(c)
        acts[g] = transpose(as_matrix(cols)) if cols else ()
    return Module(name, lattice.rank, acts, lattice.basis)


@cache
def chain_modules(model: str) -> dict[str, Module]:
    cx = surfaces.build(model)
    gens = cx.generator_actions()
    act1 = {g: m[1] for g, m in gens.items()}
    act2 = {g: m[2] for g, m in gens.items()}
    c2 = Module("C2", cx.n2, act2)
    c1 = Module("C1", cx.n1, act1)
    z1 = kernel_basis(cx.boundary1, cx.n1)
    b1 = image_basis(cx.boundary2)
    edge_rows = tuple(tuple(1 if j == i else 0 for j in range(cx.n1)) for i in range(30))
    trc_rows = tuple(tuple(1 if j == i else 0 for j in range(cx.n1)) for i in range(30, 60))
    z_trc = kernel_basis(cx.boundary1 + edge_rows, cx.n1)
    z_edge = kernel_basis(cx.boundary1 + trc_rows, cx.n1)
    hb = surfaces.homology(model)
    h1 = Module("H1", hb.rank, {g: hb.action(p) for g, p in zip(a5.GENERATOR_NAMES, a5.GENERATORS)})
    return {
        "C2": c2,
        "C1": c1,
        "Z1": submodule("Z1", z1, act1),
        "B1": submodule("B1", b1, act1),
        "Z_trc": submodule("Z_trc", z_trc, act1),
        "Z_edge": submodule("Z_edge", z_edge, act1),
        "H1": h1,
    }


def _flatten(m: Matrix) -> tuple[int, ...]:
    return tuple(x for row in m for x in row)


def _unflatten(v: Sequence[int], rows: int) -> Matrix:
    return tuple(tuple(v[i * 6 : (i + 1) * 6]) for i in range(rows))


def _commutation_rows(t: Matrix, s: Matrix, n: int) -> list[tuple[int, ...]]:
    # (T Phi - Phi S)[i][j] for Phi of shape n x 6, flattened row-major
    rows = []
    for i in range(n):
        for j in range(6):
            row = [0] * (n * 6)
            for k in range(n):
                if t[i][k]:
                    row[k * 6 + j] += t[i][k]
            for k in range(6):
                if s[k][j]:
                    row[i * 6 + k] -= s[k][j]
            rows.append(tuple(row))
    return rows


@dataclass(frozen=True, eq=False)
class HomLattice:
    module: Module = field(repr=False)
    lattice: Sublattice = field(repr=False)  # flattened maps in module coordinates
    x_action: Matrix  # column j: coordinates of basis map j composed with X

    @property
    def rank(self) -> int:
        return self.lattice.rank

    @property
    def basis_maps(self) -> tuple[MapMatrix, ...]:
        return tuple(_unflatten(r, self.module.rank) for r in self.lattice.basis)

    def coordinates(self, phi: MapMatrix) -> Optional[tuple[int, ...]]:
        return self.lattice.coordinates(_flatten(phi))

    def contains(self, phi: MapMatrix) -> bool:
        return self.coordinates(phi) is not None


def is_equivariant(module: Module, phi: MapMatrix) -> bool:
    lat = a5.eo_lattice()
    return all(mat_mul(module.actions[g], phi) == mat_mul(phi, lat.action[g]) for g in a5.GENERATOR_NAMES)


def compose_x(phi: MapMatrix) -> MapMatrix:
    return mat_mul(phi, a5.X_MATRIX)


def hom_lattice(module: Module) -> HomLattice:
    """Solve the commutation equations for s2 and s5 and check s3 afterwards."""
    return _hom_lattice(module)


@cache
def _hom_lattice(module: Module) -> HomLattice:
    lat = a5.eo_lattice()
    n = module.rank
    rows = []
    for g in ("s2", "s5"):
        rows += _commutation_rows(module.actions[g], lat.action[g], n)
    sol = kernel_basis(as_matrix(rows), n * 6)
    for r in sol.basis:
        if not is_equivariant(module, _unflatten(r, n)):
            raise AssertionError(f"solution for {module.name} fails the s3 check")
    xcols = []
    for r in sol.basis:
        c = sol.coordinates(_flatten(compose_x(_unflatten(r, n))))
        if c is None:
            raise AssertionError("Hom lattice is not stable under X")
        xcols.append(c)
    x = transpose(as_matrix(xcols)) if xcols else ()
    return HomLattice(module, sol, x)


def hom_lattice_by_fixed_vectors(module: Module) -> Sublattice:
    """Second route: maps are determined by m = phi(e) with s5 m = m and h m = -m."""
    n = module.rank
    s5 = module.actions["s5"]
    h = module.element(surfaces.H_E)
    rows = [tuple(s5[i][k] - (1 if i == k else 0) for k in range(n)) for i in range(n)]
    rows += [tuple(h[i][k] + (1 if i == k else 0) for k in range(n)) for i in range(n)]
    fixed = kernel_basis(as_matrix(rows), n)
    maps = [_flatten(extend(module, m)) for m in fixed.basis]
    return Sublattice.span(maps, n * 6)


def extend(module: Module, value_at_e: Sequence[int]) -> MapMatrix:
    """The map with e -> value and e_j -> g_j value."""
    cols = [tuple(value_at_e)]
    for g in surfaces.basis_elements()[1:]:
        cols.append(mat_vec(module.element(g), value_at_e))
    return transpose(as_matrix(cols))


# -- named maps ---------------------------------------------------------------

_TARGET = {
    "cel": "C2",
    "cel'": "C2",
    "bound": "B1",
    "bound'": "B1",
    "trc": "Z_trc",
    "trc'": "Z_trc",
    "edge": "Z_edge",
    "edge'": "Z_edge",
    "sigma": "Z1",
    "pi": "Z1",
}


def named_map(model: str, name: str, into: Optional[str] = None) -> MapMatrix:
    """The equivariant map e -> (named chain), in coordinates of the target module.

    into="Z1" or "H1" re-expresses a cycle-valued map in that module.
    """
    return _named_map(model, name, into)


@cache
def _named_map(model: str, name: str, into: Optional[str]) -> MapMatrix:
    values = surfaces.structured_cycles(model)
    if name not in values or name == "even_sum":
        raise surfaces.UnknownLabel(f"no named map {name!r} on {model}")
    mods = chain_modules(model)
    target = into or _TARGET[name]
    v = values[name]
    if target == "H1":
        hb = surfaces.homology(model)
        coords = hb.classify(v)
    else:
        coords = mods[target].coordinates(v)
    phi = extend(mods[target], coords)
    if not is_equivariant(mods[target], phi):
        raise surfaces.NotEquivariant(f"{name} on {model} is not equivariant")
    return phi


def p_map(model: str, name: str) -> MapMatrix:
    return named_map(model, name, "H1")


def push_forward(model: str, phi_c2: MapMatrix, into: str = "B1") -> MapMatrix:
    """Compose a map into C2 with the boundary and express it in a 1-chain module."""
    cx = surfaces.build(model)
    mod = chain_modules(model)[into]
    cols = [mod.coordinates(mat_vec(cx.boundary2, col)) for col in transpose(phi_c2)]
    return transpose(as_matrix(cols))


def o_combination(coeffs: Sequence[tuple[OoElem | int, MapMatrix]]) -> MapMatrix:
    """sum of (a + bX) phi over the given pairs, X acting by precomposition."""
    out = None
    for c, phi in coeffs:
        c = OoElem.coerce(c)
        term = mat_add(mat_scale(c.a, phi), mat_scale(c.b, compose_x(phi)))
        out = term if out is None else mat_add(out, term)
    return out


# -- symplectic form ------------------------------------------------------------


def symplectic_form(model: str, phi: MapMatrix, psi: MapMatrix) -> int:
    """sum_i <phi(b_i), psi(b_i)> over the orthonormal basis b_i of E_o."""
    g = surfaces.homology(model).gram
    return sum(
        mat_vec(g, b)[k] * a for pa, b in zip(transpose(phi), transpose(psi)) for k, a in enumerate(pa) if a
    )


def form_matrix(model: str, maps: Sequence[MapMatrix]) -> Matrix:
    return as_matrix([[symplectic_form(model, f, g) for g in maps] for f in maps])


@dataclass(frozen=True)
class SymplecticOoLattice:
    model: str
    u: MapMatrix = field(repr=False)
    v: MapMatrix = field(repr=False)
    z_basis_form: Matrix  # on (U, UX, V, VX)
    generates: bool

    @property
    def z_basis(self) -> tuple[MapMatrix, ...]:
        return (self.u, compose_x(self.u), self.v, compose_x(self.v))

    def express(self, phi: MapMatrix) -> Optional[tuple[OoElem, OoElem]]:
        """(a, c) with phi = aU + cV over Z[X], or None."""
        hl = hom_lattice(chain_modules(self.model)["H1"])
        basis = [hl.coordinates(m) for m in self.z_basis]
        target = hl.coordinates(phi)
        if target is None or any(b is None for b in basis):
            return None
        sol = solve_integer(transpose(as_matrix(basis)), target)
        if sol is None:
            return None
        return OoElem(sol[0], sol[1]), OoElem(sol[2], sol[3])


@cache
def homology_generators(model: str) -> SymplecticOoLattice:
    u = p_map(model, "trc")
    v = p_map(model, "sigma" if model == "sigma" else "pi")
    hl = hom_lattice(chain_modules(model)["H1"])
    zb = (u, compose_x(u), v, compose_x(v))
    coords = as_matrix([hl.coordinates(m) for m in zb])
    gen = lattice_quotient(Sublattice.span(coords, hl.rank), Sublattice.full(hl.rank)) == []
    return SymplecticOoLattice(model, u, v, form_matrix(model, zb), gen)


# -- reports ------------------------------------------------------------------

X_EQUATIONS = {
    "sigma": {
        "cel": (("cel", ((0, "cel"), (1, "cel'"))), ("cel'", ((5, "cel"), (0, "cel'")))),
        "bound": (("bound", ((-1, "bound"), (2, "bound'"))), ("bound'", ((2, "bound"), (1, "bound'")))),
        "trc": (("trc", ((2, "trc"), (1, "trc'"))), ("trc'", ((1, "trc"), (-2, "trc'")))),
        "edge": (("edge", ((1, "edge"), (2, "edge'"))), ("edge'", ((2, "edge"), (-1, "edge'")))),
    },
    "pi": {
        "cel": (("cel", ((0, "cel"), (1, "cel'"))), ("cel'", ((5, "cel"), (0, "cel'")))),
        "bound": (("bound", ((1, "bound"), (2, "bound'"))), ("bound'", ((2, "bound"), (-1, "bound'")))),
        "trc": (("trc", ((0, "trc"), (1, "trc'"))), ("trc'", ((5, "trc"), (0, "trc'")))),
        "edge": (("edge", ((-1, "edge"), (2, "edge'"))), ("edge'", ((2, "edge"), (1, "edge'")))),
    },
}

# p o name = a U + c V with (a, c) as elements a0 + a1 X
EXPANSIONS = {
    "sigma": {
        "trc'": ((-2, 1), (0, 0)),
        "edge": ((-2, 0), (1, 1)),
        "edge'": ((1, -1), (2, 0)),
    },
    "pi": {
        "trc'": ((0, 1), (0, 0)),
        "edge": ((3, -1), (-1, 1)),
        "edge'": ((-1, 1), (2, 0)),
    },
}

MODEL_TAG = {"sigma": "Sigma", "pi": "Pi"}


def x_equation_holds(model: str, lhs: str, rhs: Sequence[tuple[int, str]]) -> bool:
    left = compose_x(named_map(model, lhs))
    right = None
    for k, nm in rhs:
        term = mat_scale(k, named_map(model, nm))
        right = term if right is None else mat_add(right, term)
    return left == right


def _render_rhs(rhs: Sequence[tuple[int, str]], sym: str) -> str:
    parts = [f"{k}*{sym}_{nm}" for k, nm in rhs if k]
    return " + ".join(parts) if parts else "0"


def structure_report(model: str) -> list[Check]:
    tag = MODEL_TAG[model]
    sym = "sigma" if model == "sigma" else "pi"
    mods = chain_modules(model)
    out: list[Check] = []
    homs = {k: hom_lattice(mods[k]) for k in ("C2", "B1", "Z_trc", "Z_edge", "Z1", "H1")}
    ranks = tuple(homs[k].rank for k in ("C2", "B1", "Z_trc", "Z_edge", "H1"))
    out.append(Check.equal(f"{tag}.hom_ranks(C2,B1,Z_trc,Z_edge,H1)", (2, 2, 2, 2, 4), ranks))
    out.append(Check.equal(f"{tag}.hom_rank(Z1)", 6, homs["Z1"].rank))
    for k, hl in homs.items():
        second = hom_lattice_by_fixed_vectors(mods[k])
        out.append(Check.true(f"{tag}.hom_two_methods({k})", second.basis == hl.lattice.basis))
        x2 = mat_mul(hl.x_action, hl.x_action)
        out.append(Check.true(f"{tag}.x_squared_is_5({k})", x2 == mat_scale(5, identity(hl.rank))))
    for group, eqs in X_EQUATIONS[model].items():
        for lhs, rhs in eqs:
            ok = x_equation_holds(model, lhs, rhs)
            out.append(Check(f"{tag}.X*{sym}_{lhs}", ok, _render_rhs(rhs, sym), "holds" if ok else "differs"))

    def generated_by(key: str, names: Sequence[str]) -> list[int]:
        hl = homs[key]
        coords = [hl.coordinates(named_map(model, n, key if key in ("Z1", "H1") else None)) for n in names]
        if any(c is None for c in coords):
            return [-1]
        return lattice_quotient(Sublattice.span(coords, hl.rank), Sublattice.full(hl.rank))

    out.append(Check.equal(f"{tag}.C2_free_rank_one_over_Oo", [], generated_by("C2", ["cel", "cel'"])))
    out.append(Check.equal(f"{tag}.B1_generated_by_bound_bound'", [], generated_by("B1", ["bound", "bound'"])))
    out.append(Check.equal(f"{tag}.Z_trc_generated_by_trc_trc'", [], generated_by("Z_trc", ["trc", "trc'"])))
    out.append(Check.equal(f"{tag}.Z_edge_generated_by_edge_edge'", [], generated_by("Z_edge", ["edge", "edge'"])))

    # image of Hom(E_o, C2) in Hom(E_o, B1)
    img = [homs["B1"].coordinates(push_forward(model, m)) for m in homs["C2"].basis_maps]
    quotient = lattice_quotient(Sublattice.span(img, 2), Sublattice.full(2))
    out.append(Check.equal(f"{tag}.index_of_boundary_image_in_B1", [2], quotient))
    bprime = homs["B1"].coordinates(named_map(model, "bound'"))
    out.append(Check.true(f"{tag}.{sym}_bound'_not_in_boundary_image", not Sublattice.span(img, 2).contains(bprime)))

    half = "sigma" if model == "sigma" else "pi"
    z1_names = ["bound", "bound'", "trc", "trc'", "edge", half]
    out.append(Check.equal(f"{tag}.Z1_generated_by_named_maps", [], generated_by("Z1", z1_names)))
    h1_names = ["trc", "trc'", "edge", half]
    h1_coords = as_matrix([homs["H1"].coordinates(p_map(model, n)) for n in h1_names])
    gens = homology_generators(model)
    out.append(Check.true(f"{tag}.H1_cokernel_of_p_trivial", certify_generation(identity(4), h1_coords)))
    out.append(Check.true(f"{tag}.H1_free_over_Oo_on_U_V", gens.generates))
    out.append(Check.true(f"{tag}.primitive_image_in_H1", primitive_in_h1(model, [p_map(model, n) for n in h1_names])))
    for name, ((a0, a1), (c0, c1)) in EXPANSIONS[model].items():
        got = gens.express(p_map(model, name))
        exp = (OoElem(a0, a1), OoElem(c0, c1))
        out.append(Check.equal(f"{tag}.p*{sym}_{name}=aU+cV", _fmt_pair(exp), _fmt_pair(got)))
    f = gens.z_basis_form
    out.append(Check.true(f"{tag}.form_nondegenerate", det(f) != 0, f"det={det(f)}"))
    return out


def primitive_in_h1(model: str, maps: Sequence[MapMatrix]) -> bool:
    """The values at e span a saturated sublattice of H1 (dual-vector criterion)."""
    hb = surfaces.homology(model)
    rows = as_matrix([mat_vec(hb.gram, transpose(m)[0]) for m in maps])
    return all(x == 1 for x in invariant_factors(rows))


def _fmt_pair(p) -> str:
    if p is None:
        return "not expressible"
    a, c = p
    return f"({a}, {c})"
