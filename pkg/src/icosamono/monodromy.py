"""Local and global monodromy on the isotypic part, as 2x2 matrices over Z[X].

A matrix [[a, b], [c, d]] sends U to aU + cV and V to bU + dV.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from typing import Sequence

from . import a5, isotypic, surfaces
from .checks import Check
from .lattice import Matrix, as_matrix, mat_mul, transpose
from .quadring import OoElem, QuadMatrix2

KINDS = (surfaces.TRUNCATION, surfaces.EDGE)
MODEL_TAG = isotypic.MODEL_TAG


class ExpressFailure(ArithmeticError):
    """A class that should lie in the span of (U, V) over Z[X] does not."""


@dataclass(frozen=True, eq=False)
class VanishingSet:
    model: str
    kind: str
    classes: tuple[tuple[int, ...], ...] = field(repr=False)  # one sign per +-class, in H1 coordinates

    def __len__(self) -> int:
        return len(self.classes)


def _normalise_sign(v: Sequence[int]) -> tuple[int, ...]:
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


@cache
def vanishing_set(model: str, kind: str) -> VanishingSet:
    cx = surfaces.build(model)
    hb = surfaces.homology(model)
    if kind == surfaces.TRUNCATION:
        chains = [cx.truncation_cycle(x) for x in range(len(cx.base.vertices))]
    elif kind == surfaces.EDGE:
        chains = [cx.edge_cycle(y) for y in range(60)]
    else:
        raise surfaces.UnknownLabel(f"unknown degeneration {kind!r}")
    classes = sorted({_normalise_sign(hb.classify(c)) for c in chains})
    return VanishingSet(model, kind, tuple(classes))


def picard_lefschetz(vs: VanishingSet, x: Sequence[int]) -> tuple[int, ...]:
    """x + sum over the classes l of <x, l> l."""
    hb = surfaces.homology(vs.model)
    out = list(x)
    for l in vs.classes:
        k = hb.pair_classes(x, l)
        if k:
            for i, c in enumerate(l):
                out[i] += k * c
    return tuple(out)


@cache
def picard_lefschetz_matrix(model: str, kind: str) -> Matrix:
    """Columns are the images of the homology basis classes."""
    vs = vanishing_set(model, kind)
    n = surfaces.homology(model).rank
    cols = [picard_lefschetz(vs, tuple(1 if i == j else 0 for i in range(n))) for j in range(n)]
    return transpose(as_matrix(cols))


def _express(model: str, phi) -> tuple[OoElem, OoElem]:
    got = isotypic.homology_generators(model).express(phi)
    if got is None:
        raise ExpressFailure(f"image on {model} is not in the span of U and V")
    return got


@cache
def local_monodromy(model: str, kind: str) -> QuadMatrix2:
    gens = isotypic.homology_generators(model)
    t = picard_lefschetz_matrix(model, kind)
    a, c = _express(model, mat_mul(t, gens.u))
    b, d = _express(model, mat_mul(t, gens.v))
    return QuadMatrix2(a, b, c, d)


def z_matrix(m: QuadMatrix2) -> Matrix:
    """The same map on the Z-basis (U, XU, V, XV)."""
    x = OoElem(0, 1)
    cols = []
    for col in ((m.p, m.r), (m.q, m.s)):
        for scale in (OoElem(1, 0), x):
            a, c = (scale * col[0], scale * col[1])
            cols.append((a.a, a.b, c.a, c.b))
    return transpose(as_matrix(cols))


def preserves_form(m: QuadMatrix2, form: Matrix) -> bool:
    z = z_matrix(m)
    return mat_mul(mat_mul(transpose(z), form), z) == form


def basis_change_p() -> QuadMatrix2:
    """Takes the Pi generators to the Sigma generators: U_Pi -> -V, V_Pi -> U - V."""
    return QuadMatrix2.of(((0, 1), (-1, -1)))


def third_generator() -> QuadMatrix2:
    p = basis_change_p()
    return p * local_monodromy("pi", surfaces.TRUNCATION) * p.inverse()


def global_generators() -> tuple[QuadMatrix2, QuadMatrix2, QuadMatrix2]:
    return (
        local_monodromy("sigma", surfaces.TRUNCATION),
        local_monodromy("sigma", surfaces.EDGE),
        third_generator(),
    )


def rho_zero_inverse() -> QuadMatrix2:
    a, b, c = global_generators()
    return a * b * c


def rho_zero() -> QuadMatrix2:
    return rho_zero_inverse().inverse()


EXPECTED = {
    ("sigma", surfaces.TRUNCATION): ((1, (-2, 1)), (0, 1)),
    ("sigma", surfaces.EDGE): ((3, (-1, 1)), ((-1, -1), -1)),
    ("pi", surfaces.TRUNCATION): ((1, (0, 1)), (0, 1)),
    ("pi", surfaces.EDGE): (((-2, 1), (-4, 2)), ((1, -1), (4, -1))),
}


def expected_matrix(model: str, kind: str) -> QuadMatrix2:
    rows = EXPECTED[(model, kind)]
    return QuadMatrix2.of([[OoElem(*v) if isinstance(v, tuple) else v for v in row] for row in rows])


def displayed_generators() -> tuple[QuadMatrix2, QuadMatrix2, QuadMatrix2]:
    """The three global generators as literal matrices, without recomputing them."""
    third = QuadMatrix2.of(((1, 0), (OoElem(0, -1), 1)))
    return (expected_matrix("sigma", surfaces.TRUNCATION), expected_matrix("sigma", surfaces.EDGE), third)


def _is_upper_unipotent(m: QuadMatrix2) -> bool:
    return m.p == 1 and m.s == 1 and m.r == 0


def monodromy_report() -> list[Check]:
    out: list[Check] = []
    sizes = {("sigma", "truncation"): 10, ("sigma", "edge"): 15, ("pi", "truncation"): 6, ("pi", "edge"): 15}
    forms = {m: isotypic.homology_generators(m).z_basis_form for m in ("sigma", "pi")}
    for (model, kind), size in sizes.items():
        tag = f"{MODEL_TAG[model]}.{kind}"
        vs = vanishing_set(model, kind)
        hb = surfaces.homology(model)
        out.append(Check.equal(f"{tag}.vanishing_classes", size, len(vs)))
        iso = all(hb.pair_classes(a, b) == 0 for a in vs.classes for b in vs.classes)
        out.append(Check.true(f"{tag}.vanishing_set_isotropic", iso))
        t = picard_lefschetz_matrix(model, kind)
        eq = all(mat_mul(hb.action(g), t) == mat_mul(t, hb.action(g)) for g in a5.GENERATORS)
        out.append(Check.true(f"{tag}.picard_lefschetz_equivariant", eq))
        symp = mat_mul(mat_mul(transpose(t), hb.gram), t) == hb.gram
        out.append(Check.true(f"{tag}.picard_lefschetz_symplectic", symp))
        try:
            got = local_monodromy(model, kind)
        except ExpressFailure as exc:
            out.append(Check(f"{tag}.local_monodromy", False, str(expected_matrix(model, kind)), str(exc)))
            continue
        out.append(Check.equal(f"{tag}.local_monodromy", str(expected_matrix(model, kind)), str(got)))
        out.append(Check.true(f"{tag}.det_one", got.is_sl2()))
        out.append(Check.true(f"{tag}.preserves_form", preserves_form(got, forms[model])))

    p = basis_change_p()
    s_edge = local_monodromy("sigma", surfaces.EDGE)
    p_edge = local_monodromy("pi", surfaces.EDGE)
    p_trc = local_monodromy("pi", surfaces.TRUNCATION)
    out.append(Check.true("P.det_one", p.is_sl2()))
    out.append(Check.equal("P.conjugates_edge_monodromy", str(p_edge), str(p.inverse() * s_edge * p)))
    zp = z_matrix(p)
    out.append(
        Check.true("P.carries_form", mat_mul(mat_mul(transpose(zp), forms["sigma"]), zp) == forms["pi"])
    )
    displayed = displayed_generators()[2]
    out.append(Check.equal("third_generator.P*rho*P^-1", str(displayed), str(p * p_trc * p.inverse())))
    out.append(
        Check(
            "third_generator.P^-1*rho*P",
            True,
            "recorded only",
            str(p.inverse() * p_trc * p),
        )
    )
    gens = global_generators()
    out.append(Check.equal("global.generator_count", 3, len(gens)))
    out.append(Check.equal("global.generators_match_literals", [str(g) for g in displayed_generators()], [str(g) for g in gens]))
    out.append(Check.true("global.all_det_one", all(g.is_sl2() for g in gens)))
    out.append(Check.true("global.preserve_form", all(preserves_form(g, forms["sigma"]) for g in gens)))
    out.append(Check.true("global.has_lower_left_nonzero", any(g.r != 0 for g in gens)))
    unip = [g for g in gens if _is_upper_unipotent(g)]
    out.append(Check.true("global.upper_unipotent_present", bool(unip), ", ".join(str(g.q) for g in unip)))
    for name, g in (("rho_sigma_trc", gens[0]), ("third_generator", gens[2])):
        i = QuadMatrix2.identity()
        n = g - i
        out.append(Check.true(f"global.{name}_unipotent", (n * n) == i - i))
    r0i = rho_zero_inverse()
    out.append(Check.equal("rho_zero_inverse", "[[0, 1], [-1, -1]]", str(r0i)))
    r0 = rho_zero()
    out.append(Check.true("rho_zero_order_three", (r0**3).is_identity() and not r0.is_identity()))
    out.append(Check.true("rho_zero_preserves_form", preserves_form(r0, forms["sigma"])))
    neg = -QuadMatrix2.identity()
    stable = all(str(neg * g * neg) == str(g) for g in gens + (p,))
    out.append(Check.true("global.sign_convention_stable", stable))
    return out
