"""The alternating group on five letters and its rank-6 integral lattice.

The lattice has basis (e, e0, e1, e2, e3, e4). The three generators act by
signed permutations of that basis, an extra endomorphism X squares to 5,
and the basis is orthonormal for the invariant inner product.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cache
from typing import Sequence

from .lattice import Matrix, Sublattice, identity, kernel_basis, lattice_quotient, mat_mul, mat_vec, det, transpose

Perm = tuple[int, ...]
EoVector = tuple[int, ...]

BASIS_LABELS = ("e", "e0", "e1", "e2", "e3", "e4")
GENERATOR_NAMES = ("s2", "s3", "s5")


class OddPermutation(ValueError):
    pass


def perm_from_cycles(cycles: Sequence[Sequence[int]], n: int = 5) -> Perm:
    img = list(range(1, n + 1))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            img[x - 1] = cyc[(i + 1) % len(cyc)]
    return tuple(img)


def perm_mul(g: Perm, h: Perm) -> Perm:
    """Composition g after h, so (g h)(i) = g(h(i))."""
    return tuple(g[h[i] - 1] for i in range(len(h)))


def perm_inv(g: Perm) -> Perm:
    out = [0] * len(g)
    for i, x in enumerate(g):
        out[x - 1] = i + 1
    return tuple(out)


def perm_parity(g: Perm) -> int:
    seen = set()
    parity = 0
    for i in range(1, len(g) + 1):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = g[j - 1]
            length += 1
        parity += length - 1
    return parity % 2


def perm_order(g: Perm) -> int:
    k, h = 1, g
    ident = tuple(range(1, len(g) + 1))
    while h != ident:
        h = perm_mul(g, h)
        k += 1
    return k


def perm_cycles(g: Perm) -> str:
    seen, parts = set(), []
    for i in range(1, len(g) + 1):
        if i in seen or g[i - 1] == i:
            seen.add(i)
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = g[j - 1]
        parts.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


IDENTITY: Perm = (1, 2, 3, 4, 5)
S2: Perm = perm_from_cycles([(1, 5), (3, 4)])
S3: Perm = perm_from_cycles([(2, 5, 3)])
S5: Perm = perm_from_cycles([(1, 2, 3, 4, 5)])
GENERATORS: tuple[Perm, Perm, Perm] = (S2, S3, S5)


def word_to_perm(word: Sequence[int]) -> Perm:
    """Product of generators indexed 0, 1, 2 for s2, s3, s5, left to right."""
    g = IDENTITY
    for i in word:
        g = perm_mul(g, GENERATORS[i])
    return g


def _signed_perm(images: dict[int, tuple[int, int]]) -> Matrix:
    # images[j] = (sign, i): basis vector j goes to sign * basis vector i
    m = [[0] * 6 for _ in range(6)]
    for j, (s, i) in images.items():
        m[i][j] = s
    return tuple(tuple(r) for r in m)


# Column j of an action matrix is the image of basis vector j.
_E, _E0, _E1, _E2, _E3, _E4 = range(6)
ACTION_S5 = _signed_perm({_E: (1, _E), _E0: (1, _E1), _E1: (1, _E2), _E2: (1, _E3), _E3: (1, _E4), _E4: (1, _E0)})
ACTION_S2 = _signed_perm({_E: (1, _E0), _E0: (1, _E), _E1: (1, _E4), _E4: (1, _E1), _E2: (-1, _E2), _E3: (-1, _E3)})
ACTION_S3 = _signed_perm({_E: (1, _E0), _E0: (1, _E1), _E1: (1, _E), _E2: (1, _E4), _E4: (-1, _E3), _E3: (-1, _E2)})

_X_COLUMNS = (
    (0, 1, 1, 1, 1, 1),
    (1, 0, 1, -1, -1, 1),
    (1, 1, 0, 1, -1, -1),
    (1, -1, 1, 0, 1, -1),
    (1, -1, -1, 1, 0, 1),
    (1, 1, -1, -1, 1, 0),
)
X_MATRIX: Matrix = transpose(_X_COLUMNS)
GRAM: Matrix = identity(6)


@dataclass(frozen=True)
class EoLattice:
    labels: tuple[str, ...]
    action: dict[str, Matrix]
    x: Matrix
    gram: Matrix
    elements: dict[Perm, Matrix] = field(repr=False)
    words: dict[Perm, tuple[int, ...]] = field(repr=False)

    def matrix(self, g: Perm) -> Matrix:
        if perm_parity(g):
            raise OddPermutation(f"{perm_cycles(g)} is odd")
        return self.elements[g]

    def act(self, g: Perm, v: Sequence[int]) -> EoVector:
        return mat_vec(self.matrix(g), v)

    def apply_x(self, v: Sequence[int]) -> EoVector:
        return mat_vec(self.x, v)

    def inner(self, v: Sequence[int], w: Sequence[int]) -> int:
        return sum(a * s * b for row, a in zip(self.gram, v) for s, b in zip(row, w) if s)

    def basis_vector(self, label: str) -> EoVector:
        i = self.labels.index(label)
        return tuple(1 if j == i else 0 for j in range(6))


@cache
def eo_lattice() -> EoLattice:
    """Build the lattice and its table of all 60 group elements.

    Elements are found breadth first over words in (s2, s3, s5); each
    element keeps its first (shortest) word. Reaching the same permutation
    with two different matrices raises, so a successful build certifies that
    the tables define a representation of the permutation group.
    """
    gens = (ACTION_S2, ACTION_S3, ACTION_S5)
    elements: dict[Perm, Matrix] = {IDENTITY: identity(6)}
    words: dict[Perm, tuple[int, ...]] = {IDENTITY: ()}
    queue = deque([IDENTITY])
    while queue:
        g = queue.popleft()
        for i, (p, m) in enumerate(zip(GENERATORS, gens)):
            h = perm_mul(g, p)
            mh = mat_mul(elements[g], m)
            if h in elements:
                if elements[h] != mh:
                    raise AssertionError(f"action tables are inconsistent at {perm_cycles(h)}")
                continue
            elements[h] = mh
            words[h] = words[g] + (i,)
            queue.append(h)
    action = {"s2": ACTION_S2, "s3": ACTION_S3, "s5": ACTION_S5}
    return EoLattice(BASIS_LABELS, action, X_MATRIX, GRAM, elements, words)


def act(g: Perm, v: Sequence[int]) -> EoVector:
    return eo_lattice().act(g, v)


def apply_x(v: Sequence[int]) -> EoVector:
    return eo_lattice().apply_x(v)


def inner(v: Sequence[int], w: Sequence[int]) -> int:
    return eo_lattice().inner(v, w)


def is_signed_permutation(m: Matrix) -> bool:
    rows_ok = all(sum(1 for x in r if x) == 1 and all(x in (0, 1, -1) for x in r) for r in m)
    cols_ok = all(sum(1 for x in c if x) == 1 for c in transpose(m))
    return rows_ok and cols_ok


def orbit(v: Sequence[int]) -> set[EoVector]:
    lat = eo_lattice()
    return {mat_vec(m, v) for m in lat.elements.values()}


def commutant(mats: Sequence[Matrix], n: int = 6) -> Sublattice:
    """Integer n x n matrices M (flattened row-major) with M g = g M for all g."""
    rows = []
    for g in mats:
        for i in range(n):
            for j in range(n):
                # (M g - g M)[i][j]
                row = [0] * (n * n)
                for k in range(n):
                    if g[k][j]:
                        row[i * n + k] += g[k][j]
                    if g[i][k]:
                        row[k * n + j] -= g[i][k]
                rows.append(tuple(row))
    return kernel_basis(tuple(rows), n * n)


def flatten(m: Matrix) -> tuple[int, ...]:
    return tuple(x for r in m for x in r)


def endo(a: int, b: int) -> Matrix:
    """The endomorphism a*X + b*Id."""
    return tuple(tuple(a * x + (b if i == j else 0) for j, x in enumerate(r)) for i, r in enumerate(X_MATRIX))


def invertible_endomorphisms(bound: int) -> list[tuple[int, int]]:
    """Pairs (a, b) with |a|, |b| <= bound for which a*X + b is invertible over Z."""
    return [
        (a, b)
        for a in range(-bound, bound + 1)
        for b in range(-bound, bound + 1)
        if abs(det(endo(a, b))) == 1
    ]


def isometric_endomorphisms() -> list[tuple[int, int]]:
    """Pairs (a, b) with a*X + b preserving the inner product.

    The squared entries of a*X + b sum to 6*(5a^2 + b^2), while an isometry
    of an orthonormal basis has squared entries summing to 6, so |a|, |b| <= 1
    covers every candidate.
    """
    out = []
    for a in (-1, 0, 1):
        for b in (-1, 0, 1):
            m = endo(a, b)
            if mat_mul(transpose(m), m) == GRAM:
                out.append((a, b))
    return out


def even_sublattice() -> Sublattice:
    """Vectors whose coordinates have even sum."""
    gens = [(2, 0, 0, 0, 0, 0)] + [tuple(1 if k in (0, j) else 0 for k in range(6)) for j in range(1, 6)]
    return Sublattice.span(gens, 6)


@dataclass(frozen=True)
class EndoReport:
    commutant_rank: int
    commutant_is_span_id_x: bool
    id_in_commutant: bool
    units_in_box: tuple[tuple[int, int], ...]
    unit_bound: int
    isometric_units: tuple[tuple[int, int], ...]

    @property
    def units_are_plus_minus_id(self) -> bool:
        return set(self.units_in_box) == {(0, 1), (0, -1)}

    @property
    def isometries_are_plus_minus_id(self) -> bool:
        return set(self.isometric_units) == {(0, 1), (0, -1)}


def verify_endo_ring(unit_bound: int = 4) -> EndoReport:
    """Commutant of the action and the invertible elements a*X + b in a box."""
    lat = eo_lattice()
    comm = commutant(list(lat.action.values()))
    span = Sublattice.span([flatten(identity(6)), flatten(X_MATRIX)], 36)
    same = comm.basis == span.basis
    return EndoReport(
        commutant_rank=comm.rank,
        commutant_is_span_id_x=same,
        id_in_commutant=comm.contains(flatten(identity(6))),
        units_in_box=tuple(invertible_endomorphisms(unit_bound)),
        unit_bound=unit_bound,
        isometric_units=tuple(isometric_endomorphisms()),
    )


def even_sublattice_index() -> list[int]:
    return lattice_quotient(even_sublattice(), Sublattice.full(6))
