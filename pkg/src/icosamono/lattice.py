"""Exact integer linear algebra.

Matrices are tuples of integer rows and every routine works with Python's
arbitrary precision integers, so nothing here can overflow or round.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Sequence

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


class NotContained(ValueError):
    """A basis vector of the smaller lattice is not in the larger one."""


class RankDeficient(ValueError):
    """Candidate vectors do not span the ambient space rationally."""


def as_matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def zeros(m: int, n: int) -> Matrix:
    return tuple((0,) * n for _ in range(m))


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(a: Matrix, ncols: Optional[int] = None) -> Matrix:
    if not a:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*a))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col) if x) for col in bt) for row in a)


def mat_vec(a: Matrix, v: Sequence[int]) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v) if x) for row in a)


def vec_mat(v: Sequence[int], a: Matrix) -> Vector:
    if not a:
        return ()
    out = [0] * len(a[0])
    for x, row in zip(v, a):
        if x:
            for j, y in enumerate(row):
                if y:
                    out[j] += x * y
    return tuple(out)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def mat_scale(k: int, a: Matrix) -> Matrix:
    return tuple(tuple(k * x for x in r) for r in a)


def det(a: Matrix) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SnfResult:
    """u * a * v == d with u, v unimodular and d in Smith normal form."""

    d: Matrix
    u: Matrix
    v: Matrix

    @property
    def factors(self) -> tuple[int, ...]:
        """Diagonal entries, nonzero invariant factors first, then zeros."""
        return tuple(self.d[i][i] for i in range(min(len(self.d), len(self.d[0]) if self.d else 0)))

    @property
    def rank(self) -> int:
        return sum(1 for f in self.factors if f)


def smith_normal_form(a: Matrix) -> SnfResult:
    """Smith normal form with unimodular transforms.

    Pivots are chosen by minimal absolute value, ties broken by the first
    position in row-major order, so the output is deterministic.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    d = [list(r) for r in a]
    u = [list(r) for r in identity(m)]
    v = [list(r) for r in identity(n)]

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            d[i], d[j] = d[j], d[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            for row in d:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(src: int, dst: int, k: int) -> None:
        # row dst += k * row src
        if k:
            rs, rd = d[src], d[dst]
            for j in range(n):
                if rs[j]:
                    rd[j] += k * rs[j]
            us, ud = u[src], u[dst]
            for j in range(m):
                if us[j]:
                    ud[j] += k * us[j]

    def add_col(src: int, dst: int, k: int) -> None:
        if k:
            for row in d:
                if row[src]:
                    row[dst] += k * row[src]
            for row in v:
                if row[src]:
                    row[dst] += k * row[src]

    def negate_row(i: int) -> None:
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = d[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            p = d[t][t]
            done = True
            for i in range(t + 1, m):
                if d[i][t]:
                    add_row(t, i, -(d[i][t] // p))
                    if d[i][t]:
                        done = False
            for j in range(t + 1, n):
                if d[t][j]:
                    add_col(t, j, -(d[t][j] // p))
                    if d[t][j]:
                        done = False
            if not done:
                best = None
                for i in range(t, m):
                    x = d[i][t]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, t)
                for j in range(t, n):
                    x = d[t][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), t, j)
                swap_rows(t, best[1])
                swap_cols(t, best[2])
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(bad, t, 1)
        if d[t][t] < 0:
            negate_row(t)
        t += 1
    return SnfResult(as_matrix(d), as_matrix(u), as_matrix(v))


def invariant_factors(a: Matrix) -> tuple[int, ...]:
    return smith_normal_form(a).factors


def rank(a: Matrix) -> int:
    if not a or not a[0]:
        return 0
    return smith_normal_form(a).rank


def hermite_rows(rows: Iterable[Sequence[int]], ncols: Optional[int] = None) -> Matrix:
    """Row-style Hermite normal form of the row span, zero rows dropped.

    Pivots are positive and entries above a pivot lie in [0, pivot).
    """
    mat = [list(r) for r in rows]
    if not mat:
        return ()
    n = len(mat[0]) if ncols is None else ncols
    out: list[list[int]] = []
    pivots: list[int] = []
    col = 0
    while mat and col < n:
        nz = [r for r in mat if r[col]]
        if not nz:
            col += 1
            continue
        rest = [r for r in mat if not r[col]]
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            p = nz[0]
            nxt = [p]
            for r in nz[1:]:
                q = r[col] // p[col]
                r2 = [x - q * y for x, y in zip(r, p)]
                if r2[col]:
                    nxt.append(r2)
                elif any(r2):
                    rest.append(r2)
            nz = nxt
        p = nz[0]
        if p[col] < 0:
            p = [-x for x in p]
        for r in out:
            q = r[col] // p[col]
            if q:
                for j in range(n):
                    r[j] -= q * p[j]
        out.append(p)
        pivots.append(col)
        mat = rest
        col += 1
    return as_matrix(out)


@dataclass(frozen=True)
class Sublattice:
    """A sublattice of Z^n stored by its Hermite-reduced row basis."""

    ambient_rank: int
    basis: Matrix

    @staticmethod
    def span(vectors: Iterable[Sequence[int]], ambient_rank: int) -> "Sublattice":
        return Sublattice(ambient_rank, hermite_rows(list(vectors), ambient_rank))

    @staticmethod
    def full(n: int) -> "Sublattice":
        return Sublattice(n, identity(n))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coordinates(self, v: Sequence[int]) -> Optional[Vector]:
        """Coefficients c with c * basis == v, or None if v is not in the lattice."""
        rest = list(v)
        coeffs = []
        for row in self.basis:
            col = next(j for j, x in enumerate(row) if x)
            q, r = divmod(rest[col], row[col])
            if r:
                return None
            coeffs.append(q)
            if q:
                for j, x in enumerate(row):
                    if x:
                        rest[j] -= q * x
        if any(rest):
            return None
        return tuple(coeffs)

    def contains(self, v: Sequence[int]) -> bool:
        return self.coordinates(v) is not None

    def is_saturated(self) -> bool:
        return all(f == 1 for f in invariant_factors(self.basis)) if self.basis else True


def kernel_basis(a: Matrix, ncols: Optional[int] = None) -> Sublattice:
    """Z-basis of {x : a x = 0}, saturated in Z^ncols.

    Works on sparse columns: each row is cleared by integer column operations,
    and the columns that end up with zero image carry the kernel. The column
    transforms are unimodular, which makes the result saturated.
    """
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    cols: list[dict[int, int]] = [dict() for _ in range(n)]
    for i, row in enumerate(a):
        for j, x in enumerate(row):
            if x:
                cols[j][i] = x
    trans: list[dict[int, int]] = [{j: 1} for j in range(n)]
    live = set(range(n))

    def combine(dst: int, src: int, k: int) -> None:
        # column dst += k * column src
        for store in (cols, trans):
            s, t = store[src], store[dst]
            for key, x in s.items():
                y = t.get(key, 0) + k * x
                if y:
                    t[key] = y
                else:
                    t.pop(key, None)

    for i in range(len(a)):
        active = sorted(j for j in live if i in cols[j])
        while len(active) > 1:
            active.sort(key=lambda j: (abs(cols[j][i]), j))
            p = active[0]
            nxt = [p]
            for j in active[1:]:
                combine(j, p, -(cols[j][i] // cols[p][i]))
                if i in cols[j]:
                    nxt.append(j)
            active = nxt
        if active:
            live.discard(active[0])
    vecs = []
    for j in sorted(live):
        vecs.append([trans[j].get(k, 0) for k in range(n)])
    return Sublattice.span(vecs, n)


def image_basis(a: Matrix) -> Sublattice:
    """Column span of a as a sublattice of Z^rows."""
    return Sublattice.span(transpose(a), len(a))


def lattice_quotient(sub: Sublattice, sup: Sublattice) -> list[int]:
    """Invariant factors of sup/sub other than 1; a 0 marks a free summand."""
    coords = []
    for row in sub.basis:
        c = sup.coordinates(row)
        if c is None:
            raise NotContained(f"vector {row} is not in the larger lattice")
        coords.append(c)
    k = sup.rank
    if not coords:
        return [0] * k
    f = smith_normal_form(as_matrix(coords)).factors
    nonzero = [x for x in f if x]
    return [x for x in nonzero if x != 1] + [0] * (k - len(nonzero))


def solve_integer(a: Matrix, b: Sequence[int]) -> Optional[Vector]:
    """Some integer x with a x == b, or None if none exists."""
    m = len(a)
    n = len(a[0]) if m else 0
    snf = smith_normal_form(a)
    ub = mat_vec(snf.u, b)
    y = [0] * n
    for i in range(m):
        di = snf.d[i][i] if i < n else 0
        if di == 0:
            if ub[i]:
                return None
        else:
            q, r = divmod(ub[i], di)
            if r:
                return None
            y[i] = q
    return mat_vec(snf.v, y)


def certify_generation(pairing: Matrix, candidates: Sublattice | Matrix) -> bool:
    """True iff the candidate vectors generate the whole ambient lattice.

    The pairing must be unimodular; for such pairings this is equivalent to
    the dual-vector criterion for every primitive coefficient tuple.
    """
    if abs(det(pairing)) != 1:
        raise ValueError("pairing is not unimodular")
    rows = candidates.basis if isinstance(candidates, Sublattice) else candidates
    n = len(pairing)
    if rank(rows) < n:
        raise RankDeficient("candidates do not span the ambient space")
    return all(f == 1 for f in invariant_factors(rows))


def gcd_all(values: Iterable[int]) -> int:
    g = 0
    for x in values:
        g = gcd(g, x)
    return g
