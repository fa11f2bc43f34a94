"""Finitely presented groups, coset enumeration, and the index of the monodromy group."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional, Sequence

from . import monodromy
from .checks import Check
from .quadring import F4, OElem, QuadMatrix2, Y, reduce_matrix_mod2

Letter = tuple[int, int]  # (generator index, +1 or -1)
Word = tuple[Letter, ...]

DEFAULT_COSET_LIMIT = 1_000_000


class Overflow(RuntimeError):
    """The number of live cosets exceeded the limit."""


class InconsistentChain(ArithmeticError):
    pass


def free_reduce(letters: Iterable[Letter]) -> Word:
    out: list[Letter] = []
    for g, e in letters:
        if out and out[-1] == (g, -e):
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def word(*parts: tuple[int, int] | Word) -> Word:
    """Build a word from (generator, power) pairs and sub-words."""
    letters: list[Letter] = []
    for p in parts:
        if p and isinstance(p[0], tuple):
            letters.extend(p)
        else:
            g, k = p
            letters.extend([(g, 1 if k > 0 else -1)] * abs(k))
    return free_reduce(letters)


def inverse(w: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def power(w: Word, k: int) -> Word:
    base = w if k >= 0 else inverse(w)
    return free_reduce(base * abs(k))


def commutator(a: Word, b: Word) -> Word:
    return free_reduce(a + b + inverse(a) + inverse(b))


def cyclic_reduce(w: Word) -> Word:
    w = free_reduce(w)
    while len(w) > 1 and w[0] == (w[-1][0], -w[-1][1]):
        w = w[1:-1]
    return w


def render_word(w: Word, names: Sequence[str]) -> str:
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        g, e = w[i]
        k = (j - i) * e
        parts.append(names[g] if k == 1 else f"{names[g]}^{k}")
        i = j
    return " ".join(parts)


@dataclass(frozen=True)
class FpGroup:
    generator_names: tuple[str, ...]
    relators: tuple[Word, ...]
    relator_names: tuple[str, ...] = ()

    def __post_init__(self):
        for r in self.relators:
            if free_reduce(r) != r:
                raise ValueError("relators must be freely reduced")

    @property
    def ngens(self) -> int:
        return len(self.generator_names)


# -- coset enumeration ----------------------------------------------------------


def _col(letter: Letter) -> int:
    g, e = letter
    return 2 * g + (0 if e > 0 else 1)


@dataclass(frozen=True)
class CosetTable:
    """A completed table: rows[c][2g] is c*g and rows[c][2g+1] is c*g^-1."""

    group: FpGroup = field(repr=False)
    subgroup: tuple[Word, ...] = field(repr=False)
    rows: tuple[tuple[int, ...], ...]

    @property
    def index(self) -> int:
        return len(self.rows)

    def act(self, c: int, w: Word) -> int:
        for letter in w:
            c = self.rows[c][_col(letter)]
        return c

    def is_valid(self) -> bool:
        n = self.index
        for c in range(n):
            for x in range(2 * self.group.ngens):
                d = self.rows[c][x]
                if not 0 <= d < n or self.rows[d][x ^ 1] != c:
                    return False
        relators_close = all(self.act(c, r) == c for r in self.group.relators for c in range(n))
        subgroup_fixes = all(self.act(0, w) == 0 for w in self.subgroup)
        return relators_close and subgroup_fixes and self.is_transitive()

    def is_transitive(self) -> bool:
        return len(self.representatives()) == self.index

    def representatives(self) -> dict[int, Word]:
        """A shortest word taking coset 0 to each coset."""
        reps: dict[int, Word] = {0: ()}
        queue = deque([0])
        while queue:
            c = queue.popleft()
            for x in range(2 * self.group.ngens):
                d = self.rows[c][x]
                if d not in reps:
                    reps[d] = reps[c] + ((x // 2, 1 if x % 2 == 0 else -1),)
                    queue.append(d)
        return reps

    def dump(self) -> str:
        """One line per coset; columns are generators then their inverses."""
        names = self.group.generator_names
        cols = [f"{n}" if k == 0 else f"{n}^-1" for n in names for k in (0, 1)]
        lines = [f"# cosets={self.index} columns=" + ",".join(cols)]
        for c, row in enumerate(self.rows):
            lines.append(f"{c} " + " ".join(str(v) for v in row))
        return "\n".join(lines) + "\n"


class _Enumerator:
    def __init__(self, group: FpGroup, subgroup: Sequence[Word], limit: int, conjugates: bool):
        if limit < 1:
            raise ValueError("limit must be positive")
        self.group = group
        self.ncols = 2 * group.ngens
        self.limit = limit
        self.table: list[list[Optional[int]]] = [[None] * self.ncols]
        self.parent = [0]
        self.live = 1
        self.lookaheads = 0
        self.subgroup_words = tuple(free_reduce(w) for w in subgroup)
        self.subgroup = [tuple(_col(l) for l in w) for w in self.subgroup_words]
        rels: list[tuple[int, ...]] = []
        seen = set()
        for r in group.relators:
            r = cyclic_reduce(r)
            variants = [r, inverse(r)]
            if conjugates:
                variants = [v[i:] + v[:i] for v in variants for i in range(len(v))]
            for v in variants:
                cols = tuple(_col(l) for l in v)
                if cols and cols not in seen:
                    seen.add(cols)
                    rels.append(cols)
        self.relators = rels

    def find(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def is_live(self, c: int) -> bool:
        return self.parent[c] == c

    def define(self, c: int, x: int) -> None:
        if self.live >= self.limit:
            self.lookaheads += 1
            self.lookahead()
            if self.live >= self.limit:
                raise Overflow(f"more than {self.limit} live cosets")
            if not self.is_live(c) or self.table[c][x] is not None:
                return
        d = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(d)
        self.live += 1
        self.table[c][x] = d
        self.table[d][x ^ 1] = c

    def _merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.find(a), self.find(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        self.parent[b] = a
        self.live -= 1
        queue.append(b)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.ncols):
                f = self.table[e][x]
                if f is None:
                    continue
                if self.table[f][x ^ 1] == e:
                    self.table[f][x ^ 1] = None
                e1, f1 = self.find(e), self.find(f)
                if self.table[e1][x] is not None:
                    self._merge(f1, self.table[e1][x], queue)
                elif self.table[f1][x ^ 1] is not None:
                    self._merge(e1, self.table[f1][x ^ 1], queue)
                else:
                    self.table[e1][x] = f1
                    self.table[f1][x ^ 1] = e1

    def scan(self, alpha: int, w: Sequence[int], fill: bool) -> None:
        f, b = alpha, alpha
        i, j = 0, len(w) - 1
        t = self.table
        while True:
            while i <= j and t[f][w[i]] is not None:
                f = t[f][w[i]]
                i += 1
            if i > j:
                if f != alpha:
                    self.coincidence(f, alpha)
                return
            while j >= i and t[b][w[j] ^ 1] is not None:
                b = t[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][w[i]] = b
                t[b][w[i] ^ 1] = f
                return
            if not fill:
                return
            before = self.lookaheads
            self.define(f, w[i])
            if self.lookaheads != before:
                # a lookahead may have merged cosets on the scanned path
                if not self.is_live(alpha):
                    return
                f, b = alpha, alpha
                i, j = 0, len(w) - 1

    def lookahead(self) -> None:
        for c in range(len(self.table)):
            for r in self.relators:
                if not self.is_live(c):
                    break
                self.scan(c, r, fill=False)

    def run(self) -> CosetTable:
        for w in self.subgroup:
            self.scan(0, w, fill=True)
        alpha = 0
        while alpha < len(self.table):
            for r in self.relators:
                if not self.is_live(alpha):
                    break
                self.scan(alpha, r, fill=True)
            if self.is_live(alpha):
                for x in range(self.ncols):
                    if self.table[alpha][x] is None:
                        self.define(alpha, x)
            alpha += 1
        return self.compact()

    def compact(self) -> CosetTable:
        live = [c for c in range(len(self.table)) if self.is_live(c)]
        new = {c: i for i, c in enumerate(live)}
        rows = tuple(tuple(new[self.find(self.table[c][x])] for x in range(self.ncols)) for c in live)
        return CosetTable(self.group, self.subgroup_words, rows)


def todd_coxeter(
    group: FpGroup, subgroup: Sequence[Word], limit: int = DEFAULT_COSET_LIMIT, conjugates: bool = True
) -> CosetTable:
    """Enumerate the right cosets of the subgroup generated by the given words."""
    table = _Enumerator(group, subgroup, limit, conjugates).run()
    if not table.is_valid():
        raise AssertionError("coset enumeration produced an invalid table")
    return table


# -- SL2 over the golden ring -----------------------------------------------------

A0, A1, A2, A3, A4 = range(5)
SL2O_NAMES = ("A0", "A1", "A2", "A3", "A4")


def sl2o_presentation() -> FpGroup:
    g = {i: ((i, 1),) for i in range(5)}
    rels = [
        ("C0", power(g[A0], 2)),
        ("C1", commutator(g[A0], g[A1])),
        ("C2", commutator(g[A0], g[A2])),
        ("C3", commutator(g[A0], g[A3])),
        ("C4", commutator(g[A0], g[A4])),
        ("R1", word((A0, 1), (A1, 2))),
        ("R2", power(word((A1, 1), (A2, 1)), 3)),
        ("R3", word((A0, 1), power(word((A1, 1), (A3, 1)), 2))),
        ("R4", commutator(g[A2], g[A4])),
        ("R5", word((A3, 1), (A2, 1), (A3, -1), inverse(word((A2, 1), (A4, 1))))),
        ("R6", word((A3, 1), (A4, 1), (A3, -1), inverse(word((A2, 1), (A4, 2))))),
        (
            "R7",
            word(
                (A0, 1), (A1, 1), (A4, 1), (A1, 1),
                inverse(word((A2, 1), (A4, -1), (A1, 1), (A4, -1), (A3, 1))),
            ),
        ),
    ]
    return FpGroup(SL2O_NAMES, tuple(r for _, r in rels), tuple(n for n, _ in rels))


def generator_matrices() -> tuple[QuadMatrix2, ...]:
    return (
        QuadMatrix2.of(((-1, 0), (0, -1)), OElem),
        QuadMatrix2.of(((0, 1), (-1, 0)), OElem),
        QuadMatrix2.of(((1, 1), (0, 1)), OElem),
        QuadMatrix2.of(((Y, 0), (0, Y - 1)), OElem),
        QuadMatrix2.of(((1, Y), (0, 1)), OElem),
    )


def word_to_matrix(w: Word) -> QuadMatrix2:
    mats = generator_matrices()
    out = QuadMatrix2.identity(OElem)
    for g, e in w:
        out = out * (mats[g] if e > 0 else mats[g].inverse())
    return out


MONODROMY_WORDS: tuple[Word, ...] = (
    word((A4, 2), (A2, -3)),
    word((A4, -2), (A2, 2), (A1, 1), (A4, -2), (A1, 1)),
    word((A0, 1), (A1, 1), (A4, 2), (A2, -1), (A1, 1)),
)


# -- the finite quotient ----------------------------------------------------------

F4Matrix = tuple[tuple[F4, F4], tuple[F4, F4]]


def _f4_mul(a: F4Matrix, b: F4Matrix) -> F4Matrix:
    return tuple(tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2)) for i in range(2))


def _f4_det(m: F4Matrix) -> F4:
    return m[0][0] * m[1][1] + m[0][1] * m[1][0]  # characteristic 2


def sl2_f4() -> list[F4Matrix]:
    els = F4.elements()
    one = F4(1)
    return [((a, b), (c, d)) for a, b, c, d in product(els, repeat=4) if _f4_det(((a, b), (c, d))) == one]


def sl2_f2() -> list[F4Matrix]:
    return [m for m in sl2_f4() if all(x.in_f2() for row in m for x in row)]


def _generated(gens: Sequence[F4Matrix]) -> set[F4Matrix]:
    one, zero = F4(1), F4(0)
    ident = ((one, zero), (zero, one))
    seen = {ident}
    queue = deque([ident])
    while queue:
        m = queue.popleft()
        for g in gens:
            n = _f4_mul(m, g)
            if n not in seen:
                seen.add(n)
                queue.append(n)
    return seen


@dataclass(frozen=True)
class FiniteIndex:
    order_f4: int
    order_f2: int
    index: int
    reduction_onto: bool
    cosets: int


def index_oo_in_o() -> FiniteIndex:
    """[SL2(O) : SL2(O_o)] read off from SL2(F4) / SL2(F2)."""
    big, small = sl2_f4(), sl2_f2()
    gens = [reduce_matrix_mod2(m) for m in generator_matrices()]
    onto = _generated(gens) == set(big)
    small_set = set(small)
    cosets = {frozenset(_f4_mul(h, g) for h in small_set) for g in big}
    return FiniteIndex(len(big), len(small), len(big) // len(small), onto, len(cosets))


@dataclass(frozen=True)
class IndexChain:
    index_in_sl2o: int
    index_oo_in_o: int
    index_in_sl2oo: int
    words_reduce_into_f2: bool
    fibre_sizes: tuple[int, ...]


def certify_index_two(limit: int = DEFAULT_COSET_LIMIT, table: Optional[CosetTable] = None) -> IndexChain:
    table = table or todd_coxeter(sl2o_presentation(), MONODROMY_WORDS, limit)
    fin = index_oo_in_o()
    mod2 = [reduce_matrix_mod2(word_to_matrix(w)) for w in MONODROMY_WORDS]
    in_f2 = all(x.in_f2() for m in mod2 for row in m for x in row)
    if not in_f2:
        raise InconsistentChain("a monodromy word does not reduce into SL2(F2)")
    if table.index % fin.index:
        raise InconsistentChain(f"{fin.index} does not divide {table.index}")
    # each right coset H g lies in SL2(O_o) g; count cosets over each of the 10 classes
    small = set(sl2_f2())
    fibres: dict[frozenset, int] = {}
    for w in table.representatives().values():
        g = reduce_matrix_mod2(word_to_matrix(w))
        key = frozenset(_f4_mul(h, g) for h in small)
        fibres[key] = fibres.get(key, 0) + 1
    sizes = tuple(sorted(fibres.values()))
    quotient = table.index // fin.index
    if len(sizes) != fin.index or set(sizes) != {quotient}:
        raise InconsistentChain(f"coset fibres over SL2(F4)/SL2(F2) are {sizes}")
    return IndexChain(table.index, fin.index, quotient, in_f2, sizes)


def presentation_report() -> list[Check]:
    g = sl2o_presentation()
    out = [Check.equal("presentation.relator_count", 12, len(g.relators))]
    ident = QuadMatrix2.identity(OElem)
    for name, r in zip(g.relator_names, g.relators):
        m = word_to_matrix(r)
        out.append(Check.equal(f"presentation.{name}=I", str(ident), str(m)))
    dets = all(word_to_matrix(((i, 1),)).is_sl2() for i in range(5))
    out.append(Check.true("presentation.generators_det_one", dets))
    for w, m in zip(MONODROMY_WORDS, monodromy.displayed_generators()):
        out.append(Check.equal(f"presentation.word({render_word(w, SL2O_NAMES)})", str(m.embed()), str(word_to_matrix(w))))
    return out


def index_report(limit: int = DEFAULT_COSET_LIMIT) -> tuple[list[Check], Optional[CosetTable], Optional[IndexChain]]:
    """Raises Overflow when the enumeration exceeds the limit."""
    table = todd_coxeter(sl2o_presentation(), MONODROMY_WORDS, limit)
    out = [Check.equal("index.SL2O:Gamma", 20, table.index), Check.true("index.coset_table_valid", table.is_valid())]
    fin = index_oo_in_o()
    out.append(Check.equal("index.|SL2(F4)|", 60, fin.order_f4))
    out.append(Check.equal("index.|SL2(F2)|", 6, fin.order_f2))
    out.append(Check.equal("index.SL2O:SL2Oo", 10, fin.index))
    out.append(Check.true("index.reduction_onto_SL2(F4)", fin.reduction_onto))
    out.append(Check.equal("index.coset_count_F4/F2", 10, fin.cosets))
    try:
        chain = certify_index_two(limit, table)
    except InconsistentChain as exc:
        out.append(Check("index.SL2Oo:Gamma", False, "2", str(exc)))
        return out, table, None
    out.append(Check.true("index.words_reduce_into_SL2(F2)", chain.words_reduce_into_f2))
    out.append(Check.equal("index.fibres_over_SL2(F4)/SL2(F2)", (2,) * 10, chain.fibre_sizes))
    out.append(Check.equal("index.SL2Oo:Gamma", 2, chain.index_in_sl2oo))
    return out, table, chain
