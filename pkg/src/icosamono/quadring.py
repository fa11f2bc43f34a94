"""Arithmetic in Z[X]/(X^2-5) and Z[Y]/(Y^2-Y-1), 2x2 matrices over them,
and reduction of the larger order modulo 2 onto the four element field.

X plays the role of sqrt(5) and Y of the golden ratio; X maps to 2Y-1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import ClassVar, Union


@dataclass(frozen=True, eq=False)
class _QuadElem:
    a: int
    b: int

    symbol: ClassVar[str] = "?"

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        return type(other) is type(self) and (self.a, self.b) == (other.a, other.b)

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.a, self.b))

    @classmethod
    def coerce(cls, x):
        if isinstance(x, cls):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        return NotImplemented

    @classmethod
    def zero(cls):
        return cls(0, 0)

    @classmethod
    def one(cls):
        return cls(1, 0)

    @classmethod
    def gen(cls):
        return cls(0, 1)

    def __add__(self, other):
        o = self.coerce(other)
        if o is NotImplemented:
            return o
        return type(self)(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-self.a, -self.b)

    def __sub__(self, other):
        o = self.coerce(other)
        if o is NotImplemented:
            return o
        return type(self)(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self.coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = self.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def is_integer(self) -> bool:
        return self.b == 0

    def is_unit(self) -> bool:
        return abs(self.norm()) == 1

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a}{self.b:+d}*{self.symbol}"

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.a}, {self.b})"

    @classmethod
    def parse(cls, text: str):
        """Parse "a", "a+b*S", "b*S", "S", "-S" with optional whitespace."""
        s = re.sub(r"\s+", "", text)
        if not s:
            raise ValueError("empty ring element")
        sym = cls.symbol
        m = re.fullmatch(rf"([+-]?\d+)?(?:([+-]?)(\d+)?\*?{sym})?", s)
        if m is None or (m.group(1) is None and sym not in s):
            raise ValueError(f"cannot parse {text!r} as an element of Z[{sym}]")
        a = int(m.group(1)) if m.group(1) is not None else 0
        if sym in s:
            sign = -1 if m.group(2) == "-" else 1
            b = sign * (int(m.group(3)) if m.group(3) is not None else 1)
        else:
            b = 0
        return cls(a, b)


class OoElem(_QuadElem):
    """a + b*X with X^2 = 5."""

    symbol: ClassVar[str] = "X"

    def __mul__(self, other):
        o = self.coerce(other)
        if o is NotImplemented:
            return o
        return OoElem(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    def conj(self) -> "OoElem":
        return OoElem(self.a, -self.b)

    def norm(self) -> int:
        return self.a * self.a - 5 * self.b * self.b

    def embed(self) -> "OElem":
        return embed_oo(self)


class OElem(_QuadElem):
    """a + b*Y with Y^2 = Y + 1."""

    symbol: ClassVar[str] = "Y"

    def __mul__(self, other):
        o = self.coerce(other)
        if o is NotImplemented:
            return o
        bb = self.b * o.b
        return OElem(self.a * o.a + bb, self.a * o.b + self.b * o.a + bb)

    def conj(self) -> "OElem":
        # Y -> 1 - Y
        return OElem(self.a + self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a + self.a * self.b - self.b * self.b

    def to_oo(self) -> "OoElem | None":
        """Preimage under the embedding, or None when the element is not in Z[X]."""
        if self.b % 2:
            return None
        return OoElem(self.a + self.b // 2, self.b // 2)


QuadElem = Union[OoElem, OElem]


def embed_oo(x: OoElem | int) -> OElem:
    """The ring map Z[X] -> Z[Y] sending X to 2Y - 1."""
    x = OoElem.coerce(x)
    return OElem(x.a - x.b, 2 * x.b)


X = OoElem(0, 1)
Y = OElem(0, 1)


class F4:
    """The field with four elements {0, 1, w, w+1}, w^2 = w + 1.

    Values are stored as 2-bit integers: bit 0 for 1, bit 1 for w.
    """

    __slots__ = ("value",)
    _MUL = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]]
    _NAMES = ("0", "1", "w", "w+1")

    def __init__(self, value: int):
        if value not in (0, 1, 2, 3):
            raise ValueError("F4 value must be 0..3")
        self.value = value

    def __add__(self, other: "F4") -> "F4":
        return F4(self.value ^ other.value)

    __sub__ = __add__

    def __neg__(self) -> "F4":
        return self

    def __mul__(self, other: "F4") -> "F4":
        return F4(self._MUL[self.value][other.value])

    def inverse(self) -> "F4":
        if not self.value:
            raise ZeroDivisionError("zero has no inverse in F4")
        return next(F4(v) for v in (1, 2, 3) if self._MUL[self.value][v] == 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, F4) and other.value == self.value

    def __hash__(self) -> int:
        return hash(("F4", self.value))

    def __repr__(self) -> str:
        return f"F4({self._NAMES[self.value]})"

    def __str__(self) -> str:
        return self._NAMES[self.value]

    def in_f2(self) -> bool:
        return self.value in (0, 1)

    @staticmethod
    def elements() -> tuple["F4", ...]:
        return tuple(F4(v) for v in range(4))


F4_ZERO, F4_ONE, OMEGA = F4(0), F4(1), F4(2)


def reduce_mod2(x: OElem | OoElem | int) -> F4:
    """O -> O/2O = F4 with Y -> w; elements of Z[X] go through the embedding."""
    if isinstance(x, int):
        x = OElem(x, 0)
    if isinstance(x, OoElem):
        x = embed_oo(x)
    return F4((x.a & 1) | ((x.b & 1) << 1))


@dataclass(frozen=True)
class QuadMatrix2:
    """A 2x2 matrix [[p, q], [r, s]] over one of the two orders."""

    p: QuadElem
    q: QuadElem
    r: QuadElem
    s: QuadElem

    @staticmethod
    def of(rows, ring: type = OoElem) -> "QuadMatrix2":
        (p, q), (r, s) = rows
        c = ring.coerce
        return QuadMatrix2(c(p), c(q), c(r), c(s))

    @staticmethod
    def identity(ring: type = OoElem) -> "QuadMatrix2":
        return QuadMatrix2.of(((1, 0), (0, 1)), ring)

    @property
    def ring(self) -> type:
        return type(self.p)

    @property
    def rows(self):
        return ((self.p, self.q), (self.r, self.s))

    def __mul__(self, o: "QuadMatrix2") -> "QuadMatrix2":
        return QuadMatrix2(
            self.p * o.p + self.q * o.r,
            self.p * o.q + self.q * o.s,
            self.r * o.p + self.s * o.r,
            self.r * o.q + self.s * o.s,
        )

    def __add__(self, o: "QuadMatrix2") -> "QuadMatrix2":
        return QuadMatrix2(self.p + o.p, self.q + o.q, self.r + o.r, self.s + o.s)

    def __sub__(self, o: "QuadMatrix2") -> "QuadMatrix2":
        return QuadMatrix2(self.p - o.p, self.q - o.q, self.r - o.r, self.s - o.s)

    def __neg__(self) -> "QuadMatrix2":
        return QuadMatrix2(-self.p, -self.q, -self.r, -self.s)

    def __pow__(self, k: int) -> "QuadMatrix2":
        base = self if k >= 0 else self.inverse()
        out = QuadMatrix2.identity(self.ring)
        for _ in range(abs(k)):
            out = out * base
        return out

    def det(self) -> QuadElem:
        return self.p * self.s - self.q * self.r

    def is_sl2(self) -> bool:
        return self.det() == self.ring.one()

    def inverse(self) -> "QuadMatrix2":
        """Inverse of a determinant-one matrix."""
        if not self.is_sl2():
            raise ValueError("only determinant-one matrices are inverted")
        return QuadMatrix2(self.s, -self.q, -self.r, self.p)

    def is_identity(self) -> bool:
        return self == QuadMatrix2.identity(self.ring)

    def conj(self) -> "QuadMatrix2":
        return QuadMatrix2(self.p.conj(), self.q.conj(), self.r.conj(), self.s.conj())

    def embed(self) -> "QuadMatrix2":
        if self.ring is OElem:
            return self
        return QuadMatrix2(embed_oo(self.p), embed_oo(self.q), embed_oo(self.r), embed_oo(self.s))

    def apply(self, col: tuple) -> tuple:
        """Matrix times a column vector of ring elements."""
        u, v = col
        return (self.p * u + self.q * v, self.r * u + self.s * v)

    def __str__(self) -> str:
        return f"[[{self.p}, {self.q}], [{self.r}, {self.s}]]"


def reduce_matrix_mod2(m: QuadMatrix2) -> tuple[tuple[F4, F4], tuple[F4, F4]]:
    return tuple(tuple(reduce_mod2(x) for x in row) for row in m.rows)


def det2(m: QuadMatrix2) -> QuadElem:
    return m.det()


def is_sl2(m: QuadMatrix2) -> bool:
    return m.is_sl2()


def _sqrt5_bounds(bits: int) -> tuple[Fraction, Fraction]:
    scale = 1 << bits
    lo = isqrt(5 * scale * scale)
    return Fraction(lo, scale), Fraction(lo + 1, scale)


def real_embeddings(x: QuadElem | int, bits: int = 64) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
    """Rational intervals for the images under sqrt(5) -> +sqrt(5) and -sqrt(5).

    Each interval has width below 2**-bits.
    """
    if isinstance(x, int):
        x = OoElem(x, 0)
    if isinstance(x, OElem):
        # a + b*Y = (2a + b)/2 + (b/2) sqrt(5)
        a, b = Fraction(2 * x.a + x.b, 2), Fraction(x.b, 2)
    else:
        a, b = Fraction(x.a), Fraction(x.b)
    k = bits + abs(int(b)).bit_length() + 2
    lo, hi = _sqrt5_bounds(k)

    def interval(c: Fraction) -> tuple[Fraction, Fraction]:
        if c == 0:
            return (a, a)
        u, v = a + c * lo, a + c * hi
        return (min(u, v), max(u, v))

    return interval(b), interval(-b)
