"""Exact scalar arithmetic: arbitrary-precision rationals and prime fields.

Every coefficient in the engine is an element of one of these fields.
Floating point never appears; scenario files carry literals like "3" or
"-5/7" which round-trip exactly through :func:`Field.of`.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import FieldError

_LITERAL = re.compile(r"^-?\d+(/\d+)?$")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class ModInt:
    """Canonical residue in [0, p), p prime.  Supports +, -, *, /, ** exactly."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, ModInt):
            if other.p != self.p:
                raise FieldError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return ModInt(other, self.p)
        return None

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else ModInt(self.v + o.v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else ModInt(self.v - o.v, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else ModInt(o.v - self.v, self.p)

    def __mul__(self, other):
        if type(other) is ModInt:
            if other.p != self.p:
                raise FieldError(f"mixed moduli {self.p} and {other.p}")
            out = object.__new__(ModInt)
            out.v = self.v * other.v % self.p
            out.p = self.p
            return out
        o = self._lift(other)
        return NotImplemented if o is None else ModInt(self.v * o.v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModInt(-self.v, self.p)

    def inverse(self) -> "ModInt":
        if self.v == 0:
            raise FieldError(f"division by zero mod {self.p}")
        return ModInt(pow(self.v, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return ModInt(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return str(self.v)


class RationalField:
    """The rationals with `Fraction` elements."""

    name = "rational"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def of(self, v):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        if isinstance(v, str):
            if not _LITERAL.match(v.strip()):
                raise FieldError(f"not an exact rational literal: {v!r}")
            return Fraction(v.strip())
        raise FieldError(f"cannot coerce {v!r} into the rationals")

    def literal(self, x) -> str:
        return str(x)

    def describe(self) -> str:
        return "rational"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"


class PrimeField:
    """The field of residues mod a prime p."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.name = f"prime:{p}"

    @property
    def zero(self):
        return ModInt(0, self.p)

    @property
    def one(self):
        return ModInt(1, self.p)

    def of(self, v):
        if isinstance(v, ModInt):
            if v.p != self.p:
                raise FieldError(f"element of F_{v.p} used in F_{self.p}")
            return v
        if isinstance(v, int):
            return ModInt(v, self.p)
        if isinstance(v, str):
            s = v.strip()
            if not _LITERAL.match(s):
                raise FieldError(f"not an exact literal: {v!r}")
            if "/" in s:
                a, b = s.split("/")
                return ModInt(int(a), self.p) / ModInt(int(b), self.p)
            return ModInt(int(s), self.p)
        raise FieldError(f"cannot coerce {v!r} into F_{self.p}")

    def literal(self, x) -> str:
        return str(x.v if isinstance(x, ModInt) else x)

    def describe(self) -> str:
        return f"F_{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def element_order(x, one, bound: int):
    """Multiplicative order of x, or None if it exceeds bound."""
    acc = x
    for k in range(1, bound + 1):
        if acc == one:
            return k
        acc = acc * x
    return None


def root_of_unity(field, n: int):
    """Deterministic element of exact multiplicative order n.

    For prime fields the smallest positive representative is chosen; over the
    rationals only n = 1, 2 are possible.
    """
    if n == 1:
        return field.one
    if isinstance(field, RationalField):
        if n == 2:
            return field.of(-1)
        raise FieldError(f"the rationals contain no element of order {n}")
    if (field.p - 1) % n != 0:
        raise FieldError(f"F_{field.p} has no element of order {n} (p-1 not divisible)")
    for v in range(2, field.p):
        x = ModInt(v, field.p)
        if element_order(x, field.one, n) == n:
            return x
    raise FieldError(f"no element of order {n} in F_{field.p}")  # unreachable for prime p
