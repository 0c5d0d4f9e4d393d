"""Parameters of essentially square-integrable representations of GL_n.

A :class:`Block` is one essentially square-integrable parameter:

* :class:`ArchChar` -- a character chi_{m,r} of R^x (m in {0, 1}) or C^x (m in Z),
* :class:`ArchInduced` -- the 2-dimensional W_R parameter Ind chi_{m,r}, m != 0,
* :class:`Segment` -- the generalized Steinberg sigma_{n,tau} on a non-archimedean
  field, built on a cuspidal base (:class:`Unram`, :class:`Ramified`, :class:`Opaque`).

A :class:`RepProduct` is an ordered list of blocks read as the normalized
parabolic induction sigma_1 x ... x sigma_l.

Exponent conventions
--------------------
``Unram(c, zeta)`` is the character |.|^c times the finite-order unramified
character sending a uniformizer to ``zeta``; its L-factor has its pole (when
zeta = 1) at s = -c.  A segment of length l on a GL_1 base with exponent c
consists of the characters with exponents c-l+1, ..., c; c is the *top end*.
The residue characteristic q is treated as a formal transcendental > 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import singledispatch
from typing import Union

from . import mutations

QQ = Fraction


class ParameterError(ValueError):
    """Raised for ill-formed or non-canonical parameter data."""


class FieldMismatch(ValueError):
    """Raised when parameters over different local fields are combined."""


def qq(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("exact rationals only; got a float")
    return Fraction(x)


@dataclass(frozen=True, order=True)
class CQ:
    """Exact complex rational re + im*i."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", qq(self.re))
        object.__setattr__(self, "im", qq(self.im))

    @classmethod
    def of(cls, x) -> CQ:
        return x if isinstance(x, CQ) else cls(qq(x))

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __add__(self, other):
        other = CQ.of(other)
        return CQ(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return CQ(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-CQ.of(other))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


@dataclass(frozen=True, order=True)
class RootOfUnity:
    """exp(2 pi i j/k) with gcd(j, k) = 1 (the trivial root is k=1, j=0)."""

    k: int = 1
    j: int = 0

    def __post_init__(self):
        if self.k < 1 or not 0 <= self.j < self.k:
            raise ParameterError(f"bad root of unity index {self.j}/{self.k}")
        if math.gcd(self.j, self.k) != 1:
            raise ParameterError(f"root of unity {self.j}/{self.k} is not reduced")

    @classmethod
    def from_fraction(cls, f) -> RootOfUnity:
        f = qq(f) % 1
        return cls(f.denominator, f.numerator)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.j, self.k)

    @property
    def is_one(self) -> bool:
        return self.k == 1

    def __mul__(self, other: RootOfUnity) -> RootOfUnity:
        return RootOfUnity.from_fraction(self.fraction + other.fraction)

    def inverse(self) -> RootOfUnity:
        return RootOfUnity.from_fraction(-self.fraction)


ONE = RootOfUnity()


class Field(Enum):
    REAL = "R"
    COMPLEX = "C"
    NONARCH = "F"


@dataclass(frozen=True)
class ArchChar:
    field: Field
    m: int
    r: CQ

    def __post_init__(self):
        object.__setattr__(self, "r", CQ.of(self.r))
        if self.field is Field.NONARCH:
            raise ParameterError("ArchChar lives over R or C only")
        if self.field is Field.REAL and self.m not in (0, 1):
            raise ParameterError(f"chi_(m,r) over R needs m in {{0,1}}, got m={self.m}")


@dataclass(frozen=True)
class ArchInduced:
    """Ind_{C^x}^{W_R} chi_{m,r}; canonical when m >= 1."""

    m: int
    r: CQ

    def __post_init__(self):
        object.__setattr__(self, "r", CQ.of(self.r))
        if self.m == 0:
            raise ParameterError(
                "Ind chi_(0,r) is reducible (chi_(0,r) + chi_(1,r) over R); "
                "an induced block needs m != 0"
            )

    field = Field.REAL


@dataclass(frozen=True)
class Unram:
    c: Fraction
    zeta: RootOfUnity = ONE

    def __post_init__(self):
        object.__setattr__(self, "c", qq(self.c))


@dataclass(frozen=True)
class Ramified:
    """A ramified GL_1 character times |.|^c; only its exponent is tracked."""

    c: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "c", qq(self.c))


@dataclass(frozen=True)
class Opaque:
    """Supercuspidal of GL_m, m >= 2, known only by degree and exponent."""

    degree: int
    e: Fraction

    def __post_init__(self):
        object.__setattr__(self, "e", qq(self.e))
        if self.degree < 2:
            raise ParameterError("opaque cuspidals have degree >= 2")


Cuspidal = Union[Unram, Ramified, Opaque]


@dataclass(frozen=True)
class Segment:
    base: Cuspidal
    length: int = 1

    def __post_init__(self):
        if self.length < 1:
            raise ParameterError(f"segment length must be >= 1, got {self.length}")

    field = Field.NONARCH


Block = Union[ArchChar, ArchInduced, Segment]


def degree(b: Block) -> int:
    if isinstance(b, ArchChar):
        return 1
    if isinstance(b, ArchInduced):
        return 2
    base_degree = b.base.degree if isinstance(b.base, Opaque) else 1
    return base_degree * b.length


def is_opaque(b: Block) -> bool:
    return isinstance(b, Segment) and isinstance(b.base, Opaque)


@dataclass(frozen=True)
class RepProduct:
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks:
            raise ParameterError("a product needs at least one block")
        fields = {b.field for b in blocks}
        if len(fields) > 1:
            raise FieldMismatch(f"blocks over different fields: {sorted(f.name for f in fields)}")

    @classmethod
    def of(cls, *blocks: Block) -> RepProduct:
        return cls(blocks)

    @property
    def field(self) -> Field:
        return self.blocks[0].field

    @property
    def degree(self) -> int:
        return sum(degree(b) for b in self.blocks)

    @property
    def opaque(self) -> bool:
        return any(is_opaque(b) for b in self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self):
        return len(self.blocks)


def as_product(x) -> RepProduct:
    return x if isinstance(x, RepProduct) else RepProduct((x,))


# -- operations -------------------------------------------------------------


@singledispatch
def canonicalize(b):
    """Return the canonical form; only Ind chi_{m,r} with m < 0 changes (to -m)."""
    return b


@canonicalize.register
def _(b: ArchInduced):
    return b if b.m > 0 else ArchInduced(-b.m, b.r)


@canonicalize.register
def _(rho: RepProduct):
    return RepProduct(tuple(canonicalize(b) for b in rho.blocks))


@singledispatch
def dual(b):
    """Contragredient."""
    raise TypeError(f"not a parameter: {b!r}")


@dual.register
def _(b: ArchChar):
    if b.field is Field.REAL:
        if mutations.active(mutations.FLIP_REAL_DUAL):
            return b
        return ArchChar(Field.REAL, b.m, -b.r)
    return ArchChar(Field.COMPLEX, -b.m, -b.r)


@dual.register
def _(b: ArchInduced):
    # Ind chi_{-m,-r} is isomorphic to Ind chi_{m,-r}
    return ArchInduced(abs(b.m), -b.r)


@dual.register
def _(b: Segment):
    # exponents c-l+1..c become -c..-c+l-1, so the new top end is -c+l-1
    shift = b.length - 1
    base = b.base
    if isinstance(base, Unram):
        return Segment(Unram(shift - base.c, base.zeta.inverse()), b.length)
    if isinstance(base, Ramified):
        return Segment(Ramified(shift - base.c), b.length)
    return Segment(Opaque(base.degree, shift - base.e), b.length)


@dual.register
def _(rho: RepProduct):
    return RepProduct(tuple(dual(b) for b in rho.blocks))


@singledispatch
def twist(b, t):
    """Multiply by |det|^t."""
    raise TypeError(f"not a parameter: {b!r}")


@twist.register
def _(b: ArchChar, t):
    return ArchChar(b.field, b.m, b.r + qq(t))


@twist.register
def _(b: ArchInduced, t):
    return ArchInduced(b.m, b.r + qq(t))


@twist.register
def _(b: Segment, t):
    t = qq(t)
    base = b.base
    if isinstance(base, Unram):
        return Segment(Unram(base.c + t, base.zeta), b.length)
    if isinstance(base, Ramified):
        return Segment(Ramified(base.c + t), b.length)
    return Segment(Opaque(base.degree, base.e + t), b.length)


@twist.register
def _(rho: RepProduct, t):
    return RepProduct(tuple(twist(b, t) for b in rho.blocks))


def exponent_e(b: Block) -> Fraction:
    """The real number e with b * |det|^(-e) unitary and tempered."""
    if isinstance(b, (ArchChar, ArchInduced)):
        return b.r.re
    base = b.base
    top = base.e if isinstance(base, Opaque) else base.c
    return top - Fraction(b.length - 1, 2)
