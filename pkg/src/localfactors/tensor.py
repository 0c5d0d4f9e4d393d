"""Weil-Deligne tensor calculus and Rankin-Selberg L-factors.

Indecomposables:

* ``RDim1(m, r)``  -- chi_{m,r} of W_R (m in {0, 1})
* ``RDim2(m, r)``  -- Ind_{C^x}^{W_R} chi_{m,r}, m >= 1
* ``CDim1(m, r)``  -- chi_{m,r} of C^x
* ``Seg(chi, l)``  -- chi (x) Sp(l), chi an unramified or ramified GL_1 character.
  The characters occurring are chi|.|^{-k}, 0 <= k < l, and the L-factor is
  that of chi itself (the top end).

Rankin-Selberg factors are the standard factors of the tensor product of
parameters, taken block pair by block pair.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import mutations
from .lfactor import ONE_FACTOR, Euler, GammaC, GammaR, LFactor, product
from .parameters import (
    CQ,
    ArchChar,
    ArchInduced,
    Field,
    FieldMismatch,
    Opaque,
    Ramified,
    Segment,
    Unram,
    as_product,
    is_opaque,
)


class UnsupportedTensor(ValueError):
    """Raised when an opaque cuspidal is pushed into the tensor calculus."""


@dataclass(frozen=True)
class RDim1:
    m: int
    r: CQ

    def __post_init__(self):
        object.__setattr__(self, "r", CQ.of(self.r))
        if self.m not in (0, 1):
            raise ValueError(f"RDim1 needs m in {{0,1}}, got {self.m}")


@dataclass(frozen=True)
class RDim2:
    m: int
    r: CQ

    def __post_init__(self):
        object.__setattr__(self, "r", CQ.of(self.r))
        if self.m < 1:
            raise ValueError(f"RDim2 needs m >= 1, got {self.m}")


@dataclass(frozen=True)
class CDim1:
    m: int
    r: CQ

    def __post_init__(self):
        object.__setattr__(self, "r", CQ.of(self.r))


@dataclass(frozen=True)
class Seg:
    char: Union[Unram, Ramified]
    length: int

    def __post_init__(self):
        if isinstance(self.char, Opaque):
            raise UnsupportedTensor("opaque cuspidals do not enter the tensor calculus")
        if self.length < 1:
            raise ValueError("Sp length must be >= 1")


Indec = Union[RDim1, RDim2, CDim1, Seg]

_FIELD = {RDim1: Field.REAL, RDim2: Field.REAL, CDim1: Field.COMPLEX, Seg: Field.NONARCH}


def _indec_key(v):
    if isinstance(v, Seg):
        ch = v.char
        if isinstance(ch, Unram):
            return (3, 0, ch.c, ch.zeta.fraction, v.length)
        return (3, 1, ch.c, Fraction(0), v.length)
    kind = {RDim1: 0, RDim2: 1, CDim1: 2}[type(v)]
    return (kind, v.m, v.r.re, v.r.im, 0)


def indec_dim(v: Indec) -> int:
    if isinstance(v, RDim2):
        return 2
    if isinstance(v, Seg):
        return v.length
    return 1


@dataclass(frozen=True)
class WDRep:
    """Multiset of indecomposables over one field (kept sorted)."""

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(sorted(self.parts, key=_indec_key))
        object.__setattr__(self, "parts", parts)
        if len({_FIELD[type(p)] for p in parts}) > 1:
            raise FieldMismatch("WD representation mixes fields")

    @classmethod
    def of(cls, *parts: Indec) -> WDRep:
        return cls(parts)

    @property
    def dim(self) -> int:
        return sum(indec_dim(p) for p in self.parts)

    @property
    def field(self):
        return _FIELD[type(self.parts[0])] if self.parts else None

    def counts(self) -> Counter:
        return Counter(self.parts)

    def __add__(self, other: WDRep) -> WDRep:
        return WDRep(self.parts + other.parts)


def expand_ind_zero(r) -> WDRep:
    """Ind chi_{0,r} = chi_{0,r} + chi_{1,r} as a W_R representation."""
    r = CQ.of(r)
    return WDRep.of(RDim1(0, r), RDim1(1, r))


def _ind(m: int, r: CQ) -> WDRep:
    if m == 0:
        return expand_ind_zero(r)
    return WDRep.of(RDim2(abs(m), r))


def to_wd(b) -> WDRep:
    """Langlands parameter of a block, or the direct sum over a product."""
    if not isinstance(b, (ArchChar, ArchInduced, Segment)):
        out = WDRep()
        for blk in as_product(b).blocks:
            out = out + to_wd(blk)
        return out
    if isinstance(b, ArchChar):
        cls = RDim1 if b.field is Field.REAL else CDim1
        return WDRep.of(cls(b.m, b.r))
    if isinstance(b, ArchInduced):
        return _ind(b.m, b.r)
    if isinstance(b.base, Opaque):
        raise UnsupportedTensor(f"segment on an opaque cuspidal has no WD model: {b!r}")
    return WDRep.of(Seg(b.base, b.length))


def _char_product(a, b):
    if isinstance(a, Ramified) or isinstance(b, Ramified):
        return Ramified(a.c + b.c)
    return Unram(a.c + b.c, a.zeta * b.zeta)


def _tensor_pair(v: Indec, w: Indec) -> WDRep:
    fv, fw = _FIELD[type(v)], _FIELD[type(w)]
    if fv is not fw:
        raise FieldMismatch(f"cannot tensor {fv.name} with {fw.name} parameters")
    if isinstance(v, CDim1):
        return WDRep.of(CDim1(v.m + w.m, v.r + w.r))
    if isinstance(v, Seg):
        return _tensor_seg(v, w)
    if isinstance(v, RDim2) and isinstance(w, RDim1):
        v, w = w, v
    r = v.r + w.r
    if isinstance(v, RDim1):
        if isinstance(w, RDim1):
            return WDRep.of(RDim1((v.m + w.m) % 2, r))
        # restriction of chi_{m,r} of R^x to C^x is (z zbar)^r
        return WDRep.of(RDim2(w.m, r))
    # Ind chi_{m1} (x) Ind chi_{m2} = Ind chi_{m1+m2} + Ind chi_{m1-m2}
    return _ind(v.m + w.m, r) + _ind(v.m - w.m, r)


def _tensor_seg(v: Seg, w: Seg) -> WDRep:
    # Clebsch-Gordan: Sp(a) (x) Sp(b) = sum_k Sp(a+b-1-2k); the k-th summand's
    # top end sits k steps below the product of the top ends
    chi = _char_product(v.char, w.char)
    start = 1 if mutations.active(mutations.DROP_CG_TOP) else 0
    parts = []
    for k in range(start, min(v.length, w.length)):
        if isinstance(chi, Unram):
            top = Unram(chi.c - k, chi.zeta)
        else:
            top = Ramified(chi.c - k)
        parts.append(Seg(top, v.length + w.length - 1 - 2 * k))
    return WDRep(tuple(parts))


def tensor(V: WDRep, W: WDRep) -> WDRep:
    out = WDRep()
    for v in V.parts:
        for w in W.parts:
            out = out + _tensor_pair(v, w)
    return out


def dual_wd(V: WDRep) -> WDRep:
    parts = []
    for v in V.parts:
        if isinstance(v, RDim1):
            parts.append(RDim1(v.m, -v.r))
        elif isinstance(v, RDim2):
            parts.append(RDim2(v.m, -v.r))
        elif isinstance(v, CDim1):
            parts.append(CDim1(-v.m, -v.r))
        else:
            shift = v.length - 1
            ch = v.char
            if isinstance(ch, Unram):
                parts.append(Seg(Unram(shift - ch.c, ch.zeta.inverse()), v.length))
            else:
                parts.append(Seg(Ramified(shift - ch.c), v.length))
    return WDRep(tuple(parts))


def indec_lfactor(v: Indec) -> LFactor:
    if isinstance(v, RDim1):
        return LFactor.of(GammaR(v.r + v.m))
    if isinstance(v, (RDim2, CDim1)):
        return LFactor.of(GammaC(v.r + Fraction(abs(v.m), 2)))
    if isinstance(v.char, Unram):
        return LFactor.of(Euler(v.char.c, v.char.zeta))
    return ONE_FACTOR


def wd_lfactor(V: WDRep) -> LFactor:
    return product(indec_lfactor(v) for v in V.parts)


def rs_lfactor(rho1, rho2) -> LFactor:
    """Rankin-Selberg L(s, rho1 x rho2), multiplied over block pairs.

    A pair involving an opaque block contributes 1 and sets
    ``opaque_degraded`` on the result.
    """
    p1, p2 = as_product(rho1), as_product(rho2)
    if p1.field is not p2.field:
        raise FieldMismatch(f"cannot pair {p1.field.name} with {p2.field.name} parameters")
    factors = []
    for b1 in p1.blocks:
        for b2 in p2.blocks:
            if is_opaque(b1) or is_opaque(b2):
                factors.append(LFactor(opaque_degraded=True))
            else:
                factors.append(wd_lfactor(tensor(to_wd(b1), to_wd(b2))))
    return product(factors)
