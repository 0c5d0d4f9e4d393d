"""Formal L-factors: finite products of gamma and Euler atoms.

Atoms store the total shift of ``s``:

* ``GammaR(mu)``  = pi^(-(s+mu)/2) Gamma((s+mu)/2)
* ``GammaC(mu)``  = 2 (2 pi)^(-(s+mu)) Gamma(s+mu)
* ``Euler(c, z)`` = (1 - z q^(-(s+c)))^(-1)

Local L-factors have no zeros, so the pole order at a point is just the
number of atoms (with multiplicity) whose pole lattice contains it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import mutations
from .parameters import (
    CQ,
    ONE,
    ArchChar,
    ArchInduced,
    Field,
    Opaque,
    Ramified,
    RootOfUnity,
    Segment,
    Unram,
    as_product,
    qq,
)


@dataclass(frozen=True)
class GammaR:
    mu: CQ

    def __post_init__(self):
        object.__setattr__(self, "mu", CQ.of(self.mu))


@dataclass(frozen=True)
class GammaC:
    mu: CQ

    def __post_init__(self):
        object.__setattr__(self, "mu", CQ.of(self.mu))


@dataclass(frozen=True)
class Euler:
    c: Fraction
    zeta: RootOfUnity = ONE

    def __post_init__(self):
        object.__setattr__(self, "c", qq(self.c))


Atom = Union[GammaR, GammaC, Euler]

_KIND_ORDER = {GammaR: 0, GammaC: 1, Euler: 2}


def atom_key(a: Atom):
    if isinstance(a, Euler):
        return (2, a.c, Fraction(0), a.zeta.fraction)
    return (_KIND_ORDER[type(a)], a.mu.re, a.mu.im, Fraction(0))


def atom_str(a: Atom) -> str:
    if isinstance(a, Euler):
        arg = _shifted("s", a.c)
        if a.zeta.is_one:
            return f"Euler({arg})"
        return f"Euler({arg}; zeta={a.zeta.j}/{a.zeta.k})"
    name = "GammaR" if isinstance(a, GammaR) else "GammaC"
    return f"{name}({_shifted('s', a.mu)})"


def _shifted(var, shift) -> str:
    shift = CQ.of(shift)
    if shift == CQ(0):
        return var
    if shift.is_real:
        sign = "-" if shift.re < 0 else "+"
        return f"{var} {sign} {abs(shift.re)}"
    return f"{var} + ({shift})"


@dataclass(frozen=True)
class LFactor:
    """Multiset of atoms; the empty product is the constant 1.

    ``opaque_degraded`` marks factors that silently treated an opaque
    cuspidal as contributing 1.
    """

    atoms: tuple = ()
    opaque_degraded: bool = False

    def __post_init__(self):
        counts = Counter()
        for atom, mult in self.atoms:
            if mult < 1:
                raise ValueError(f"multiplicity must be positive, got {mult}")
            counts[atom] += mult
        object.__setattr__(self, "atoms", tuple(sorted(counts.items(), key=lambda am: atom_key(am[0]))))

    @classmethod
    def of(cls, *atoms: Atom, opaque_degraded: bool = False) -> LFactor:
        return cls(tuple((a, 1) for a in atoms), opaque_degraded)

    def multiplicity(self, atom: Atom) -> int:
        return dict(self.atoms).get(atom, 0)

    @property
    def is_one(self) -> bool:
        return not self.atoms

    def __mul__(self, other: LFactor) -> LFactor:
        return multiply(self, other)

    def __str__(self):
        if not self.atoms:
            return "1"
        parts = [atom_str(a) + (f"^{k}" if k > 1 else "") for a, k in self.atoms]
        return " * ".join(parts)


ONE_FACTOR = LFactor()


def multiply(l1: LFactor, l2: LFactor) -> LFactor:
    return LFactor(l1.atoms + l2.atoms, l1.opaque_degraded or l2.opaque_degraded)


def product(factors) -> LFactor:
    out = ONE_FACTOR
    for f in factors:
        out = multiply(out, f)
    return out


def shift_atom(a: Atom, t) -> Atom:
    t = qq(t)
    if isinstance(a, Euler):
        return Euler(a.c + t, a.zeta)
    return type(a)(a.mu + t)


def shift(L: LFactor, t) -> LFactor:
    """Substitute s -> s + t."""
    return LFactor(tuple((shift_atom(a, t), k) for a, k in L.atoms), L.opaque_degraded)


def _gamma_step(a: Atom) -> int:
    return 2 if isinstance(a, GammaR) else 1


def atom_has_pole(a: Atom, s0) -> bool:
    s0 = qq(s0)
    if isinstance(a, Euler):
        return a.zeta.is_one and s0 + a.c == 0
    if not a.mu.is_real:
        return False
    x = s0 + a.mu.re
    if isinstance(a, GammaR) and mutations.active(mutations.GAMMA_R_OFF_BY_ONE):
        x += 1
    step = _gamma_step(a)
    return x <= 0 and x.denominator == 1 and x.numerator % step == 0


def contributors(L: LFactor, s0) -> list:
    return [(a, k) for a, k in L.atoms if atom_has_pole(a, s0)]


def pole_order(L: LFactor, s0) -> int:
    return sum(k for _, k in contributors(L, s0))


def poles_in_window(L: LFactor, lo, hi) -> list:
    """All real poles s0 with lo <= s0 <= hi, as sorted (s0, order) pairs."""
    lo, hi = qq(lo), qq(hi)
    candidates = set()
    for a, _ in L.atoms:
        if isinstance(a, Euler):
            if a.zeta.is_one:
                candidates.add(-a.c)
            continue
        if not a.mu.is_real:
            continue
        # every integer step below -mu; pole_order filters the lattice
        s = -a.mu.re + 1
        while s >= lo:
            candidates.add(s)
            s -= 1
    out = []
    for s in sorted(candidates):
        if lo <= s <= hi:
            order = pole_order(L, s)
            if order:
                out.append((s, order))
    return out


def _block_lfactor(b) -> LFactor:
    if isinstance(b, ArchChar):
        if b.field is Field.REAL:
            return LFactor.of(GammaR(b.r + b.m))
        return LFactor.of(GammaC(b.r + Fraction(abs(b.m), 2)))
    if isinstance(b, ArchInduced):
        return LFactor.of(GammaC(b.r + Fraction(abs(b.m), 2)))
    if isinstance(b, Segment):
        base = b.base
        if isinstance(base, Unram):
            # L(s, sigma_{n,tau}) = L(s, tau) with tau the top end
            return LFactor.of(Euler(base.c, base.zeta))
        if isinstance(base, Ramified):
            return ONE_FACTOR
        if isinstance(base, Opaque):
            return LFactor(opaque_degraded=True)
    raise TypeError(f"not a block: {b!r}")


def gj_lfactor(rho) -> LFactor:
    """Godement-Jacquet L-factor of a block or a product of blocks."""
    return product(_block_lfactor(b) for b in as_product(rho).blocks)
