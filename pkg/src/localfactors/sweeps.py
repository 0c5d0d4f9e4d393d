"""Exhaustive checks of the pole statements over finite parameter grids.

Three properties are swept:

``pat1``
    If L(s, b1) and L(s, b2) both have a pole at 1/2 then L(s, b1 x b2) has
    a pole at s = 1.
``generic``
    For every irreducible product sigma of grid blocks, L(s, sigma) or
    L(s, sigma^vee) has no pole at 1/2.
``tempered-rs``
    For unitary tempered blocks (exponent 0), L(s, b1 x b2) has no pole at
    any rational s0 > 0 with denominator <= 4 up to 5.

Products are enumerated as multisets of blocks (the L-factor and the
irreducibility test do not depend on the order). Raising ``max_blocks``
from 2 to k costs C(B + k - 1, k) products for B grid blocks.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import gcd

from . import mutations
from .grammar import format_block, format_rep
from .lfactor import pole_order
from .parameters import (
    CQ,
    ArchChar,
    ArchInduced,
    Field,
    Opaque,
    Ramified,
    RepProduct,
    RootOfUnity,
    Segment,
    Unram,
    dual,
    exponent_e,
    is_opaque,
)
from .predicates import has_pole_at_half, is_irreducible_product, pole_report
from .tensor import rs_lfactor

PROPERTIES = ("pat1", "generic", "tempered-rs")


def half_integers(lo=-3, hi=3) -> tuple:
    return tuple(Fraction(k, 2) for k in range(2 * lo, 2 * hi + 1))


def positive_test_points(max_den: int = 4, upto: int = 5) -> tuple:
    pts = {Fraction(p, q) for q in range(1, max_den + 1) for p in range(1, upto * q + 1)}
    return tuple(sorted(pts))


@dataclass(frozen=True)
class GridSpec:
    field: Field
    m_range: tuple = (-3, 3)
    r_values: tuple = tuple(CQ(x) for x in half_integers())
    c_values: tuple = half_integers()
    zeta_orders: tuple = (1, 2)
    max_length: int = 4
    max_blocks: int = 2
    ramified: bool = False
    opaque_degrees: tuple = ()

    def __post_init__(self):
        lo, hi = self.m_range
        if lo > hi or not self.r_values or not self.c_values or not self.zeta_orders:
            raise ValueError("grid ranges must be finite and nonempty")
        if self.max_length < 1 or self.max_blocks < 1 or min(self.zeta_orders) < 1:
            raise ValueError("lengths, block counts and root orders must be >= 1")
        if any(d < 2 for d in self.opaque_degrees):
            raise ValueError("opaque degrees must be >= 2")
        object.__setattr__(self, "r_values", tuple(sorted({CQ.of(r) for r in self.r_values})))
        object.__setattr__(self, "c_values", tuple(sorted({Fraction(c) for c in self.c_values})))
        object.__setattr__(self, "zeta_orders", tuple(sorted(set(self.zeta_orders))))
        object.__setattr__(self, "opaque_degrees", tuple(sorted(set(self.opaque_degrees))))

    def to_json(self) -> dict:
        return {
            "field": self.field.name,
            "m_range": list(self.m_range),
            "r_values": [str(r) for r in self.r_values],
            "c_values": [str(c) for c in self.c_values],
            "zeta_orders": list(self.zeta_orders),
            "max_length": self.max_length,
            "max_blocks": self.max_blocks,
            "ramified": self.ramified,
            "opaque_degrees": list(self.opaque_degrees),
        }

    @classmethod
    def from_json(cls, d: dict) -> GridSpec:
        from .grammar import parse_cq

        return cls(
            field=Field[d["field"]],
            m_range=tuple(d["m_range"]),
            r_values=tuple(parse_cq(r) for r in d["r_values"]),
            c_values=tuple(Fraction(c) for c in d["c_values"]),
            zeta_orders=tuple(d["zeta_orders"]),
            max_length=d["max_length"],
            max_blocks=d["max_blocks"],
            ramified=d["ramified"],
            opaque_degrees=tuple(d["opaque_degrees"]),
        )


def default_grids() -> tuple:
    return tuple(GridSpec(f) for f in Field)


def _roots(orders) -> list:
    roots = [RootOfUnity(k, j) for k in orders for j in range(k) if gcd(j, k) == 1]
    return sorted(roots, key=lambda z: z.fraction)


def enumerate_blocks(g: GridSpec):
    """Every canonical block in the grid, once, in lexicographic order."""
    lo, hi = g.m_range
    ms = range(lo, hi + 1)
    if g.field is Field.REAL:
        for m in (m for m in (0, 1) if lo <= m <= hi):
            for r in g.r_values:
                yield ArchChar(Field.REAL, m, r)
        for m in sorted({abs(m) for m in ms if m != 0}):
            for r in g.r_values:
                yield ArchInduced(m, r)
    elif g.field is Field.COMPLEX:
        for m in ms:
            for r in g.r_values:
                yield ArchChar(Field.COMPLEX, m, r)
    else:
        lengths = range(1, g.max_length + 1)
        for c in g.c_values:
            for z in _roots(g.zeta_orders):
                for ell in lengths:
                    yield Segment(Unram(c, z), ell)
        if g.ramified:
            for c in g.c_values:
                for ell in lengths:
                    yield Segment(Ramified(c), ell)
        for d in g.opaque_degrees:
            for e in g.c_values:
                for ell in lengths:
                    yield Segment(Opaque(d, e), ell)


@dataclass(frozen=True)
class SweepReport:
    property: str
    grid: GridSpec
    cases: int
    skipped: int
    degraded: int
    counterexamples: tuple = ()
    wall_time: float | None = field(default=None, compare=False)

    @property
    def verdict(self) -> str:
        return "FAIL" if self.counterexamples else "PASS"

    def to_json(self, timing: bool = True) -> dict:
        return {
            "property": self.property,
            "grid": self.grid.to_json(),
            "verdict": self.verdict,
            "cases": self.cases,
            "skipped": self.skipped,
            "degraded": self.degraded,
            "counterexamples": [dict(c) for c in self.counterexamples],
            "wall_time": self.wall_time if timing else None,
        }

    @classmethod
    def from_json(cls, d: dict) -> SweepReport:
        return cls(
            property=d["property"],
            grid=GridSpec.from_json(d["grid"]),
            cases=d["cases"],
            skipped=d["skipped"],
            degraded=d["degraded"],
            counterexamples=tuple(_freeze(c) for c in d["counterexamples"]),
            wall_time=d.get("wall_time"),
        )


def _freeze(d: dict):
    return tuple((k, tuple(v) if isinstance(v, list) else v) for k, v in d.items())


def _pole_dump(name, report) -> tuple:
    return (name, f"order {report.order} at s={report.s0}")


# -- per-case checks: each returns (status, counterexample-or-None) ----------
# status: "ok", "skip" or "bad"; degraded cases are counted separately


def _check_pat1(pair):
    b1, b2 = pair
    p1, p2 = has_pole_at_half(b1), has_pole_at_half(b2)
    if p1.order < 1 or p2.order < 1:
        return "skip", None
    rs = pole_report(rs_lfactor(b1, b2), 1)
    if rs.order >= 1:
        return "ok", None
    return "bad", (
        ("blocks", (format_block(b1), format_block(b2))),
        _pole_dump("L(s,b1) at 1/2", p1),
        _pole_dump("L(s,b2) at 1/2", p2),
        _pole_dump("L(s,b1 x b2) at 1", rs),
    )


def _check_generic(blocks):
    rho = RepProduct(blocks)
    if not is_irreducible_product(rho):
        return "skip", None
    mine = has_pole_at_half(rho)
    theirs = has_pole_at_half(dual(rho))
    if mine.order >= 1 and theirs.order >= 1:
        return "bad", (
            ("product", format_rep(rho)),
            _pole_dump("L(s,sigma) at 1/2", mine),
            _pole_dump("L(s,sigma^vee) at 1/2", theirs),
        )
    return "ok", None


_TEMPERED_POINTS = positive_test_points()


def _check_tempered(pair):
    b1, b2 = pair
    L = rs_lfactor(b1, b2)
    bad = [(s, pole_order(L, s)) for s in _TEMPERED_POINTS if pole_order(L, s)]
    if not bad:
        return "ok", None
    return "bad", (
        ("blocks", (format_block(b1), format_block(b2))),
        ("positive poles", tuple(f"order {k} at s={s}" for s, k in bad)),
    )


_CHECKS = {"pat1": _check_pat1, "generic": _check_generic, "tempered-rs": _check_tempered}


def work_list(prop: str, g: GridSpec) -> list:
    blocks = list(enumerate_blocks(g))
    if prop == "pat1":
        return list(product(blocks, repeat=2))
    if prop == "generic":
        cases = []
        for k in range(1, g.max_blocks + 1):
            cases.extend(combinations_with_replacement(blocks, k))
        return cases
    if prop == "tempered-rs":
        tempered = [b for b in blocks if exponent_e(b) == 0]
        return list(product(tempered, repeat=2))
    raise ValueError(f"unknown property {prop!r}; choose from {PROPERTIES}")


def _run_chunk(args):
    prop, chunk = args
    check = _CHECKS[prop]
    return [(check(case), any(is_opaque(b) for b in case)) for case in chunk]


def _init_worker(active):
    mutations.set_active(active)


def run_sweep(prop: str, g: GridSpec, workers: int = 1, chunk_size: int = 2000) -> SweepReport:
    """Check one property over a grid; counterexamples are collected exhaustively."""
    start = time.perf_counter()
    cases = work_list(prop, g)
    chunks = [(prop, cases[i:i + chunk_size]) for i in range(0, len(cases), chunk_size)]
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(workers, initializer=_init_worker,
                                 initargs=(mutations.current(),)) as pool:
            results = [r for part in pool.map(_run_chunk, chunks) for r in part]
    else:
        results = [r for ch in chunks for r in _run_chunk(ch)]
    checked = skipped = degraded = 0
    bad = []
    for (status, cx), opaque in results:
        degraded += opaque
        if status == "skip":
            skipped += 1
            continue
        checked += 1
        if status == "bad":
            bad.append(cx)
    return SweepReport(prop, g, checked, skipped, degraded, tuple(bad),
                       time.perf_counter() - start)


def verify_pat1(g: GridSpec, workers: int = 1) -> SweepReport:
    return run_sweep("pat1", g, workers)


def verify_generic(g: GridSpec, workers: int = 1) -> SweepReport:
    return run_sweep("generic", g, workers)


def verify_tempered_rs(g: GridSpec, workers: int = 1) -> SweepReport:
    return run_sweep("tempered-rs", g, workers)
