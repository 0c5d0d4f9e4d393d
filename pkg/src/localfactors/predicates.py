"""Pole tests, theta-lift certificates and reducibility of induced products."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .lfactor import LFactor, contributors, gj_lfactor
from .parameters import FieldMismatch, as_product, dual, exponent_e, is_opaque, qq
from .tensor import rs_lfactor

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class PoleReport:
    s0: Fraction
    order: int
    contributors: tuple = ()
    opaque_degraded: bool = False

    def __post_init__(self):
        if self.order != sum(k for _, k in self.contributors):
            raise ValueError("pole order must equal the contributor multiplicities")


def pole_report(L: LFactor, s0) -> PoleReport:
    s0 = qq(s0)
    contrib = tuple(contributors(L, s0))
    return PoleReport(s0, sum(k for _, k in contrib), contrib, L.opaque_degraded)


def has_pole_at_half(rho) -> PoleReport:
    return pole_report(gj_lfactor(rho), HALF)


@dataclass(frozen=True)
class ThetaCertificate:
    sigma_pole_at_half: PoleReport
    dual_pole_at_half: PoleReport
    certified: bool
    reason: str

    def __post_init__(self):
        expected = self.sigma_pole_at_half.order == 0 or self.dual_pole_at_half.order == 0
        if self.certified != expected:
            raise ValueError("certified must reflect the two pole orders")


def theta_certificate(rho) -> ThetaCertificate:
    """Certify Theta_1(sigma) = sigma^vee = Theta_2(sigma) when one side has no pole at 1/2.

    An uncertified result means the criterion is inconclusive; it never
    asserts that the theta lift is reducible.
    """
    rho = as_product(rho)
    mine = has_pole_at_half(rho)
    theirs = has_pole_at_half(dual(rho))
    if mine.order == 0:
        reason = "sigma side has no pole at 1/2"
    elif theirs.order == 0:
        reason = "dual side has no pole at 1/2"
    else:
        reason = (
            f"inconclusive: L(s, sigma) has a pole of order {mine.order} and "
            f"L(s, sigma^vee) a pole of order {theirs.order} at 1/2"
        )
    certified = mine.order == 0 or theirs.order == 0
    if certified:
        reason += "; no-pole-at-1/2 criterion gives Theta_1(sigma) = sigma^vee = Theta_2(sigma)"
    if mine.opaque_degraded or theirs.opaque_degraded:
        reason += " [opaque blocks treated as L = 1]"
    return ThetaCertificate(mine, theirs, certified, reason)


def _oriented(b1, b2) -> bool:
    # L(s, b1^vee x b2) has a pole at 1 and e(b1) >= e(b2)
    if exponent_e(b1) < exponent_e(b2):
        return False
    return any(True for _ in contributors(rs_lfactor(dual(b1), b2), 1))


def pair_reducible(b1, b2) -> bool:
    """Whether b1 x b2 is reducible, by the Rankin-Selberg pole-at-1 criterion.

    Both orientations are checked since reducibility does not depend on the
    order of the factors. Pairs involving an opaque block report False.
    """
    if b1.field is not b2.field:
        raise FieldMismatch("blocks over different fields")
    if is_opaque(b1) or is_opaque(b2):
        return False
    return _oriented(b1, b2) or _oriented(b2, b1)


def is_irreducible_product(rho) -> bool:
    """Irreducible iff no pair of blocks is reducible (pairwise criterion)."""
    blocks = as_product(rho).blocks
    return not any(pair_reducible(a, b) for a, b in combinations(blocks, 2))
