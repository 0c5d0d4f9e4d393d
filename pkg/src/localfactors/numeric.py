"""Floating-point evaluation of L-factor atoms and the GL_1(R) zeta integral.

This is an independent numerical check on the exact layer: atom values, the
duplication identity Gamma_C(s) = Gamma_R(s) Gamma_R(s+1), and the Tate
integral whose closed form is a Gamma_R atom.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import loggamma

from .lfactor import Euler, GammaC, GammaR

POLE_GUARD = 1e-8


class NearPoleError(ValueError):
    """Raised when evaluating closer than POLE_GUARD to a pole."""


class ConvergenceError(ValueError):
    """Raised for zeta integrals outside their domain of convergence."""


def _checked(z) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite complex value {z!r}")
    return z


def _gamma_pole_distance(w: complex, step: int) -> float:
    # poles of Gamma(w/step) sit at w = 0, -step, -2 step, ...
    k = max(0, round(-w.real / step))
    return abs(w + k * step)


def eval_atom(atom, s, q: float | None = None) -> complex:
    """Value of an atom at complex s (q > 1 is required for Euler atoms)."""
    s = _checked(s)
    if isinstance(atom, Euler):
        if q is None or not q > 1:
            raise ValueError("Euler atoms need a residue field size q > 1")
        w = s + float(atom.c)
        # 1 - zeta q^-w vanishes on Re w = 0, Im w log q = 2 pi (j/k - n)
        period = 2 * math.pi / math.log(q)
        offset = float(atom.zeta.fraction) * period
        n = round((offset - w.imag) / period)
        dist = abs(complex(w.real, w.imag - offset + n * period))
        if dist < POLE_GUARD:
            raise NearPoleError(f"{atom} evaluated within {dist:.3g} of a pole")
        zeta = cmath.exp(2j * math.pi * float(atom.zeta.fraction))
        return _checked(1 / (1 - zeta * q ** (-w)))
    w = s + complex(atom.mu)
    if isinstance(atom, GammaR):
        if _gamma_pole_distance(w, 2) < POLE_GUARD:
            raise NearPoleError(f"{atom} evaluated near a pole at s={s}")
        return _checked(cmath.exp(-w / 2 * math.log(math.pi) + complex(loggamma(w / 2))))
    if isinstance(atom, GammaC):
        if _gamma_pole_distance(w, 1) < POLE_GUARD:
            raise NearPoleError(f"{atom} evaluated near a pole at s={s}")
        return _checked(2 * cmath.exp(-w * math.log(2 * math.pi) + complex(loggamma(w))))
    raise TypeError(f"not an atom: {atom!r}")


def eval_lfactor(L, s, q: float | None = None) -> complex:
    out = 1 + 0j
    for atom, k in L.atoms:
        out *= eval_atom(atom, s, q) ** k
    return out


def duplication_points(n: int) -> list:
    """n deterministic points in [0.2, 3] x [-2, 2]i (golden-ratio lattice)."""
    if n < 1:
        raise ValueError("need at least one sample point")
    phi = (math.sqrt(5) - 1) / 2
    pts = []
    for i in range(n):
        u = (i + 0.5) / n
        v = (0.5 + i * phi) % 1.0
        pts.append(complex(0.2 + 2.8 * u, -2 + 4 * v))
    return pts


def duplication_error(s) -> float:
    lhs = eval_atom(GammaC(0), s)
    rhs = eval_atom(GammaR(0), s) * eval_atom(GammaR(1), s)
    return abs(lhs - rhs) / abs(lhs)


def check_duplication(n: int = 20) -> float:
    """Max relative error of Gamma_C(s) vs Gamma_R(s) Gamma_R(s+1) over n points."""
    return max(duplication_error(s) for s in duplication_points(n))


@dataclass(frozen=True)
class QuadratureSpec:
    """Composite Simpson rule in x = e^t on [epsilon, cutoff].

    The piece [0, epsilon] is added from the series of exp(-pi x^2),
    epsilon^a/a - pi epsilon^(a+2)/(a+2) with a = s + m.
    """

    cutoff: float = 6.0
    nodes: int = 20000
    epsilon: float = 1e-12
    scheme: str = "simpson-log"

    def __post_init__(self):
        if not (self.cutoff > 0 and self.nodes > 0 and 0 < self.epsilon < self.cutoff):
            raise ValueError("cutoff, epsilon and node count must be positive")
        if self.scheme != "simpson-log":
            raise ValueError(f"unknown quadrature scheme {self.scheme!r}")


def tate_integral(m: int, s, spec: QuadratureSpec = QuadratureSpec()) -> complex:
    """Integral over R^x of x^m exp(-pi x^2) sgn(x)^m |x|^s dx/|x|.

    Exact value: pi^(-(s+m)/2) Gamma((s+m)/2), i.e. GammaR(m) at s.
    """
    if m not in (0, 1):
        raise ValueError("m must be 0 or 1")
    s = _checked(s)
    if s.real <= 0:
        raise ConvergenceError(f"zeta integral diverges for Re(s) = {s.real} <= 0")
    a = s + m
    # x^m sgn(x)^m = |x|^m, so the integrand is even: 2 * int_0^inf
    n = _even(spec.nodes)
    t = np.linspace(math.log(spec.epsilon), math.log(spec.cutoff), n + 1)
    f = np.exp(a * t - math.pi * np.exp(2 * t))
    w = np.full(n + 1, 2.0)
    w[1::2] = 4.0
    w[0] = w[-1] = 1.0
    h = (t[-1] - t[0]) / n
    body = h / 3 * np.sum(w * f)
    eps = spec.epsilon
    head = eps**a / a - math.pi * eps ** (a + 2) / (a + 2)
    return _checked(2 * (body + head))


def _even(n: int) -> int:
    return n if n % 2 == 0 else n + 1
