"""Exact local L-factors for GL_n: parameters, Rankin-Selberg tensor calculus,
pole predicates and theta-lift irreducibility certificates."""

from .grammar import format_rep, parse
from .lfactor import LFactor, gj_lfactor, multiply, pole_order, shift
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
    canonicalize,
    dual,
    exponent_e,
    twist,
)
from .predicates import has_pole_at_half, is_irreducible_product, pair_reducible, theta_certificate
from .tensor import rs_lfactor, tensor, to_wd

__version__ = "0.1.0"
