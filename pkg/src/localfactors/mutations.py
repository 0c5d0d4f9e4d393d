"""Deliberate rule corruptions used to check that the sweeps can fail.

Each mutation name switches one rule in the core modules to a wrong variant.
They are only ever enabled inside :func:`mutated`; nothing in the library
turns them on by itself.
"""

from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar

DROP_CG_TOP = "drop-cg-top"
FLIP_REAL_DUAL = "flip-real-dual"
GAMMA_R_OFF_BY_ONE = "gamma-r-off-by-one"

ALL = (DROP_CG_TOP, FLIP_REAL_DUAL, GAMMA_R_OFF_BY_ONE)

_active: ContextVar[frozenset] = ContextVar("localfactors_mutations", default=frozenset())


def active(name: str) -> bool:
    return name in _active.get()


def current() -> frozenset:
    return _active.get()


def set_active(names) -> None:
    """Install a mutation set for the rest of this context (worker initializer)."""
    _check(names)
    _active.set(frozenset(names))


def _check(names):
    unknown = set(names) - set(ALL)
    if unknown:
        raise ValueError(f"unknown mutation(s): {sorted(unknown)}")


@contextmanager
def mutated(*names: str):
    _check(names)
    token = _active.set(_active.get() | frozenset(names))
    try:
        yield
    finally:
        _active.reset(token)
