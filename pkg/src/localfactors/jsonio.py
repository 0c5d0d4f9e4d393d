"""Versioned JSON documents for command output.

Rationals are written as strings ``"p/q"`` (``"p"`` for integers) so that
round trips are exact. Schema, version 1::

    {"version": 1, "command": str, "input": [str, ...],
     "lfactor": [{"atom": ATOM, "mult": int}] | null,
     "poles": [{"s": "p/q", "order": int}],
     "pole_report": POLE_REPORT | null,
     "certificate": {"certified": bool, "reason": str,
                     "sigma": POLE_REPORT, "dual": POLE_REPORT} | null,
     "verdict": str | null,
     "flags": [str]}

    ATOM        = {"kind": "GAMMA_R" | "GAMMA_C", "mu": CQ}
                | {"kind": "EULER", "c": QQ, "zeta": "j/k"}
    POLE_REPORT = {"s": QQ, "order": int,
                   "contributors": [{"atom": ATOM, "mult": int}],
                   "opaque_degraded": bool}

Sweep output is a separate document, see :func:`sweep_document`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .grammar import parse_cq
from .lfactor import Euler, GammaC, GammaR, LFactor
from .parameters import RootOfUnity
from .predicates import PoleReport, ThetaCertificate

VERSION = 1
OPAQUE_FLAG = "opaque-degraded"


def atom_to_json(a) -> dict:
    if isinstance(a, Euler):
        return {"kind": "EULER", "c": str(a.c), "zeta": str(a.zeta.fraction)}
    kind = "GAMMA_R" if isinstance(a, GammaR) else "GAMMA_C"
    return {"kind": kind, "mu": str(a.mu)}


def atom_from_json(d: dict):
    kind = d["kind"]
    if kind == "EULER":
        return Euler(Fraction(d["c"]), RootOfUnity.from_fraction(Fraction(d["zeta"])))
    if kind == "GAMMA_R":
        return GammaR(parse_cq(d["mu"]))
    if kind == "GAMMA_C":
        return GammaC(parse_cq(d["mu"]))
    raise ValueError(f"unknown atom kind {kind!r}")


def _mults_to_json(pairs) -> list:
    return [{"atom": atom_to_json(a), "mult": k} for a, k in pairs]


def _mults_from_json(items) -> tuple:
    return tuple((atom_from_json(d["atom"]), d["mult"]) for d in items)


def pole_report_to_json(p: PoleReport) -> dict:
    return {
        "s": str(p.s0),
        "order": p.order,
        "contributors": _mults_to_json(p.contributors),
        "opaque_degraded": p.opaque_degraded,
    }


def pole_report_from_json(d: dict) -> PoleReport:
    return PoleReport(Fraction(d["s"]), d["order"], _mults_from_json(d["contributors"]),
                      d["opaque_degraded"])


def certificate_to_json(c: ThetaCertificate) -> dict:
    return {
        "certified": c.certified,
        "reason": c.reason,
        "sigma": pole_report_to_json(c.sigma_pole_at_half),
        "dual": pole_report_to_json(c.dual_pole_at_half),
    }


def certificate_from_json(d: dict) -> ThetaCertificate:
    return ThetaCertificate(pole_report_from_json(d["sigma"]), pole_report_from_json(d["dual"]),
                            d["certified"], d["reason"])


@dataclass(frozen=True)
class JsonReport:
    command: str
    input: tuple
    lfactor: LFactor | None = None
    poles: tuple = ()
    pole_report: PoleReport | None = None
    certificate: ThetaCertificate | None = None
    verdict: str | None = None
    flags: tuple = ()

    def to_dict(self) -> dict:
        return {
            "version": VERSION,
            "command": self.command,
            "input": list(self.input),
            "lfactor": None if self.lfactor is None else _mults_to_json(self.lfactor.atoms),
            "poles": [{"s": str(s), "order": k} for s, k in self.poles],
            "pole_report": None if self.pole_report is None else pole_report_to_json(self.pole_report),
            "certificate": None if self.certificate is None else certificate_to_json(self.certificate),
            "verdict": self.verdict,
            "flags": list(self.flags),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> JsonReport:
        if d.get("version") != VERSION:
            raise ValueError(f"unsupported report version {d.get('version')!r}")
        flags = tuple(d["flags"])
        lf = None
        if d["lfactor"] is not None:
            lf = LFactor(_mults_from_json(d["lfactor"]), OPAQUE_FLAG in flags)
        return cls(
            command=d["command"],
            input=tuple(d["input"]),
            lfactor=lf,
            poles=tuple((Fraction(p["s"]), p["order"]) for p in d["poles"]),
            pole_report=None if d["pole_report"] is None else pole_report_from_json(d["pole_report"]),
            certificate=None if d["certificate"] is None else certificate_from_json(d["certificate"]),
            verdict=d["verdict"],
            flags=flags,
        )

    @classmethod
    def loads(cls, text: str) -> JsonReport:
        return cls.from_dict(json.loads(text))


def sweep_document(prop: str, reports, timing: bool = True) -> dict:
    return {
        "version": VERSION,
        "command": "sweep",
        "property": prop,
        "verdict": "FAIL" if any(r.counterexamples for r in reports) else "PASS",
        "reports": [r.to_json(timing) for r in reports],
    }
