"""Einstein-metric verdicts from Hitchin-Thorpe and the Seiberg-Witten thresholds."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .errors import NoSWHypothesis
from .surface import FourManifold, KodairaDim, invariants_of


class Verdict(enum.Enum):
    ObstructedHitchinThorpe = "ObstructedHitchinThorpe"
    ObstructedSW = "ObstructedSW"
    ObstructedSWASDOnly = "ObstructedSWASDOnly"
    AdmitsKE = "AdmitsKE"
    Undetermined = "Undetermined"


@dataclass(frozen=True)
class HitchinThorpe:
    passes: bool
    strict: bool


@dataclass(frozen=True)
class EinsteinVerdict:
    verdict: Verdict
    witness: dict[str, Any]
    annotations: tuple[Verdict, ...] = field(default=())

    def summary(self) -> str:
        w = self.witness
        if self.verdict is Verdict.ObstructedSW:
            return f"ObstructedSW ({w['k_plus_4l']} >= {w['two_chi_plus_3tau_X']}/3)"
        if self.verdict is Verdict.ObstructedHitchinThorpe:
            return f"ObstructedHitchinThorpe (2chi = {w['two_chi']} < 3|tau| = {w['three_abs_tau']})"
        text = self.verdict.value
        if Verdict.ObstructedSWASDOnly in self.annotations:
            text += f" [ObstructedSWASDOnly: {w['k_plus_4l']} >= {w['two_chi_plus_3tau_X']}/4]"
        return text

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "annotations": [a.value for a in self.annotations],
            "witness": self.witness,
        }


def hitchin_thorpe(m: FourManifold) -> HitchinThorpe:
    inv = invariants_of(m)
    lhs, rhs = 2 * inv.chi, 3 * abs(inv.tau)
    return HitchinThorpe(passes=lhs >= rhs, strict=lhs > rhs)


def _sw_threshold(m: FourManifold, denominator: int) -> bool:
    X = m.minimal_model
    if not X.has_nonzero_sw:
        raise NoSWHypothesis(f"{X.name} is not flagged with a non-trivial Seiberg-Witten invariant")
    top = 2 * X.euler + 3 * X.signature
    handles = m.k + 4 * m.l
    # with k = l = 0 and (2chi+3tau)(X) = 0 the bound is an equality and
    # excludes nothing (K3 is Ricci-flat)
    if handles == 0 and top == 0:
        return False
    return denominator * handles >= top


def sw_einstein_obstruction(m: FourManifold) -> bool:
    """True when k + 4l >= (2chi + 3tau)(X)/3, compared exactly as 3(k + 4l) >= (2chi + 3tau)(X)."""
    return _sw_threshold(m, 3)


def asd_einstein_obstruction(m: FourManifold) -> bool:
    """True when k + 4l >= (2chi + 3tau)(X)/4: no anti-self-dual Einstein metric."""
    return _sw_threshold(m, 4)


def classify(m: FourManifold) -> EinsteinVerdict:
    X = m.minimal_model
    inv = invariants_of(m)
    top = 2 * X.euler + 3 * X.signature
    witness: dict[str, Any] = {
        "manifold": m.describe(),
        "chi": inv.chi,
        "tau": inv.tau,
        "two_chi": 2 * inv.chi,
        "three_abs_tau": 3 * abs(inv.tau),
        "k": m.k,
        "l": m.l,
        "k_plus_4l": m.k + 4 * m.l,
        "two_chi_plus_3tau_X": top,
        "sw_threshold": str(Fraction(top, 3)),
        "asd_threshold": str(Fraction(top, 4)),
    }
    if not hitchin_thorpe(m).passes:
        return EinsteinVerdict(Verdict.ObstructedHitchinThorpe, witness)
    annotations: tuple[Verdict, ...] = ()
    if X.has_nonzero_sw:
        if sw_einstein_obstruction(m):
            return EinsteinVerdict(Verdict.ObstructedSW, witness)
        if asd_einstein_obstruction(m):
            annotations = (Verdict.ObstructedSWASDOnly,)
    if m.is_minimal and X.kodaira_dim == KodairaDim.Two and X.ample_canonical:
        return EinsteinVerdict(Verdict.AdmitsKE, witness, annotations)
    return EinsteinVerdict(Verdict.Undetermined, witness, annotations)
