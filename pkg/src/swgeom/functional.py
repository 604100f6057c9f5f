"""Infima of curvature functionals and minimal-volume bounds as exact multiples of pi^2."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from numbers import Rational
from typing import Union

from .errors import NoSWHypothesis, NotGeneralType, TOutOfRange, UnsupportedKodairaDim
from .surface import FourManifold, KodairaDim, invariants_of

RationalLike = Union[int, Fraction, str]


@total_ordering
@dataclass(frozen=True)
class PiSquaredRational:
    """The real number ``coefficient * pi**2`` with an exact rational coefficient."""

    coefficient: Fraction

    def __post_init__(self):
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))

    def __add__(self, other):
        if not isinstance(other, PiSquaredRational):
            return NotImplemented
        return PiSquaredRational(self.coefficient + other.coefficient)

    def __sub__(self, other):
        if not isinstance(other, PiSquaredRational):
            return NotImplemented
        return PiSquaredRational(self.coefficient - other.coefficient)

    def __neg__(self):
        return PiSquaredRational(-self.coefficient)

    def __mul__(self, scalar):
        if not isinstance(scalar, Rational):
            return NotImplemented
        return PiSquaredRational(self.coefficient * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, PiSquaredRational):
            return self.coefficient / scalar.coefficient
        if not isinstance(scalar, Rational):
            return NotImplemented
        return PiSquaredRational(self.coefficient / scalar)

    def __lt__(self, other):
        if not isinstance(other, PiSquaredRational):
            return NotImplemented
        return self.coefficient < other.coefficient

    def __float__(self):
        return float(self.coefficient) * math.pi**2

    def exact(self) -> str:
        c = self.coefficient
        if c == 0:
            return "0"
        if c.denominator == 1:
            return f"{c.numerator}*pi^2"
        return f"({c.numerator}/{c.denominator})*pi^2"

    def decimal(self) -> str:
        return f"{float(self):.12g}"

    def __str__(self):
        return self.exact()

    def to_json(self) -> dict:
        return {"pi2_coefficient": str(self.coefficient), "value": float(self)}

    @classmethod
    def from_json(cls, data: dict) -> "PiSquaredRational":
        return cls(Fraction(data["pi2_coefficient"]))


def _pi2(q) -> PiSquaredRational:
    return PiSquaredRational(Fraction(q))


def _require_sw(m: FourManifold):
    if not m.minimal_model.has_nonzero_sw:
        raise NoSWHypothesis(f"{m.minimal_model.name} is not flagged with a non-trivial Seiberg-Witten invariant")


def _require_general_type(m: FourManifold):
    if m.minimal_model.kodaira_dim != KodairaDim.Two:
        raise NotGeneralType(f"{m.minimal_model.name} is not of general type")


def i_s(m: FourManifold) -> PiSquaredRational:
    """inf over metrics of the L2 norm squared of scalar curvature: 32 c1^2(X) pi^2."""
    return _pi2(32 * m.minimal_model.c1_squared)


def i_r(m: FourManifold) -> PiSquaredRational:
    """inf over metrics of the L2 norm squared of Ricci curvature: 8 (c1^2(X) + k + 4l) pi^2."""
    if m.minimal_model.kodaira_dim != KodairaDim.Two and m.l > 0:
        raise UnsupportedKodairaDim("S1 x S3 summands are only covered for minimal models of general type")
    return _pi2(8 * (m.minimal_model.c1_squared + m.k + 4 * m.l))


def yamabe_squared(m: FourManifold) -> tuple[PiSquaredRational, int]:
    """Square of the Yamabe invariant and its sign (-1, or 0 when it vanishes)."""
    y2 = _pi2(32 * m.minimal_model.c1_squared)
    return y2, (-1 if y2.coefficient > 0 else 0)


def vol_s(m: FourManifold) -> PiSquaredRational:
    # (|Y| / 12)^2 = Y^2 / 144
    return _pi2(Fraction(2, 9) * m.minimal_model.c1_squared)


@dataclass(frozen=True)
class VolumeBound:
    value: PiSquaredRational
    exact: bool


def vol_ks_lower(m: FourManifold) -> VolumeBound:
    """Lower bound (9/4) Vol_s for the mixed minimal volume; attained on complex-hyperbolic surfaces."""
    _require_general_type(m)
    exact = m.minimal_model.complex_hyperbolic and m.is_minimal
    return VolumeBound(vol_s(m) * Fraction(9, 4), exact)


def _as_fraction(t: RationalLike) -> Fraction:
    if isinstance(t, float):
        raise TypeError("t must be an exact rational, not a float")
    return Fraction(t)


def mixed_vol_lower(m: FourManifold, t: RationalLike) -> PiSquaredRational:
    """(1 + t)^2 Vol_s for the family t K + (1 - t) s/12 >= -1, with t in [0, 1/2]."""
    t = _as_fraction(t)
    if not 0 <= t <= Fraction(1, 2):
        raise TOutOfRange(f"t = {t} is outside [0, 1/2]; the bound is not known beyond 1/2")
    _require_general_type(m)
    return vol_s(m) * (1 + t) ** 2


@dataclass(frozen=True)
class WeylScalarBounds:
    west: Fraction  # lower bound for (1/4pi^2) int (s^2/24 + 2|W+|^2)
    glove: Fraction  # lower bound for (1/4pi^2) int (s^2/24 + |W+|^2/2)


def weyl_scalar_lower(m: FourManifold) -> WeylScalarBounds:
    _require_sw(m)
    X = m.minimal_model
    if X.c1_squared <= 0:
        raise NoSWHypothesis(f"{X.name}: the Weyl-scalar bounds need c1^2(X) > 0")
    c1plus_sq = invariants_of(m).sw_c1plus_sq_lower
    top = 2 * X.euler + 3 * X.signature
    return WeylScalarBounds(west=Fraction(2, 3) * top, glove=Fraction(1, 2) * c1plus_sq)


def ricci_lower_gb(m: FourManifold) -> PiSquaredRational:
    """8 (2 (c1+)^2 - (2chi + 3tau)(M)) pi^2, with (c1+)^2 bounded below by c1^2(X)."""
    _require_sw(m)
    inv = invariants_of(m)
    c1plus_sq = m.minimal_model.c1_squared
    return _pi2(8 * (2 * c1plus_sq - inv.two_chi_plus_3tau))


def asd_scalar_lower(m: FourManifold) -> PiSquaredRational:
    """Lower bound 72 c1^2(X) pi^2 for the integral of s^2 over an anti-self-dual metric."""
    _require_sw(m)
    return _pi2(72 * m.minimal_model.c1_squared)


def two_sided_vol_lower(m: FourManifold) -> PiSquaredRational:
    """Volume lower bound under -3g <= r <= 3g."""
    return i_r(m) / 36


def riemann_lower(m: FourManifold) -> PiSquaredRational:
    """Lower bound 8 chi(M) pi^2 for the L2 norm squared of the full curvature tensor."""
    return _pi2(8 * invariants_of(m).chi)
