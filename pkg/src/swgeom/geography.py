"""Signature/Euler ratio constructions and homeomorphic pairs with different invariants."""

from __future__ import annotations

import csv
import io
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Union

from .catalog import CHEN_THRESHOLD, chen_surface
from .errors import IntegralityWarning, PreconditionViolation, RatioOutOfRange, ZeroEuler
from .functional import PiSquaredRational, i_r
from .lattice import homeomorphic
from .obstruct import EinsteinVerdict, classify
from .surface import FourManifold, MinimalSurfaceSpec, invariants_of

LOWER_RATIO = Fraction(8, 23)
HT_RATIO = Fraction(2, 3)


@dataclass(frozen=True)
class RatioTarget:
    q: Fraction
    orientation_reversed: bool

    @classmethod
    def of(cls, q) -> "RatioTarget":
        q = Fraction(q)
        return cls(q=q, orientation_reversed=q > 0)


def ratio(m: FourManifold) -> Fraction:
    inv = invariants_of(m)
    if inv.chi == 0:
        raise ZeroEuler(f"chi({m.describe()}) = 0")
    return Fraction(inv.tau, inv.chi)


def blowups_per_unit(q_abs: Fraction) -> Fraction:
    """k/m solving (m - k)/(4m + k) = -|q|, i.e. k/m = 5/(1 - |q|) - 4."""
    return 5 / (1 - q_abs) - 4


def chen_parameters(q_abs: Fraction) -> tuple[int, int]:
    """Least even m above the threshold for which k = m * (k/m) is an integer, and that k."""
    r = blowups_per_unit(q_abs)
    step = lcm(2, r.denominator)
    m = (CHEN_THRESHOLD // step + 1) * step
    return m, int(m * r)


def non_einstein_for_ratio(q: Union[RatioTarget, Fraction, int, str]) -> FourManifold:
    """A blown-up Chen surface with tau/chi = -|q| and no Einstein metric.

    For positive ``q`` the returned manifold is the orientation reversal of
    the answer; the invariants reported for it stay in the complex orientation.
    """
    target = q if isinstance(q, RatioTarget) else RatioTarget.of(q)
    q_abs = abs(target.q)
    if not LOWER_RATIO <= q_abs < 1:
        raise RatioOutOfRange(f"|q| = {q_abs} is outside [8/23, 1)")
    m, k = chen_parameters(q_abs)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegralityWarning)
        X = chen_surface(m)
    return FourManifold(X, k=k)


@dataclass(frozen=True)
class HomeoPair:
    m1: FourManifold
    m2: FourManifold
    homeomorphic: bool
    i_r_gap: PiSquaredRational
    verdicts: tuple[EinsteinVerdict, EinsteinVerdict]


def homeo_pair(x: MinimalSurfaceSpec, x_tilde: MinimalSurfaceSpec, k: int, allow_minimal: bool = False) -> HomeoPair:
    """m1 = x_tilde # k(-CP2) and m2 = x # (j + k)(-CP2), where j = c1^2(x) - c1^2(x_tilde).

    ``allow_minimal`` admits k = 0, which makes m1 minimal.
    """
    if not (x.simply_connected and x_tilde.simply_connected):
        raise PreconditionViolation("both surfaces must be simply connected")
    if x.p_g is None or x.p_g != x_tilde.p_g or x.p_g == 0:
        raise PreconditionViolation(f"need equal nonzero p_g, got {x.p_g} and {x_tilde.p_g}")
    j = x.c1_squared - x_tilde.c1_squared
    if j <= 0:
        raise PreconditionViolation(f"need c1^2(x) > c1^2(x_tilde), got j = {j}")
    if k < 0 or (k == 0 and not allow_minimal):
        raise PreconditionViolation(f"need k >= 1, got k = {k}")
    m1 = FourManifold(x_tilde, k=k)
    m2 = FourManifold(x, k=j + k)
    return HomeoPair(
        m1=m1,
        m2=m2,
        homeomorphic=homeomorphic(m1, m2),
        i_r_gap=i_r(m2) - i_r(m1),
        verdicts=(classify(m1), classify(m2)),
    )


def noether_line_c1sq(p_g: int) -> int:
    """c1^2 = 2 p_g - 4, drawn as a reference line only."""
    return 2 * p_g - 4


CSV_COLUMNS = ("name", "chi", "tau", "c1sq", "b_plus", "b_minus", "verdict")


def _rows(manifolds: Iterable[FourManifold]):
    for m in manifolds:
        inv = invariants_of(m)
        yield {
            "name": m.describe(),
            "chi": inv.chi,
            "tau": inv.tau,
            "c1sq": inv.two_chi_plus_3tau,
            "b_plus": "" if inv.b_plus is None else inv.b_plus,
            "b_minus": "" if inv.b_minus is None else inv.b_minus,
            "verdict": classify(m).verdict.value,
        }


def geography_csv(manifolds: Iterable[FourManifold]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in _rows(manifolds):
        writer.writerow(row)
    return buf.getvalue()


def geography_svg(manifolds: Iterable[FourManifold], title: Optional[str] = None) -> str:
    """Two scatter panels: (chi_h, c1^2) with the Noether line, and (chi, tau) with the
    Hitchin-Thorpe wedge and the window tau/chi in [-1, -8/23]."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    rows = list(_rows(manifolds))
    plt.rcParams["svg.hashsalt"] = "swgeom"
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4.5))
    chis = [r["chi"] for r in rows]
    taus = [r["tau"] for r in rows]
    c1 = [r["c1sq"] for r in rows]
    chi_h = [Fraction(c + x, 12) for c, x in zip(c1, chis)]
    ax1.scatter([float(h) for h in chi_h], c1, s=18)
    hmax = max([float(h) for h in chi_h] + [2.0])
    # Noether line c1^2 = 2 p_g - 4 = 2 chi_h - 6 for q = 0
    ax1.plot([1, hmax], [2 * 1 - 6, 2 * hmax - 6], "k--", lw=0.8, label="Noether line")
    ax1.set_xlabel("chi_h")
    ax1.set_ylabel("c1^2")
    ax1.legend(loc="upper left")
    xmax = max(chis + [4])
    ax2.scatter(chis, taus, s=18)
    ht = 2.0 / 3.0
    ax2.plot([0, xmax], [0, -ht * xmax], "r-", lw=0.8, label="2chi = 3|tau|")
    ax2.plot([0, xmax], [0, ht * xmax], "r-", lw=0.8)
    ax2.fill_between(
        [0, xmax], [0, -xmax], [0, -float(LOWER_RATIO) * xmax], color="C1", alpha=0.15, label="tau/chi in [-1, -8/23]"
    )
    ax2.set_xlabel("chi")
    ax2.set_ylabel("tau")
    ax2.legend(loc="lower left")
    for r, x, y in zip(rows, chis, taus):
        ax2.annotate(r["name"], (x, y), fontsize=6)
    if title:
        fig.suptitle(title)
    buf = io.StringIO()
    fig.savefig(buf, format="svg", metadata={"Date": None})
    plt.close(fig)
    return buf.getvalue()
