"""Example surfaces built from closed-form characteristic-class formulas."""

from __future__ import annotations

import warnings
from math import comb

from .errors import BranchTooSmall, DegreeTooSmall, IntegralityWarning, OutOfConstructedRange
from .surface import KodairaDim, MinimalSurfaceSpec, Spin

CHEN_THRESHOLD = 17_000_000


def hypersurface(d: int) -> MinimalSurfaceSpec:
    """Smooth surface of degree ``d`` in CP3.

    K = (d - 4)H, so c1^2 = d(d - 4)^2 and c2 = d(d^2 - 4d + 6).
    """
    if d < 4:
        raise DegreeTooSmall(f"hypersurface degree must be >= 4, got {d}")
    general = d >= 5
    return MinimalSurfaceSpec(
        name=f"hypersurface({d})",
        c1_squared=d * (d - 4) ** 2,
        euler=d * (d * d - 4 * d + 6),
        p_g=comb(d - 1, 3),
        simply_connected=True,
        kodaira_dim=KodairaDim.Two if general else KodairaDim.Zero,
        has_nonzero_sw=True,
        ample_canonical=general,
        spin=Spin.Yes if d % 2 == 0 else Spin.No,
    )


def k3() -> MinimalSurfaceSpec:
    return hypersurface(4)


def horikawa(a: int, b: int) -> MinimalSurfaceSpec:
    """Double cover of CP1 x CP1 branched over a smooth curve of bidegree (2a, 2b).

    With L = (a, b) and K_Q = (-2, -2) on the quadric Q:
    c1^2 = 2(K_Q + L)^2 = 4(a - 2)(b - 2) and chi_h = 2 + L.(L + K_Q)/2 = 2 + ab - a - b.
    """
    if a < 3 or b < 3:
        raise BranchTooSmall(f"branch bidegree (2a, 2b) needs a, b >= 3, got ({a}, {b})")
    c1sq = 4 * (a - 2) * (b - 2)
    chi_h = 2 + a * b - a - b
    euler = 12 * chi_h - c1sq
    tau = (c1sq - 2 * euler) // 3
    if a % 2 == 0 and b % 2 == 0:
        # K = pullback of (a-2, b-2), an even class
        spin = Spin.Yes
    elif tau % 16:
        spin = Spin.No
    else:
        spin = Spin.Unknown
    return MinimalSurfaceSpec(
        name=f"horikawa({a},{b})",
        c1_squared=c1sq,
        euler=euler,
        p_g=chi_h - 1,
        simply_connected=True,
        kodaira_dim=KodairaDim.Two,
        has_nonzero_sw=True,
        ample_canonical=True,
        spin=spin,
    )


def chen_surface(m: int) -> MinimalSurfaceSpec:
    """Simply connected minimal surface of general type with tau = m, chi = 4m.

    Only even ``m`` above 17 million are accepted.  Noether's formula needs
    m = 0 (mod 4); for m = 2 (mod 4) an :class:`IntegralityWarning` is issued
    and ``p_g`` is left undetermined.
    """
    if m % 2 or m <= CHEN_THRESHOLD:
        raise OutOfConstructedRange(f"Chen surfaces need an even m > {CHEN_THRESHOLD:,}, got {m:,}")
    c1sq = 11 * m
    euler = 4 * m
    if (c1sq + euler) % 12:
        warnings.warn(
            f"chen_surface({m}): c1^2 + chi = 15m is not divisible by 12 unless m = 0 (mod 4)",
            IntegralityWarning,
            stacklevel=2,
        )
        p_g = None
    else:
        p_g = (c1sq + euler) // 12 - 1
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegralityWarning)
        return MinimalSurfaceSpec(
            name=f"chen({m})",
            c1_squared=c1sq,
            euler=euler,
            p_g=p_g,
            simply_connected=True,
            kodaira_dim=KodairaDim.Two,
            has_nonzero_sw=True,
            ample_canonical=False,
            spin=Spin.No if m % 16 else Spin.Unknown,
        )


# name -> (constructor, parameter names, defaults)
CATALOG = {
    "hypersurface": (hypersurface, ("d",), {"d": 6}),
    "k3": (k3, (), {}),
    "horikawa": (horikawa, ("a", "b"), {"a": 3, "b": 6}),
    "chen": (chen_surface, ("m",), {"m": 18_000_000}),
}


def build(name: str, **params) -> MinimalSurfaceSpec:
    """Look up a catalog constructor by name, filling unspecified parameters with defaults."""
    try:
        ctor, names, defaults = CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; choose from {sorted(CATALOG)}") from None
    args = [params.get(p) if params.get(p) is not None else defaults[p] for p in names]
    return ctor(*args)
