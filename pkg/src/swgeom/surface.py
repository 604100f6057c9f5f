"""Minimal complex surfaces and the manifolds X # k(-CP2) # l(S1 x S3) built from them.

All arithmetic here is on integers.  The orientation of every manifold is the
complex orientation of its minimal model; blow-ups are connected sums with the
orientation-reversed projective plane.
"""

from __future__ import annotations

import enum
import json
import warnings
from dataclasses import asdict, dataclass, fields, replace
from typing import Any, Optional

from .errors import IntegralityViolation, IntegralityWarning, SpecValidationError


class KodairaDim(enum.IntEnum):
    Zero = 0
    One = 1
    Two = 2


class Spin(enum.Enum):
    Yes = "Yes"
    No = "No"
    Unknown = "Unknown"


@dataclass(frozen=True)
class MinimalSurfaceSpec:
    """Characteristic data of a minimal complex surface X with q = 0.

    ``p_g`` is ``None`` when the supplied characteristic numbers do not
    determine an integral geometric genus (see :func:`swgeom.catalog.chen_surface`).
    """

    name: str
    c1_squared: int
    euler: int
    p_g: Optional[int]
    simply_connected: bool
    kodaira_dim: KodairaDim
    has_nonzero_sw: bool
    ample_canonical: bool
    spin: Spin
    complex_hyperbolic: bool = False

    def __post_init__(self):
        object.__setattr__(self, "kodaira_dim", KodairaDim(self.kodaira_dim))
        object.__setattr__(self, "spin", Spin(self.spin))
        self._validate()

    def _validate(self):
        c1sq, chi = self.c1_squared, self.euler
        if (c1sq - 2 * chi) % 3:
            raise IntegralityViolation(
                f"{self.name}: signature (c1^2 - 2 chi)/3 = ({c1sq} - {2 * chi})/3 is not an integer"
            )
        if self.p_g is None:
            if (c1sq + chi) % 12:
                warnings.warn(
                    f"{self.name}: c1^2 + chi = {c1sq + chi} is not divisible by 12 (Noether)",
                    IntegralityWarning,
                    stacklevel=3,
                )
        else:
            if self.p_g < 0:
                raise SpecValidationError(f"{self.name}: p_g must be non-negative")
            if (c1sq + chi) % 12:
                raise IntegralityViolation(
                    f"{self.name}: c1^2 + chi = {c1sq + chi} is not divisible by 12 (Noether)"
                )
            if self.simply_connected and (c1sq + chi) // 12 != 1 + self.p_g:
                raise SpecValidationError(
                    f"{self.name}: simply connected requires chi_h = 1 + p_g, "
                    f"got chi_h = {(c1sq + chi) // 12}, p_g = {self.p_g}"
                )
        if self.kodaira_dim == KodairaDim.Two and c1sq <= 0:
            raise SpecValidationError(f"{self.name}: general type requires c1^2 > 0")
        if self.kodaira_dim != KodairaDim.Two and c1sq != 0:
            raise SpecValidationError(f"{self.name}: Kodaira dimension 0 or 1 requires c1^2 = 0")
        if self.ample_canonical and self.kodaira_dim != KodairaDim.Two:
            raise SpecValidationError(f"{self.name}: ample canonical bundle implies general type")
        if self.complex_hyperbolic and (self.kodaira_dim != KodairaDim.Two or c1sq != 3 * chi):
            raise SpecValidationError(f"{self.name}: complex-hyperbolic surfaces have c1^2 = 3 chi > 0")
        if self.spin == Spin.Yes and self.signature % 16:
            raise SpecValidationError(f"{self.name}: spin contradicts Rochlin (tau = {self.signature})")

    @property
    def signature(self) -> int:
        return (self.c1_squared - 2 * self.euler) // 3

    @property
    def holomorphic_euler(self):
        """chi_h = (c1^2 + c2)/12, or None when that is not an integer."""
        total = self.c1_squared + self.euler
        return total // 12 if total % 12 == 0 else None

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["kodaira_dim"] = self.kodaira_dim.name
        d["spin"] = self.spin.value
        return d

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "MinimalSurfaceSpec":
        names = {f.name for f in fields(cls)}
        unknown = set(data) - names
        if unknown:
            raise SpecValidationError(f"unknown surface fields: {sorted(unknown)}")
        required = {f.name for f in fields(cls) if f.name != "complex_hyperbolic"}
        missing = required - set(data)
        if missing:
            raise SpecValidationError(f"missing surface fields: {sorted(missing)}")
        data = dict(data)
        kd = data["kodaira_dim"]
        try:
            data["kodaira_dim"] = KodairaDim[kd] if isinstance(kd, str) else KodairaDim(kd)
            data["spin"] = Spin(data["spin"])
        except (KeyError, ValueError) as exc:
            raise SpecValidationError(f"bad enum value: {exc}") from None
        for key in ("c1_squared", "euler"):
            if isinstance(data[key], bool) or not isinstance(data[key], int):
                raise SpecValidationError(f"{key} must be an integer")
        if data["p_g"] is not None and (isinstance(data["p_g"], bool) or not isinstance(data["p_g"], int)):
            raise SpecValidationError("p_g must be an integer or null")
        for key in ("simply_connected", "has_nonzero_sw", "ample_canonical", "complex_hyperbolic"):
            if key in data and not isinstance(data[key], bool):
                raise SpecValidationError(f"{key} must be a boolean")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "MinimalSurfaceSpec":
        data = json.loads(text)
        if not isinstance(data, dict):
            raise SpecValidationError("surface spec must be a JSON object")
        return cls.from_dict(data)


@dataclass(frozen=True)
class FourManifold:
    """M = X # k(-CP2) # l(S1 x S3)."""

    minimal_model: MinimalSurfaceSpec
    k: int = 0
    l: int = 0  # noqa: E741

    def __post_init__(self):
        if self.k < 0 or self.l < 0:
            raise SpecValidationError("k and l must be non-negative")

    @property
    def simply_connected(self) -> bool:
        return self.l == 0 and self.minimal_model.simply_connected

    @property
    def is_minimal(self) -> bool:
        return self.k == 0 and self.l == 0

    def describe(self) -> str:
        parts = [self.minimal_model.name]
        if self.k:
            parts.append(f"{self.k}(-CP2)")
        if self.l:
            parts.append(f"{self.l}(S1xS3)")
        return " # ".join(parts)


@dataclass(frozen=True)
class Invariants:
    chi: int
    tau: int
    b_plus: Optional[int]
    b_minus: Optional[int]
    two_chi_plus_3tau: int
    c1sq_X: int
    sw_c1plus_sq_lower: int

    @property
    def b2(self) -> Optional[int]:
        if self.b_plus is None:
            return None
        return self.b_plus + self.b_minus


def invariants_of(m: FourManifold) -> Invariants:
    X = m.minimal_model
    if (X.c1_squared - 2 * X.euler) % 3:
        raise IntegralityViolation(f"tau(X) is not an integer for {X.name}")
    tau_x = X.signature
    chi = X.euler + m.k - 2 * m.l
    tau = tau_x - m.k
    b_plus = b_minus = None
    if m.simply_connected:
        # b1 = b3 = 0, so b2 = chi - 2
        b_plus = (chi - 2 + tau) // 2
        b_minus = chi - 2 - b_plus
    sw_lower = X.c1_squared if X.has_nonzero_sw and X.c1_squared > 0 else 0
    return Invariants(
        chi=chi,
        tau=tau,
        b_plus=b_plus,
        b_minus=b_minus,
        two_chi_plus_3tau=2 * chi + 3 * tau,
        c1sq_X=X.c1_squared,
        sw_c1plus_sq_lower=sw_lower,
    )


def blow_up(m: FourManifold, n: int = 1) -> FourManifold:
    if n < 1:
        raise ValueError("blow_up needs a positive number of points")
    return replace(m, k=m.k + n)


def add_handles(m: FourManifold, n: int = 1) -> FourManifold:
    """Connected sum with n copies of S1 x S3."""
    if n < 1:
        raise ValueError("add_handles needs a positive count")
    return replace(m, l=m.l + n)


def spin_status(m: FourManifold) -> Spin:
    if m.k >= 1:
        return Spin.No
    # Rochlin: a smooth spin 4-manifold has signature divisible by 16
    if m.minimal_model.signature % 16:
        return Spin.No
    return m.minimal_model.spin
