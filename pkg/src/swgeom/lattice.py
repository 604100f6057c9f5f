"""Indefinite unimodular intersection forms and the homeomorphism test.

For simply connected smoothable closed 4-manifolds the homeomorphism type is
fixed by the intersection form, and an indefinite odd or even unimodular form
is determined by its rank, signature and parity.  Definite forms are refused.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DefiniteFormUnsupported, NotSimplyConnected, ParityUndetermined, SpecValidationError
from .surface import FourManifold, Spin, invariants_of, spin_status


class Parity(enum.Enum):
    Even = "Even"
    Odd = "Odd"


@dataclass(frozen=True)
class IntersectionFormClass:
    rank: int
    signature: int
    parity: Parity

    def __post_init__(self):
        object.__setattr__(self, "parity", Parity(self.parity))
        if self.rank < 0 or abs(self.signature) > self.rank:
            raise SpecValidationError(f"need |signature| <= rank, got ({self.rank}, {self.signature})")
        if (self.rank - self.signature) % 2:
            raise SpecValidationError("signature and rank must have the same parity")
        if self.parity is Parity.Even and self.signature % 8:
            raise SpecValidationError("an even unimodular form has signature divisible by 8")

    @property
    def definite(self) -> bool:
        return self.rank != 0 and abs(self.signature) == self.rank

    @property
    def b_plus(self) -> int:
        return (self.rank + self.signature) // 2

    @property
    def b_minus(self) -> int:
        return (self.rank - self.signature) // 2


def form_of(m: FourManifold) -> IntersectionFormClass:
    if not m.simply_connected:
        raise NotSimplyConnected(f"{m.describe()} is not simply connected")
    inv = invariants_of(m)
    spin = spin_status(m)
    if spin is Spin.Unknown:
        raise ParityUndetermined(f"spin status of {m.describe()} is not known")
    parity = Parity.Even if spin is Spin.Yes else Parity.Odd
    return IntersectionFormClass(inv.b2, inv.tau, parity)


def equivalent(f1: IntersectionFormClass, f2: IntersectionFormClass) -> bool:
    for f in (f1, f2):
        if f.definite:
            raise DefiniteFormUnsupported(f"definite form {f} cannot be classified by rank, signature, parity")
    return (f1.rank, f1.signature, f1.parity) == (f2.rank, f2.signature, f2.parity)


def homeomorphic(m1: FourManifold, m2: FourManifold) -> bool:
    return equivalent(form_of(m1), form_of(m2))
