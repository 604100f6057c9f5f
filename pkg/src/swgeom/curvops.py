"""Pointwise algebraic curvature operators on an oriented Euclidean 4-space.

A curvature operator is a symmetric map of 2-forms.  In the basis

    w1± = (e12 ± e34)/√2,   w2± = (e13 ∓ e24)/√2,   w3± = (e14 ± e23)/√2

the Hodge star is diag(1, 1, 1, -1, -1, -1) and the operator has the block form

    [[W+ + s/12, B  ],
     [B^T,      W- + s/12]]

with W± trace-free and symmetric and B the trace-free Ricci part.  The four
pieces carry 1 + 5 + 5 + 9 = 20 parameters, the dimension of the space of
algebraic curvature tensors in dimension 4.

Riemann tensors use the convention R_{1212} = K(e1, e2), so the round sphere
of radius 1 has R_{ijkl} = δ_ik δ_jl - δ_il δ_jk, and Ric_{jl} = Σ_i R_{ijil}.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import (
    BianchiViolation,
    BlockInvariantViolation,
    SymmetryViolation,
    TOutOfRange,
)

STRUCT_TOL = 1e-12
BIANCHI_TOL = 1e-9

# index pairs (i, j), i < j, labelling the coordinates of a 2-form
PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

_r = 1.0 / math.sqrt(2.0)
# rows: w1+, w2+, w3+, w1-, w2-, w3- in the coordinates e12, e13, e14, e23, e24, e34
LAMBDA_BASIS = np.array(
    [
        [_r, 0, 0, 0, 0, _r],
        [0, _r, 0, 0, -_r, 0],
        [0, 0, _r, _r, 0, 0],
        [_r, 0, 0, 0, 0, -_r],
        [0, _r, 0, 0, _r, 0],
        [0, 0, _r, -_r, 0, 0],
    ]
)

# |r0|^2 = RICCI_KAPPA * |B|_F^2; pinned by the Gauss-Bonnet check on S2(1) x S2(2)
RICCI_KAPPA = 4.0


def wedge(u, v) -> np.ndarray:
    """Coordinates of u ∧ v in the e_ij (i < j) basis; broadcasts over leading axes."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return np.stack([u[..., i] * v[..., j] - u[..., j] * v[..., i] for i, j in PAIRS], axis=-1)


def to_lambda_pm(psi_e) -> np.ndarray:
    """Change 2-form coordinates from e_ij to the w± basis."""
    return np.asarray(psi_e) @ LAMBDA_BASIS.T


def hodge_star_e() -> np.ndarray:
    """Matrix of the Hodge star on 2-forms in the e_ij basis, computed from the Levi-Civita symbol."""
    from itertools import permutations

    eps = np.zeros((4, 4, 4, 4))
    for p in permutations(range(4)):
        inversions = sum(p[a] > p[b] for a in range(4) for b in range(a + 1, 4))
        eps[p] = -1.0 if inversions % 2 else 1.0
    star = np.zeros((6, 6))
    for a, (i, j) in enumerate(PAIRS):
        for b, (k, l) in enumerate(PAIRS):
            star[b, a] = eps[i, j, k, l]
    return star


@dataclass(frozen=True, eq=False)
class CurvatureOperator:
    s: float
    Wp: np.ndarray
    Wm: np.ndarray
    B: np.ndarray

    def assemble(self) -> np.ndarray:
        """The symmetric 6x6 matrix in the w± basis."""
        eye = np.eye(3) * (self.s / 12.0)
        return np.block([[self.Wp + eye, self.B], [self.B.T, self.Wm + eye]])

    def to_riemann(self) -> np.ndarray:
        """R_{ijkl} in the orthonormal frame."""
        Re = LAMBDA_BASIS.T @ self.assemble() @ LAMBDA_BASIS
        R = np.zeros((4, 4, 4, 4))
        for a, (i, j) in enumerate(PAIRS):
            for b, (k, l) in enumerate(PAIRS):
                val = Re[a, b]
                R[i, j, k, l] = val
                R[j, i, k, l] = -val
                R[i, j, l, k] = -val
                R[j, i, l, k] = val
        return R

    def to_dict(self) -> dict:
        iu = np.triu_indices(3)
        return {
            "s": float(self.s),
            "wp": [float(x) for x in self.Wp[iu]],
            "wm": [float(x) for x in self.Wm[iu]],
            "b": [float(x) for x in self.B.ravel()],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "CurvatureOperator":
        extra = set(data) - {"s", "wp", "wm", "b"}
        if extra:
            raise BlockInvariantViolation(f"unknown operator fields: {sorted(extra)}")
        try:
            s = float(data["s"])
            wp, wm, b = (np.asarray(data[key], dtype=float) for key in ("wp", "wm", "b"))
        except KeyError as exc:
            raise BlockInvariantViolation(f"missing operator field {exc}") from None
        if wp.shape != (6,) or wm.shape != (6,) or b.shape != (9,):
            raise BlockInvariantViolation("wp and wm need 6 entries, b needs 9")
        return from_blocks(s, _sym_from_upper(wp), _sym_from_upper(wm), b.reshape(3, 3))


def _sym_from_upper(vals: np.ndarray) -> np.ndarray:
    M = np.zeros((3, 3))
    M[np.triu_indices(3)] = vals
    return M + np.triu(M, 1).T


def from_blocks(s, Wp, Wm, B) -> CurvatureOperator:
    Wp = np.array(Wp, dtype=float)
    Wm = np.array(Wm, dtype=float)
    B = np.array(B, dtype=float)
    for name, M in (("Wp", Wp), ("Wm", Wm), ("B", B)):
        if M.shape != (3, 3):
            raise BlockInvariantViolation(f"{name} must be 3x3, got shape {M.shape}")
    for name, M in (("Wp", Wp), ("Wm", Wm)):
        asym = np.max(np.abs(M - M.T))
        if asym > STRUCT_TOL:
            raise BlockInvariantViolation(f"{name} is not symmetric (deviation {asym:.3g} > {STRUCT_TOL:g})")
        tr = np.trace(M)
        if abs(tr) > STRUCT_TOL:
            raise BlockInvariantViolation(f"{name} is not trace-free (trace {tr:.3g}, tolerance {STRUCT_TOL:g})")
    if not (np.isfinite(s) and np.all(np.isfinite(Wp)) and np.all(np.isfinite(Wm)) and np.all(np.isfinite(B))):
        raise BlockInvariantViolation("non-finite entries")
    for M in (Wp, Wm, B):
        M.setflags(write=False)
    return CurvatureOperator(float(s), Wp, Wm, B)


def decompose(R) -> CurvatureOperator:
    """Split a symmetric 6x6 operator given in the w± basis into (s, W+, W-, B)."""
    R = np.asarray(R, dtype=float)
    if R.shape != (6, 6):
        raise BianchiViolation(f"expected a 6x6 matrix, got shape {R.shape}")
    asym = np.max(np.abs(R - R.T))
    if asym > BIANCHI_TOL:
        raise SymmetryViolation(f"operator is not symmetric (deviation {asym:.3g})")
    R = 0.5 * (R + R.T)
    A, C, B = R[:3, :3], R[3:, 3:], R[:3, 3:]
    trA, trC = np.trace(A), np.trace(C)
    if abs(trA - trC) > BIANCHI_TOL:
        raise BianchiViolation(f"diagonal-block traces differ by {abs(trA - trC):.3g} (first Bianchi identity)")
    s = 2.0 * (trA + trC)
    Wp = A - np.eye(3) * (trA / 3.0)
    Wm = C - np.eye(3) * (trC / 3.0)
    # exact symmetric, trace-free representatives
    Wp = 0.5 * (Wp + Wp.T)
    Wm = 0.5 * (Wm + Wm.T)
    Wp -= np.eye(3) * (np.trace(Wp) / 3.0)
    Wm -= np.eye(3) * (np.trace(Wm) / 3.0)
    return from_blocks(s, Wp, Wm, B.copy())


def check_riemann_symmetries(Riem, tol: float = BIANCHI_TOL) -> None:
    R = np.asarray(Riem, dtype=float)
    if R.shape != (4, 4, 4, 4):
        raise SymmetryViolation(f"expected a 4x4x4x4 array, got shape {R.shape}")
    checks = (
        ("antisymmetry in the first pair", R + R.transpose(1, 0, 2, 3)),
        ("antisymmetry in the second pair", R + R.transpose(0, 1, 3, 2)),
        ("pair symmetry", R - R.transpose(2, 3, 0, 1)),
        ("first Bianchi identity", R + R.transpose(1, 2, 0, 3) + R.transpose(2, 0, 1, 3)),
    )
    for name, defect in checks:
        err = np.max(np.abs(defect))
        if err > tol:
            raise SymmetryViolation(f"{name} fails (deviation {err:.3g} > {tol:g})")


def from_riemann(Riem) -> CurvatureOperator:
    R = np.asarray(Riem, dtype=float)
    check_riemann_symmetries(R)
    Re = np.array([[R[i, j, k, l] for (k, l) in PAIRS] for (i, j) in PAIRS])
    return decompose(LAMBDA_BASIS @ Re @ LAMBDA_BASIS.T)


def ricci_tensor(Riem) -> np.ndarray:
    return np.einsum("ijil->jl", np.asarray(Riem, dtype=float))


# -- planes and sectional curvature -------------------------------------------


@dataclass(frozen=True, eq=False)
class TwoPlane:
    u: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        u = np.array(self.u, dtype=float)
        v = np.array(self.v, dtype=float)
        if u.shape != (4,) or v.shape != (4,):
            raise ValueError("plane vectors must have 4 components")
        err = max(abs(u @ u - 1.0), abs(v @ v - 1.0), abs(u @ v))
        if err > STRUCT_TOL:
            raise ValueError(f"u, v are not orthonormal (deviation {err:.3g})")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    @classmethod
    def spanned_by(cls, a, b) -> "TwoPlane":
        """Gram-Schmidt on two independent vectors (orientation of (a, b) kept)."""
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        u = a / np.linalg.norm(a)
        v = b - (b @ u) * u
        nv = np.linalg.norm(v)
        if nv < 1e-8 * np.linalg.norm(b):
            raise ValueError("vectors are parallel")
        u, v = _reorthonormalize(u, v / nv)
        return cls(u, v)

    @classmethod
    def from_two_form(cls, psi_pm) -> "TwoPlane":
        """The oriented plane of a simple unit 2-form given in w± coordinates."""
        psi_e = np.asarray(psi_pm, dtype=float) @ LAMBDA_BASIS
        A = np.zeros((4, 4))
        for c, (i, j) in enumerate(PAIRS):
            A[i, j] = psi_e[c]
            A[j, i] = -psi_e[c]
        U, _, _ = np.linalg.svd(A)
        u, v = _reorthonormalize(U[:, 0], U[:, 1])
        if wedge(u, v) @ psi_e < 0:
            v = -v
        return cls(u, v)

    def two_form(self) -> np.ndarray:
        """psi = u ∧ v in w± coordinates (psi+ first)."""
        return to_lambda_pm(wedge(self.u, self.v))


def _reorthonormalize(u, v):
    # two classical Gram-Schmidt passes hold |u|, |v|, u.v to ~1e-16
    for _ in range(2):
        u = u / np.linalg.norm(u)
        v = v - (v @ u) * u
        v = v / np.linalg.norm(v)
    return u, v


def sectional(R: CurvatureOperator, P: TwoPlane) -> float:
    """K(P) = s/12 + <psi+, W+ psi+> + <psi-, W- psi-> + 2 <psi+, B psi->."""
    psi = P.two_form()
    pp, pm = psi[:3], psi[3:]
    return float(R.s / 12.0 + pp @ R.Wp @ pp + pm @ R.Wm @ pm + 2.0 * pp @ R.B @ pm)


def sectional_direct(Riem, P: TwoPlane) -> float:
    """<Riem(u, v) v, u> by full index contraction."""
    return float(np.einsum("ijkl,i,j,k,l->", np.asarray(Riem), P.u, P.v, P.u, P.v))


def random_planes(n: int, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    """n orthonormal 2-frames with uniformly distributed span (Gram-Schmidt on Gaussians)."""
    g = rng.standard_normal((n, 2, 4))
    u = g[:, 0] / np.linalg.norm(g[:, 0], axis=1, keepdims=True)
    v = g[:, 1] - np.sum(g[:, 1] * u, axis=1, keepdims=True) * u
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return u, v


def sectional_many(R: CurvatureOperator, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    psi = to_lambda_pm(wedge(u, v))
    return np.einsum("ni,ij,nj->n", psi, R.assemble(), psi)


# -- derived scalars -----------------------------------------------------------


@dataclass(frozen=True)
class CurvatureScalars:
    s: float
    w: float
    w_tilde: float
    frak_S: float
    norm_Wp: float
    norm_Wm: float
    norm_B: float
    Wp: Optional[np.ndarray] = None

    def s_star(self, omega) -> float:
        """s/3 + 2 <omega, W+ omega> for a self-dual form omega of norm √2 (w+ coordinates)."""
        omega = np.asarray(omega, dtype=float)
        if omega.shape != (3,) or abs(omega @ omega - 2.0) > 1e-9:
            raise ValueError("omega must be a self-dual 3-vector of norm sqrt(2)")
        return float(self.s / 3.0 + 2.0 * omega @ self.Wp @ omega)


def scalars(R: CurvatureOperator) -> CurvatureScalars:
    w = float(np.linalg.eigvalsh(R.Wp)[0])
    w_tilde = float(np.linalg.eigvalsh(R.Wm)[0])
    return CurvatureScalars(
        s=R.s,
        w=w,
        w_tilde=w_tilde,
        frak_S=R.s + 3.0 * w,
        norm_Wp=float(np.linalg.norm(R.Wp)),
        norm_Wm=float(np.linalg.norm(R.Wm)),
        norm_B=float(np.linalg.norm(R.B)),
        Wp=R.Wp,
    )


@dataclass(frozen=True)
class BottomSectional:
    estimate: float
    witness_value: float
    bound_wgl: float
    bound_crafty: float
    witness_plane: TwoPlane
    samples: int
    seed: int


def witness_plane(R: CurvatureOperator) -> TwoPlane:
    """The plane psi+ + eps psi- built from the lowest eigenvectors of W±, with eps making the B-term <= 0."""
    _, vp = np.linalg.eigh(R.Wp)
    _, vm = np.linalg.eigh(R.Wm)
    pp = vp[:, 0] / math.sqrt(2.0)
    pm = vm[:, 0] / math.sqrt(2.0)
    if pp @ R.B @ pm > 0:
        pm = -pm
    return TwoPlane.from_two_form(np.concatenate([pp, pm]))


def bottom_sectional(R: CurvatureOperator, samples: int, seed: int) -> BottomSectional:
    if samples < 1:
        raise ValueError("samples must be positive")
    sc = scalars(R)
    plane = witness_plane(R)
    witness = sectional(R, plane)
    rng = np.random.default_rng(seed)
    u, v = random_planes(samples, rng)
    estimate = min(float(np.min(sectional_many(R, u, v))), witness)
    return BottomSectional(
        estimate=estimate,
        witness_value=witness,
        bound_wgl=R.s / 12.0 + sc.w / 2.0,
        bound_crafty=R.s / 12.0 + sc.w / 2.0 + sc.w_tilde / 2.0,
        witness_plane=plane,
        samples=samples,
        seed=seed,
    )


# -- integrands ----------------------------------------------------------------


@dataclass(frozen=True)
class GaussBonnetIntegrand:
    gb: float
    ricci_sq: float
    r0_sq: float


def gauss_bonnet_integrand(R: CurvatureOperator) -> GaussBonnetIntegrand:
    """Pointwise density of 2chi + 3tau, (2|W+|^2 + s^2/24 - |r0|^2/2)/(4 pi^2), and |Ric|^2."""
    wp_sq = float(np.sum(R.Wp**2))
    r0_sq = RICCI_KAPPA * float(np.sum(R.B**2))
    gb = (2.0 * wp_sq + R.s**2 / 24.0 - r0_sq / 2.0) / (4.0 * math.pi**2)
    return GaussBonnetIntegrand(gb=gb, ricci_sq=R.s**2 / 4.0 + r0_sq, r0_sq=r0_sq)


@dataclass(frozen=True)
class SWIntegrands:
    central: float
    lt_neg_sq: float
    family: float


def sw_integrands(R: CurvatureOperator, t: float = 0.5) -> SWIntegrands:
    if not 0.0 <= t <= 0.5:
        raise TOutOfRange(f"t = {t} is outside [0, 1/2]")
    sc = scalars(R)
    s, w = R.s, sc.w
    central = (2.0 / 3.0 * s - 2.0 * math.sqrt(2.0 / 3.0) * sc.norm_Wp) ** 2
    lt = min(0.0, 2.0 / 3.0 * s + 2.0 * w) ** 2
    family = min(0.0, (1.0 - 2.0 * t / 3.0) * s + 4.0 * t * w) ** 2
    return SWIntegrands(central=central, lt_neg_sq=lt, family=family)


# -- model spaces --------------------------------------------------------------

MODELS = ("S4", "S2xS2", "CP2", "CH2")


def constant_curvature_tensor(K: float) -> np.ndarray:
    d = np.eye(4)
    return K * (np.einsum("ik,jl->ijkl", d, d) - np.einsum("il,jk->ijkl", d, d))


def product_tensor(r1: float, r2: float) -> np.ndarray:
    R = np.zeros((4, 4, 4, 4))
    for (i, j), K in (((0, 1), 1.0 / r1**2), ((2, 3), 1.0 / r2**2)):
        R[i, j, i, j] = R[j, i, j, i] = K
        R[i, j, j, i] = R[j, i, i, j] = -K
    return R


# J e1 = e2, J e3 = e4; J_ab = g(e_a, J e_b); Kähler form e12 + e34 is self-dual
COMPLEX_STRUCTURE = np.array(
    [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]],
    dtype=float,
)


def complex_space_form_tensor(c: float) -> np.ndarray:
    """Constant holomorphic sectional curvature c: K ranges over [c/4, c] (or [c, c/4] for c < 0)."""
    d, J = np.eye(4), COMPLEX_STRUCTURE
    return (c / 4.0) * (
        np.einsum("ik,jl->ijkl", d, d)
        - np.einsum("il,jk->ijkl", d, d)
        + np.einsum("ik,jl->ijkl", J, J)
        - np.einsum("il,jk->ijkl", J, J)
        + 2.0 * np.einsum("ij,kl->ijkl", J, J)
    )


def model_riemann(name: str, scale: float = 1.0, radii: Sequence[float] = (1.0, 1.0)) -> np.ndarray:
    """Riemann tensor of a symmetric model, with the metric dilated by ``scale``.

    Unit scale gives: S4 of radius 1; S2(r1) x S2(r2); CP2 with K in [1, 4];
    CH2 with K in [-4/3, -1/3] (so s = -8).
    """
    if scale <= 0 or min(radii) <= 0:
        raise ValueError("scale and radii must be positive")
    f = 1.0 / scale**2
    if name == "S4":
        return constant_curvature_tensor(f)
    if name == "S2xS2":
        r1, r2 = radii
        return product_tensor(r1 * scale, r2 * scale)
    if name == "CP2":
        return complex_space_form_tensor(4.0 * f)
    if name == "CH2":
        return complex_space_form_tensor(-4.0 / 3.0 * f)
    raise ValueError(f"unknown model {name!r}; choose from {MODELS}")


def model(name: str, scale: float = 1.0, radii: Sequence[float] = (1.0, 1.0)) -> CurvatureOperator:
    return from_riemann(model_riemann(name, scale, radii))


def model_volume(name: str, scale: float = 1.0, radii: Sequence[float] = (1.0, 1.0)) -> float:
    """Total volume of the compact model (CH2 is non-compact)."""
    if name == "S4":
        return 8.0 * math.pi**2 / 3.0 * scale**4
    if name == "S2xS2":
        r1, r2 = radii
        return 16.0 * math.pi**2 * (r1 * r2) ** 2 * scale**4
    if name == "CP2":
        return math.pi**2 / 2.0 * scale**4
    raise ValueError(f"{name} has no finite volume")


KAHLER_FORM = np.array([math.sqrt(2.0), 0.0, 0.0])  # e12 + e34 in w+ coordinates


# -- random operators -----------------------------------------------------------


def random_riemann(rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    """Algebraic curvature tensor from a Gaussian 4-tensor by imposing the symmetries one at a time."""
    T = scale * rng.standard_normal((4, 4, 4, 4))
    T = 0.5 * (T - T.transpose(1, 0, 2, 3))
    T = 0.5 * (T - T.transpose(0, 1, 3, 2))
    T = 0.5 * (T + T.transpose(2, 3, 0, 1))
    # remove the totally antisymmetric part, the only obstruction to Bianchi here
    bianchi = T + T.transpose(1, 2, 0, 3) + T.transpose(2, 0, 1, 3)
    return T - bianchi / 3.0


def random_operator(rng: np.random.Generator, scale: float = 1.0) -> CurvatureOperator:
    def trace_free_sym():
        M = rng.standard_normal((3, 3))
        M = 0.5 * (M + M.T)
        return M - np.eye(3) * np.trace(M) / 3.0

    return from_blocks(
        scale * 12.0 * rng.standard_normal(),
        scale * trace_free_sym(),
        scale * trace_free_sym(),
        scale * rng.standard_normal((3, 3)),
    )


# -- pointwise invariant audit -------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def check(R: CurvatureOperator, samples: int = 2000, seed: int = 0) -> list[CheckResult]:
    """Run every pointwise identity and inequality on one operator."""
    out = []
    M = R.assemble()
    sc = scalars(R)

    def add(name, ok, detail):
        out.append(CheckResult(name, bool(ok), detail))

    asym = float(np.max(np.abs(M - M.T)))
    add("assembled operator symmetric", asym <= STRUCT_TOL, f"max |R - R^T| = {asym:.3g}")
    tr_gap = max(abs(np.trace(M[:3, :3]) - R.s / 4), abs(np.trace(M[3:, 3:]) - R.s / 4))
    add("block traces equal s/4", tr_gap <= STRUCT_TOL * max(1.0, abs(R.s)), f"gap {tr_gap:.3g}")
    back = decompose(M)
    rt = float(np.max(np.abs(back.assemble() - M)))
    add("decompose/assemble round trip", rt <= STRUCT_TOL * max(1.0, np.max(np.abs(M))), f"error {rt:.3g}")

    Riem = R.to_riemann()
    rng = np.random.default_rng(seed)
    u, v = random_planes(min(samples, 200), rng)
    worst = 0.0
    for a, b in zip(u, v):
        P = TwoPlane(*_reorthonormalize(a, b))
        worst = max(worst, abs(sectional(R, P) - sectional_direct(Riem, P)))
    scale = max(1.0, float(np.max(np.abs(M))))
    add("sectional formula = direct contraction", worst <= 1e-10 * scale, f"max error {worst:.3g}")

    r0 = ricci_tensor(Riem)
    r0 = r0 - np.eye(4) * np.trace(r0) / 4.0
    r0_direct = float(np.sum(r0**2))
    gbi = gauss_bonnet_integrand(R)
    add(
        "|r0|^2 = kappa |B|^2",
        abs(r0_direct - gbi.r0_sq) <= 1e-10 * max(1.0, r0_direct),
        f"{r0_direct:.12g} vs {gbi.r0_sq:.12g}",
    )
    add(
        "trace-free bound w >= -sqrt(2/3)|W+|",
        sc.w >= -math.sqrt(2.0 / 3.0) * sc.norm_Wp - 1e-12 * scale,
        f"w = {sc.w:.12g}",
    )
    bs = bottom_sectional(R, samples, seed)
    tol = 1e-10 * scale
    add(
        "witness <= s/12 + w/2 + w~/2 <= s/12 + w/2",
        bs.witness_value <= bs.bound_crafty + tol and bs.bound_crafty <= bs.bound_wgl + tol,
        f"{bs.witness_value:.12g} <= {bs.bound_crafty:.12g} <= {bs.bound_wgl:.12g}",
    )
    add("sampled minimum <= witness", bs.estimate <= bs.witness_value, f"{bs.estimate:.12g}")
    sw = sw_integrands(R, 0.5)
    applies = 2.0 / 3.0 * R.s + 2.0 * sc.w <= 0
    add(
        "central >= ((2/3)s + 2w)_-^2",
        (not applies) or sw.central >= sw.lt_neg_sq - tol * scale,
        f"{sw.central:.12g} vs {sw.lt_neg_sq:.12g}" + ("" if applies else " (not applicable)"),
    )
    return out
