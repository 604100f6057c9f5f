"""Independent reference computations used to derive and cross-check expected values.

Nothing here imports the package under test.
"""

from __future__ import annotations

import itertools
import math

import numpy as np


def _series_mul(p, q, n):
    out = [0] * (n + 1)
    for i, a in enumerate(p[: n + 1]):
        for j, b in enumerate(q[: n + 1 - i]):
            out[i + j] += a * b
    return out


def hypersurface_chern(d: int) -> tuple[int, int]:
    """(c1^2, c2) of a degree-d surface in CP3 by adjunction: c(X) = (1+h)^4 / (1+dh), h^2 = d."""
    n = 2
    num = [math.comb(4, i) for i in range(n + 1)]
    inv = [(-d) ** i for i in range(n + 1)]
    c = _series_mul(num, inv, n)
    c1, c2 = c[1], c[2]
    return c1 * c1 * d, c2 * d


def count_monomials(n_vars: int, degree: int) -> int:
    if degree < 0:
        return 0
    return sum(1 for e in itertools.product(range(degree + 1), repeat=n_vars) if sum(e) == degree)


def hypersurface_pg(d: int) -> int:
    """h^0(K) = h^0(O(d - 4)) on the hypersurface (no degree-d relation below degree d)."""
    return count_monomials(4, d - 4)


def double_cover_quadric(a: int, b: int) -> tuple[int, int]:
    """(c1^2, p_g) of the double cover of CP1 x CP1 branched over bidegree (2a, 2b).

    p_g = h^0(K_Q + L) + h^0(K_Q) = #bihomogeneous monomials of bidegree (a-2, b-2);
    c1^2 = 2 (K_Q + L)^2 with (x1, y1).(x2, y2) = x1 y2 + x2 y1.
    """
    kl = (a - 2, b - 2)
    c1sq = 2 * (kl[0] * kl[1] + kl[1] * kl[0])
    pg = count_monomials(2, a - 2) * count_monomials(2, b - 2)
    return c1sq, pg


def riemann_product(k1: float, k2: float) -> np.ndarray:
    """Curvature tensor of S2 x S2 with Gauss curvatures k1, k2 (frames e1,e2 | e3,e4), written out by hand."""
    R = np.zeros((4, 4, 4, 4))
    R[0, 1, 0, 1] = k1
    R[1, 0, 1, 0] = k1
    R[0, 1, 1, 0] = -k1
    R[1, 0, 0, 1] = -k1
    R[2, 3, 2, 3] = k2
    R[3, 2, 3, 2] = k2
    R[2, 3, 3, 2] = -k2
    R[3, 2, 2, 3] = -k2
    return R


def riemann_round(K: float) -> np.ndarray:
    R = np.zeros((4, 4, 4, 4))
    for i, j in itertools.permutations(range(4), 2):
        R[i, j, i, j] = K
        R[i, j, j, i] = -K
    return R


def sectional_by_contraction(R, u, v) -> float:
    u = np.asarray(u, float)
    v = np.asarray(v, float)
    num = sum(
        R[i, j, k, l] * u[i] * v[j] * u[k] * v[l] for i in range(4) for j in range(4) for k in range(4) for l in range(4)
    )
    area = (u @ u) * (v @ v) - (u @ v) ** 2
    return num / area


def ricci_trace_free_sq(R) -> float:
    ric = np.einsum("ijil->jl", R)
    r0 = ric - np.eye(4) * np.trace(ric) / 4
    return float(np.sum(r0 * r0))


def bottom_sectional_grid(R, n: int = 40) -> float:
    """Minimum of K over planes spanned by grid-sampled pairs on the unit sphere (coarse, brute force)."""
    best = np.inf
    rng = np.random.default_rng(1234)
    vecs = rng.standard_normal((n, 4))
    vecs /= np.linalg.norm(vecs, axis=1, keepdims=True)
    for a, b in itertools.combinations(vecs, 2):
        best = min(best, sectional_by_contraction(R, a, b))
    return best


def kulkarni_nomizu(h, k) -> np.ndarray:
    """(h ⊙ k)_{ijkl} = h_ik k_jl + h_jl k_ik - h_il k_jk - h_jk k_il."""
    return (
        np.einsum("ik,jl->ijkl", h, k)
        + np.einsum("jl,ik->ijkl", h, k)
        - np.einsum("il,jk->ijkl", h, k)
        - np.einsum("jk,il->ijkl", h, k)
    )


def random_curvature_tensor(rng: np.random.Generator, terms: int = 4) -> np.ndarray:
    """A random algebraic curvature tensor as a sum of ±(h ⊙ h)/2 over random symmetric h.

    Such sums span the whole 20-dimensional space, and each term satisfies the
    curvature symmetries by construction, so no projection is needed.
    """
    R = np.zeros((4, 4, 4, 4))
    for _ in range(terms):
        a = rng.standard_normal((4, 4))
        h = 0.5 * (a + a.T)
        R += rng.choice((-0.5, 0.5)) * kulkarni_nomizu(h, h)
    return R


def sectional_many_by_contraction(R, u, v) -> np.ndarray:
    num = np.einsum("ijkl,ni,nj,nk,nl->n", R, u, v, u, v)
    area = np.einsum("ni,ni->n", u, u) * np.einsum("ni,ni->n", v, v) - np.einsum("ni,ni->n", u, v) ** 2
    return num / area
