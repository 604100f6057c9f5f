import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swgeom import curvops as cv
from swgeom.errors import BianchiViolation, BlockInvariantViolation, SymmetryViolation, TOutOfRange

import oracles

seeds = st.integers(0, 2**32 - 1)


def test_lambda_basis_is_orthonormal_and_diagonalizes_star():
    L = cv.LAMBDA_BASIS
    assert np.allclose(L @ L.T, np.eye(6), atol=1e-15)
    star = L @ cv.hodge_star_e() @ L.T
    assert np.allclose(star, np.diag([1, 1, 1, -1, -1, -1]), atol=1e-15)


def test_from_blocks_examples():
    R = cv.from_blocks(12.0, np.zeros((3, 3)), np.zeros((3, 3)), np.zeros((3, 3)))
    rng = np.random.default_rng(3)
    u, v = cv.random_planes(50, rng)
    assert np.allclose(cv.sectional_many(R, u, v), 1.0, atol=1e-12)
    assert np.allclose(oracles.sectional_many_by_contraction(R.to_riemann(), u, v), 1.0, atol=1e-12)
    flat = cv.from_blocks(0.0, np.zeros((3, 3)), np.zeros((3, 3)), np.zeros((3, 3)))
    assert np.all(flat.assemble() == 0)
    with pytest.raises(BlockInvariantViolation):
        cv.from_blocks(0.0, np.diag([0.1, 0, 0]), np.zeros((3, 3)), np.zeros((3, 3)))
    with pytest.raises(BlockInvariantViolation):
        cv.from_blocks(0.0, [[0, 1, 0], [0, 0, 0], [0, 0, 0]], np.zeros((3, 3)), np.zeros((3, 3)))


def test_decompose_rejects_bianchi_violation():
    M = np.diag([1.0, 0, 0, 0, 0, 0])
    with pytest.raises(BianchiViolation):
        cv.decompose(M)


def test_from_riemann_rejects_bad_tensors():
    rng = np.random.default_rng(0)
    with pytest.raises(SymmetryViolation):
        cv.from_riemann(rng.standard_normal((4, 4, 4, 4)))
    # totally antisymmetric: passes the pair symmetries, fails Bianchi
    eps = np.zeros((4, 4, 4, 4))
    import itertools

    for p in itertools.permutations(range(4)):
        inv = sum(p[a] > p[b] for a in range(4) for b in range(a + 1, 4))
        eps[p] = -1 if inv % 2 else 1
    with pytest.raises(SymmetryViolation, match="Bianchi"):
        cv.from_riemann(eps)


def test_round_sphere():
    R = cv.from_riemann(oracles.riemann_round(1.0))
    assert R.s == pytest.approx(12.0, abs=1e-12)
    for M in (R.Wp, R.Wm, R.B):
        assert np.max(np.abs(M)) < 1e-12
    sc = cv.scalars(R)
    assert abs(sc.w) < 1e-12 and abs(sc.w_tilde) < 1e-12


def test_product_s2_s2_radii_1_2():
    Riem = oracles.riemann_product(1.0, 0.25)
    R = cv.from_riemann(Riem)
    assert R.s == pytest.approx(2.5, abs=1e-12)
    assert np.linalg.norm(R.B) > 0.1
    assert np.sum(R.Wp**2) == pytest.approx(R.s**2 / 24, abs=1e-12)
    assert np.allclose(cv.model_riemann("S2xS2", radii=(1, 2)), Riem)
    e = np.eye(4)
    assert cv.sectional(R, cv.TwoPlane(e[0], e[1])) == pytest.approx(1.0, abs=1e-12)
    assert cv.sectional(R, cv.TwoPlane(e[2], e[3])) == pytest.approx(0.25, abs=1e-12)
    assert cv.sectional(R, cv.TwoPlane(e[0], e[2])) == pytest.approx(0.0, abs=1e-12)


def test_ricci_kappa_pinned_by_product_oracle():
    R = cv.from_riemann(oracles.riemann_product(1.0, 0.25))
    r0_oracle = oracles.ricci_trace_free_sq(oracles.riemann_product(1.0, 0.25))
    assert r0_oracle == pytest.approx(9 / 16, abs=1e-15)
    assert cv.RICCI_KAPPA * np.sum(R.B**2) == pytest.approx(r0_oracle, abs=1e-12)
    assert cv.RICCI_KAPPA == 4.0


@pytest.mark.parametrize("name,scale", [("CH2", 1.0), ("CP2", 1.0), ("CH2", 0.7), ("CP2", 2.0)])
def test_complex_space_forms(name, scale):
    R = cv.model(name, scale)
    s_expected = (-8.0 if name == "CH2" else 24.0) / scale**2
    assert R.s == pytest.approx(s_expected, rel=1e-12)
    assert np.max(np.abs(R.Wm)) < 1e-12 and np.max(np.abs(R.B)) < 1e-12
    eig = np.linalg.eigvalsh(R.Wp)
    expected = sorted([R.s / 6, -R.s / 12, -R.s / 12])
    assert np.allclose(eig, expected, atol=1e-12)
    sc = cv.scalars(R)
    assert sc.s_star(cv.KAHLER_FORM) == pytest.approx(R.s, rel=1e-12)
    # K is extremal on holomorphic and totally real planes
    e = np.eye(4)
    hol = cv.sectional(R, cv.TwoPlane(e[0], e[1]))
    real = cv.sectional(R, cv.TwoPlane(e[0], e[2]))
    if name == "CH2":
        assert (hol, real) == (pytest.approx(-4 / 3 / scale**2), pytest.approx(-1 / 3 / scale**2))
    else:
        assert (hol, real) == (pytest.approx(4 / scale**2), pytest.approx(1 / scale**2))


def test_ch2_scalars():
    sc = cv.scalars(cv.model("CH2"))
    assert sc.w == pytest.approx(-4 / 3, abs=1e-12)
    assert sc.frak_S == pytest.approx(-12, abs=1e-12)
    assert 2 / 3 * sc.s + 2 * sc.w == pytest.approx(sc.s, abs=1e-12)


def test_ch2_sectional_range_against_oracle():
    Riem = cv.model_riemann("CH2")
    rng = np.random.default_rng(11)
    u, v = cv.random_planes(4000, rng)
    K = oracles.sectional_many_by_contraction(Riem, u, v)
    assert K.min() >= -4 / 3 - 1e-12 and K.max() <= -1 / 3 + 1e-12


def test_bottom_sectional_examples():
    b = cv.bottom_sectional(cv.model("S2xS2"), 2000, 5)
    assert b.bound_crafty == pytest.approx(0.0, abs=1e-12)
    assert b.bound_wgl == pytest.approx(1 / 6, abs=1e-12)
    assert b.witness_value == pytest.approx(0.0, abs=1e-12)
    assert b.estimate >= -1e-12
    c = cv.bottom_sectional(cv.model("CH2"), 2000, 5)
    assert c.bound_wgl == pytest.approx(-4 / 3, abs=1e-12)
    assert c.witness_value == pytest.approx(-4 / 3, abs=1e-12)
    assert c.estimate == pytest.approx(-4 / 3, abs=1e-12)
    with pytest.raises(ValueError):
        cv.bottom_sectional(cv.model("CH2"), 0, 5)


def test_bottom_sectional_deterministic_and_bracketed():
    rng = np.random.default_rng(99)
    Riem = oracles.random_curvature_tensor(rng)
    R = cv.from_riemann(Riem)
    a = cv.bottom_sectional(R, 5000, 42)
    b = cv.bottom_sectional(R, 5000, 42)
    assert a.estimate == b.estimate and a.witness_value == b.witness_value
    assert a.estimate <= a.witness_value
    # every K(P) is a Rayleigh quotient of the operator on a unit 2-form
    assert a.estimate >= np.linalg.eigvalsh(R.assemble())[0] - 1e-12
    # a denser run can only go lower, and the coarse oracle grid is never far below
    assert cv.bottom_sectional(R, 20000, 42).estimate <= a.estimate
    assert a.estimate <= oracles.bottom_sectional_grid(Riem, 30) + 0.1 * np.abs(R.assemble()).max()


def test_gauss_bonnet_models():
    gb = cv.gauss_bonnet_integrand(cv.model("S4")).gb
    assert gb * cv.model_volume("S4") == pytest.approx(4.0, abs=1e-9)
    for radii in ((1, 1), (1, 2), (0.5, 3)):
        g = cv.gauss_bonnet_integrand(cv.model("S2xS2", radii=radii))
        assert g.gb * cv.model_volume("S2xS2", radii=radii) == pytest.approx(8.0, abs=1e-9)
    g = cv.gauss_bonnet_integrand(cv.model("S2xS2", radii=(1, 2)))
    assert g.r0_sq == pytest.approx(9 / 16, abs=1e-12)
    cp2 = cv.gauss_bonnet_integrand(cv.model("CP2"))
    assert cp2.gb * cv.model_volume("CP2") == pytest.approx(2 * 3 + 3 * 1, abs=1e-9)
    assert cp2.ricci_sq == pytest.approx(24**2 / 4, abs=1e-9)
    with pytest.raises(ValueError):
        cv.model_volume("CH2")


def test_sw_integrands_examples():
    s4 = cv.sw_integrands(cv.model("S4"), 0.25)
    assert s4.central == pytest.approx(64.0, abs=1e-9) and s4.lt_neg_sq == 0.0
    ch2 = cv.model("CH2")
    for t in (0.0, 0.1, 0.25, 0.5):
        w = cv.sw_integrands(ch2, t)
        assert w.central == pytest.approx(64.0, abs=1e-9)
        assert w.lt_neg_sq == pytest.approx(64.0, abs=1e-9)
        assert w.family == pytest.approx(64.0, abs=1e-9)
    with pytest.raises(TOutOfRange):
        cv.sw_integrands(ch2, 0.6)


def test_operator_json_roundtrip():
    R = cv.random_operator(np.random.default_rng(8))
    back = cv.CurvatureOperator.from_dict(R.to_dict())
    assert np.array_equal(back.assemble(), R.assemble())
    with pytest.raises(BlockInvariantViolation):
        cv.CurvatureOperator.from_dict({**R.to_dict(), "extra": 1})
    with pytest.raises(BlockInvariantViolation):
        cv.CurvatureOperator.from_dict({"s": 1.0, "wp": [0] * 6, "wm": [0] * 6})


def test_two_plane_validation_and_roundtrip():
    with pytest.raises(ValueError):
        cv.TwoPlane([1, 0, 0, 0], [1, 0, 0, 0])
    with pytest.raises(ValueError):
        cv.TwoPlane.spanned_by([1, 2, 3, 4], [2, 4, 6, 8])
    P = cv.TwoPlane.spanned_by([1, 2, 0, 1], [0, 1, 1, -1])
    Q = cv.TwoPlane.from_two_form(P.two_form())
    assert np.allclose(Q.two_form(), P.two_form(), atol=1e-12)


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_roundtrip_and_riemann_consistency(seed):
    rng = np.random.default_rng(seed)
    R = cv.random_operator(rng)
    back = cv.decompose(R.assemble())
    assert np.max(np.abs(back.assemble() - R.assemble())) <= 1e-12 * max(1, np.max(np.abs(R.assemble())))
    again = cv.from_riemann(R.to_riemann())
    assert np.allclose(again.assemble(), R.assemble(), atol=1e-12)
    M = R.assemble()
    assert abs(np.trace(M[:3, :3]) - R.s / 4) < 1e-12 * max(1, abs(R.s))


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_pointwise_properties(seed):
    rng = np.random.default_rng(seed)
    R = cv.from_riemann(oracles.random_curvature_tensor(rng))
    sc = cv.scalars(R)
    scale = max(1.0, float(np.max(np.abs(R.assemble()))))
    assert sc.w >= -math.sqrt(2 / 3) * sc.norm_Wp - 1e-12 * scale
    w = cv.sw_integrands(R, 0.5)
    if 2 / 3 * R.s + 2 * sc.w <= 0:
        assert w.central >= w.lt_neg_sq - 1e-10 * scale**2
    r0 = oracles.ricci_trace_free_sq(R.to_riemann())
    assert cv.gauss_bonnet_integrand(R).r0_sq == pytest.approx(r0, rel=1e-10, abs=1e-12)


@settings(max_examples=50, deadline=None)
@given(seeds, st.floats(-5, 5))
def test_kahler_eigenstructure(seed, s):
    rng = np.random.default_rng(seed)
    Q, _ = np.linalg.qr(rng.standard_normal((3, 3)))
    Wp = Q @ np.diag([s / 6, -s / 12, -s / 12]) @ Q.T
    Wp = 0.5 * (Wp + Wp.T)
    Wp -= np.eye(3) * np.trace(Wp) / 3
    R = cv.from_blocks(s, Wp, np.zeros((3, 3)), rng.standard_normal((3, 3)))
    sc = cv.scalars(R)
    assert np.sum(R.Wp**2) == pytest.approx(s**2 / 24, abs=1e-12)
    omega = math.sqrt(2) * Q[:, 0]
    assert sc.s_star(omega) == pytest.approx(s, abs=1e-12)
    if s < 0:
        assert 2 / 3 * s + 2 * sc.w == pytest.approx(s, abs=1e-12)
        assert sc.frak_S == pytest.approx(1.5 * s, abs=1e-12)


@pytest.mark.parametrize("name", cv.MODELS)
def test_check_passes_on_models(name):
    results = cv.check(cv.model(name), samples=500, seed=1)
    assert all(r.passed for r in results), [r for r in results if not r.passed]


def test_check_passes_on_random():
    results = cv.check(cv.random_operator(np.random.default_rng(4)), samples=500, seed=1)
    assert all(r.passed for r in results)
