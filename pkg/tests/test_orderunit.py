import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

from oracles import (grid_norm, lorentz_interior, orthant_norm, spin3_rotation,
                     spin_identity_norm, sym_norm)
from symcone import cone as C
from symcone import jordan, orderunit as O, sampling
from symcone.errors import NotAutomorphism, NotInterior, PositivityViolated
from symcone.jordan import Orthant, Spin, SymMatrices, make_algebra

ORTH2 = C.cone_from_algebra(make_algebra(Orthant(2)))
SPIN3 = C.cone_from_algebra(make_algebra(Spin(3)))
SYM3 = C.cone_from_algebra(make_algebra(SymMatrices(3)))
ORTH2_CTX = O.make_context(ORTH2)
SPIN3_CTX = O.make_context(SPIN3)


def test_context_needs_interior_unit():
    with pytest.raises(NotInterior):
        O.make_context(SPIN3, [1, 0, 1])


def test_order_leq_examples():
    assert O.order_leq(ORTH2_CTX, [1, 2], [2, 2])
    x = np.array([0.3, -1.0, 2.0])
    assert O.order_leq(SPIN3_CTX, x, x)
    assert not O.order_leq(SPIN3_CTX, [0, 0, 0], [1, 0, 0])
    assert np.dot([1, 0, 0], [-1, 0, 1]) < 0


def test_order_unit_norm_examples():
    x = np.array([1.0, -2.0])
    member = lambda v: bool(np.all(v >= 0))  # noqa: E731
    assert grid_norm(member, x, np.ones(2)) == pytest.approx(2.0)
    assert O.order_unit_norm(ORTH2_CTX, x) == pytest.approx(2.0, abs=1e-9)
    assert O.order_unit_norm(SPIN3_CTX, SPIN3.algebra.identity) == pytest.approx(1.0, abs=1e-9)
    assert O.order_unit_norm(SPIN3_CTX, [1, 0, 0]) == pytest.approx(1.0, abs=1e-9)


def test_norm_brackets_from_above():
    x = np.array([0.3, -0.7])
    lam = O.order_unit_norm(ORTH2_CTX, x)
    assert lam >= 0.7 and lam - 0.7 <= 1e-10
    e = ORTH2_CTX.unit
    assert O.order_leq(ORTH2_CTX, -lam * e, x) and O.order_leq(ORTH2_CTX, x, lam * e)


@given(arrays(float, 3, elements=st.floats(-5, 5)),
       arrays(float, 3, elements=st.floats(0.2, 4)))
def test_orthant_norm_with_general_unit(x, e):
    ctx = O.make_context(C.cone_from_algebra(make_algebra(Orthant(3))), e)
    assert O.order_unit_norm(ctx, x) == pytest.approx(orthant_norm(x, e), abs=1e-9)


@given(arrays(float, 4, elements=st.floats(-5, 5)))
def test_spin_norm_at_identity(x):
    ctx = O.make_context(C.cone_from_algebra(make_algebra(Spin(4))))
    assert O.order_unit_norm(ctx, x) == pytest.approx(spin_identity_norm(x), abs=1e-9)


def test_sym_norm_with_general_unit():
    rng = np.random.default_rng(3)
    for _ in range(20):
        e = jordan.random_interior(SYM3.algebra, rng, shift=0.5)
        ctx = O.make_context(SYM3, e)
        x = rng.standard_normal(6)
        assert O.order_unit_norm(ctx, x) == pytest.approx(sym_norm(x, e, 3), abs=1e-9)


def test_oracle_backed_norm_matches_algebra():
    lorentz = C.cone_from_oracle(3, lorentz_interior, [0, 0, 1])
    ctx = O.make_context(lorentz)
    rng = np.random.default_rng(0)
    for x in rng.standard_normal((10, 3)):
        assert O.order_unit_norm(ctx, x) == pytest.approx(spin_identity_norm(x), abs=1e-6)


@given(arrays(float, 3, elements=st.floats(-5, 5)),
       arrays(float, 3, elements=st.floats(-5, 5)),
       st.floats(-4, 4))
def test_norm_is_a_norm(x, y, c):
    n = lambda v: O.order_unit_norm(SPIN3_CTX, v)  # noqa: E731
    assert n(c * x) == pytest.approx(abs(c) * n(x), abs=1e-9 * (1 + abs(c)))
    assert n(x + y) <= n(x) + n(y) + 1e-9


def test_sandwich_by_norm(alg, cone, rng):
    e = jordan.random_interior(alg, rng, shift=0.5)
    ctx = O.make_context(cone, e)
    for x in rng.standard_normal((30, alg.dim)):
        lam = O.order_unit_norm(ctx, x)
        assert C.closure_member(cone, lam * e - x) and C.closure_member(cone, x + lam * e)


def test_euclidean_norm_bounded_by_order_unit_norm(alg, cone, rng):
    e = jordan.random_interior(alg, rng, shift=0.5)
    ctx = O.make_context(cone, e)
    V = rng.standard_normal((300, alg.dim))
    norms = O.order_unit_norms(ctx, V)
    assert np.all(np.linalg.norm(V, axis=1) <= np.sqrt(e @ e) * norms + 1e-9)


def test_positive_map_norm_examples():
    val, rep = O.positive_map_norm(ORTH2_CTX, np.eye(2), 200)
    assert val == pytest.approx(1.0, abs=1e-9) and rep.passed
    val, rep = O.positive_map_norm(ORTH2_CTX, np.diag([4.0, 9.0]), 200)
    assert val == pytest.approx(9.0, abs=1e-9) and rep.passed
    assert rep.details["sampled_sup"] <= 9 + 1e-9
    val, rep = O.positive_map_norm(SPIN3_CTX, spin3_rotation(0.8), 200)
    assert val == pytest.approx(1.0, abs=1e-9) and rep.passed


def test_positive_map_norm_rejects_non_positive():
    with pytest.raises(PositivityViolated) as exc:
        O.positive_map_norm(ORTH2_CTX, np.array([[0.0, -1], [1, 0]]), 100)
    assert exc.value.witness is not None


def test_positive_map_norm_of_quad_is_norm_of_square(alg, cone, rng):
    ctx = O.make_context(cone)
    a = jordan.random_interior(alg, rng)
    Q = jordan.quad(alg, a)
    val, rep = O.positive_map_norm(ctx, Q, 200)
    assert rep.passed
    assert val == pytest.approx(O.order_unit_norm(ctx, Q @ alg.identity), abs=2e-10)


def test_isometry_examples():
    assert O.isometry_criterion(ORTH2_CTX, np.eye(2)).fixes_unit
    rep = O.isometry_criterion(ORTH2_CTX, np.diag([2.0, 0.5]))
    assert not rep.fixes_unit and not rep.norm_preserved and rep.consistent
    w = rep.witness
    g = np.diag([2.0, 0.5])
    assert abs(O.order_unit_norm(ORTH2_CTX, g @ w) - O.order_unit_norm(ORTH2_CTX, w)) > 1e-3
    rep = O.isometry_criterion(SPIN3_CTX, spin3_rotation(2.0))
    assert rep.fixes_unit and rep.norm_preserved


def test_isometry_rejects_non_automorphism():
    with pytest.raises(NotAutomorphism):
        O.isometry_criterion(ORTH2_CTX, np.array([[0.0, -1], [1, 0]]))


def test_isometry_equivalence_sampled(alg, cone, rng):
    ctx = O.make_context(cone)
    for g in sampling.sample_k_elements(cone, rng, 4):
        rep = O.isometry_criterion(ctx, g, 50)
        assert rep.fixes_unit and rep.consistent
    for g in sampling.sample_automorphisms(cone, rng, 4):
        rep = O.isometry_criterion(ctx, g, 50)
        assert not rep.fixes_unit and rep.consistent and rep.witness is not None


def test_norm_equiv_examples():
    b = O.norm_equiv_bounds(ORTH2_CTX)
    assert b.alpha == pytest.approx(1 / np.sqrt(2))
    assert b.radius == pytest.approx(1.0, abs=1e-12)
    assert b.beta == pytest.approx(2.0, abs=1e-10)
    assert O.norm_equiv_bounds(SPIN3_CTX).alpha == pytest.approx(1.0)
    # true boundary distance of the Lorentz cone from its axis is 1/sqrt(2)
    r = O.norm_equiv_bounds(SPIN3_CTX).radius
    assert 1 / np.sqrt(2) - 1e-12 <= r <= 1 / np.sqrt(2) * 1.05


def test_norm_equiv_sandwich(alg, cone, rng):
    e = jordan.random_interior(alg, rng, shift=0.5)
    ctx = O.make_context(cone, e)
    b = O.norm_equiv_bounds(ctx, rng_seed=1)
    assert b.beta > b.alpha > 0
    V = rng.standard_normal((200, alg.dim))
    ratio = O.order_unit_norms(ctx, V) / np.linalg.norm(V, axis=1)
    assert np.all(ratio >= b.alpha - 1e-9) and np.all(ratio <= b.beta)


def test_k_orbit_sandwich_sampled(alg, cone, rng):
    e = jordan.random_interior(alg, rng, shift=0.5)
    ctx = O.make_context(cone, e)
    b = O.norm_equiv_bounds(ctx)
    for g in sampling.sample_k_elements(cone, rng, 20):
        assert O.sandwich_check(ctx, g, b).passed


def test_decompose_positive_examples():
    t = 1e-10
    x1, x2 = O.decompose_positive(ORTH2_CTX, np.array([1.0, 1.0]))
    np.testing.assert_allclose(x1 - x2, [1, 1], atol=1e-15)
    assert np.all(x1 >= 0) and np.all(x2 >= 0)
    x = np.array([1.0, -2.0])
    x1, x2 = O.decompose_positive(ORTH2_CTX, x)
    np.testing.assert_allclose(x1, [1.5, 0.0], atol=2 * t)
    np.testing.assert_allclose(x2, [0.5, 2.0], atol=2 * t)
    assert np.all(x1 >= 0) and np.all(x2 >= 0)
    assert np.array_equal(x1 - x2, x) or np.abs(x1 - x2 - x).max() < 1e-15
    x1, x2 = O.decompose_positive(ORTH2_CTX, np.zeros(2))
    np.testing.assert_allclose(x1, x2)
    assert x1[0] <= 2 * t and C.closure_member(ORTH2, x1)


def test_decompose_positive_all_families(alg, cone, rng):
    ctx = O.make_context(cone)
    for x in rng.standard_normal((10, alg.dim)):
        x1, x2 = O.decompose_positive(ctx, x)
        assert C.closure_member(cone, x1) and C.closure_member(cone, x2)
        np.testing.assert_allclose(x1 - x2, x, atol=1e-12)
