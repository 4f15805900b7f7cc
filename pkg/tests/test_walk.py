import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qwparrondo.oracle import oracle_evolve
from qwparrondo.protocol import single
from qwparrondo.walk import (
    CapacityError,
    Spinor,
    WalkerState,
    apply_coin,
    apply_shift,
    coin_matrix,
    make_initial,
    step,
)

R2 = 1 / math.sqrt(2)
angles = st.floats(-4 * math.pi, 4 * math.pi, allow_nan=False)


@pytest.mark.parametrize(
    "theta, expected",
    [
        (0.0, [[1, 0], [0, -1]]),
        (math.pi / 2, [[0, 1], [1, 0]]),
        (math.pi / 4, [[R2, R2], [R2, -R2]]),
    ],
)
def test_coin_matrix_values(theta, expected):
    np.testing.assert_allclose(coin_matrix(theta).as_array(), expected, atol=1e-16)


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_coin_matrix_rejects_nonfinite(bad):
    with pytest.raises(ValueError):
        coin_matrix(bad)


@given(angles)
def test_coin_unitary_hermitian_involution(theta):
    c = coin_matrix(theta)
    m = c.as_array()
    assert c.is_unitary(1e-14)
    np.testing.assert_allclose(m, m.conj().T, atol=0)
    assert np.max(np.abs(m @ m - np.eye(2))) <= 1e-14


def test_make_initial_named():
    s = make_initial("up", 3)
    assert s.spinor(0) == Spinor(1, 0)
    assert s.norm() == 1.0 and s.t == 0
    assert np.count_nonzero(s.up) + np.count_nonzero(s.down) == 1

    sym = make_initial("symmetric", 3).spinor(0)
    assert sym.up == pytest.approx(R2, abs=1e-16)
    assert sym.down == pytest.approx(1j * R2, abs=1e-16)

    d = make_initial("down", 0)
    assert d.spinor(0) == Spinor(0, 1) and d.up.size == 1


def test_make_initial_custom_rescaled():
    s = make_initial((3, 4j), 2)
    assert s.spinor(0).up == pytest.approx(0.6, abs=1e-16)
    assert s.spinor(0).down == pytest.approx(0.8j, abs=1e-16)
    assert abs(s.norm() - 1) <= 1e-15


@pytest.mark.parametrize("kind", [(0, 0), "sideways"])
def test_make_initial_rejects(kind):
    with pytest.raises(ValueError):
        make_initial(kind, 2)


def test_apply_coin_examples():
    up = make_initial("up", 2)
    assert apply_coin(up, coin_matrix(0.0)).spinor(0) == Spinor(1, 0)

    s = apply_coin(up, coin_matrix(math.pi / 3)).spinor(0)
    assert s.up == pytest.approx(0.5, abs=1e-15)
    assert s.down == pytest.approx(math.sqrt(3) / 2, abs=1e-15)

    flipped = apply_coin(make_initial("down", 2), coin_matrix(math.pi / 2)).spinor(0)
    assert flipped.up == pytest.approx(1, abs=1e-16)
    assert flipped.down == pytest.approx(0, abs=1e-16)


def test_apply_coin_does_not_mutate_input():
    up = make_initial("up", 2)
    apply_coin(up, coin_matrix(1.0))
    assert up.spinor(0) == Spinor(1, 0)


def test_apply_shift_examples():
    s = apply_shift(make_initial("up", 2))
    assert s.spinor(1) == Spinor(1, 0) and s.spinor(0) == Spinor(0, 0)
    s = apply_shift(make_initial("down", 2))
    assert s.spinor(-1) == Spinor(0, 1)
    s = apply_shift(make_initial((1, 1), 2))
    assert s.spinor(1).up == pytest.approx(R2) and s.spinor(-1).down == pytest.approx(R2)
    assert s.spinor(0) == Spinor(0, 0)


def test_shift_capacity_error():
    s = make_initial("up", 1)
    s = step(s, coin_matrix(0.0))
    with pytest.raises(CapacityError):
        step(s, coin_matrix(0.0))


def test_shift_at_full_radius_keeps_inner_amplitude():
    # down amplitude at the right edge moves inward, nothing reaches the far edges
    s = WalkerState.from_field([0, 0, 0], [0, 0, 1], t_max=1)
    out = apply_shift(s)
    assert out.spinor(0) == Spinor(0, 1)
    assert out.norm() == 1.0
    s = WalkerState.from_field([1, 0, 0], [0, 0, 0], t_max=1)
    assert apply_shift(s).spinor(0) == Spinor(1, 0)


def test_step_right_mover():
    s = make_initial("up", 10)
    for n in range(1, 11):
        s = step(s, coin_matrix(0.0))
        assert s.t == n
        assert s.spinor(n) == Spinor(1, 0)
        assert s.norm() == 1.0


def test_step_single_pi_over_3():
    s = step(make_initial("up", 3), coin_matrix(math.pi / 3))
    assert s.spinor(1).up == pytest.approx(0.5, abs=1e-15)
    assert s.spinor(-1).down == pytest.approx(math.sqrt(3) / 2, abs=1e-15)
    assert abs(s.spinor(1).up) ** 2 == pytest.approx(0.25, abs=1e-15)
    assert abs(s.spinor(-1).down) ** 2 == pytest.approx(0.75, abs=1e-15)


def test_step_two_hadamard_steps_hand_and_oracle():
    # hand application: P(2) = P(-2) = 1/4, P(0) = 1/2
    H = coin_matrix(math.pi / 4)
    s = step(step(make_initial("up", 4), H), H)
    p = np.abs(s.up) ** 2 + np.abs(s.down) ** 2
    np.testing.assert_allclose(p[4 - 2 : 4 + 3], [0.25, 0, 0.5, 0, 0.25], atol=1e-15)
    ref = oracle_evolve(make_initial("up", 4), single(45, "static"), 2, 4)
    np.testing.assert_allclose(s.field(4), ref.field(4), rtol=0, atol=1e-15)


def _random_field(rng, r):
    return (rng.normal(size=2 * r + 1) + 1j * rng.normal(size=2 * r + 1),
            rng.normal(size=2 * r + 1) + 1j * rng.normal(size=2 * r + 1))


@settings(max_examples=50)
@given(st.integers(0, 2**32 - 1), angles)
def test_step_linearity(seed, theta):
    rng = np.random.default_rng(seed)
    a, b = complex(*rng.normal(size=2)), complex(*rng.normal(size=2))
    u1, d1 = _random_field(rng, 3)
    u2, d2 = _random_field(rng, 3)
    s1 = WalkerState.from_field(u1, d1, t_max=5)
    s2 = WalkerState.from_field(u2, d2, t_max=5)
    mix = WalkerState.from_field(a * u1 + b * u2, a * d1 + b * d2, t_max=5)
    c = coin_matrix(theta)
    lhs = step(mix, c).field(5)
    rhs = a * step(s1, c).field(5) + b * step(s2, c).field(5)
    assert np.max(np.abs(lhs - rhs)) <= 1e-14 * max(1.0, np.max(np.abs(rhs)))


@settings(max_examples=50)
@given(angles, st.sampled_from(["up", "down", "symmetric"]))
def test_coin_twice_is_identity(theta, kind):
    s = apply_shift(apply_coin(make_initial(kind, 3), coin_matrix(0.3)))
    c = coin_matrix(theta)
    back = apply_coin(apply_coin(s, c), c)
    assert np.max(np.abs(back.field(3) - s.field(3))) <= 1e-14


@settings(max_examples=25, deadline=None)
@given(st.lists(angles, min_size=1, max_size=60), st.sampled_from(["up", "down", "symmetric"]))
def test_norm_light_cone_parity(thetas, kind):
    n = len(thetas)
    s = make_initial(kind, n)
    xs = np.arange(-n, n + 1)
    for t, th in enumerate(thetas, start=1):
        s = step(s, coin_matrix(th))
        assert abs(s.norm() - 1) <= 1e-12
        dead = (np.abs(xs) > t) | ((xs + t) % 2 == 1)
        assert not np.any(s.up[dead]) and not np.any(s.down[dead])
