"""
Dense-matrix reference walk for cross-checking the stepping kernel.

The walk operator is assembled literally as ``shift @ kron(I, coin)`` on the
basis ``(x, spin)`` ordered lexicographically, index ``2 * (x + L) + s`` with
``s = 0`` for up and ``1`` for down. Shifts that would leave ``|x| <= L`` are
dropped (zero rows), so results are exact only while the support stays
strictly inside the box; :func:`oracle_evolve` enforces that.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import NDArray

from .protocol import GameProtocol, angle_at
from .walk import WalkerState, coin_matrix

__all__ = ["build_walk_matrix", "oracle_evolve", "interior_unitarity_error"]


def build_walk_matrix(theta: float, L: int) -> NDArray[np.complex128]:
    if L < 1:
        raise ValueError(f"lattice radius must be >= 1, got {L}")
    sites = 2 * L + 1
    dim = 2 * sites
    coin = coin_matrix(theta).as_array()
    coin_full = np.kron(np.eye(sites), coin)

    shift = np.zeros((dim, dim), dtype=np.complex128)
    for i in range(sites):
        if i + 1 < sites:
            shift[2 * (i + 1), 2 * i] = 1.0
        if i - 1 >= 0:
            shift[2 * (i - 1) + 1, 2 * i + 1] = 1.0
    return shift @ coin_full


def interior_unitarity_error(W: NDArray[np.complex128], L: int) -> float:
    """Max deviation of ``W^H W`` from identity on sites ``|x| <= L - 1``."""
    inner = np.arange(2, 2 * (2 * L + 1) - 2)
    G = W[:, inner].conj().T @ W[:, inner]
    return float(np.max(np.abs(G - np.eye(inner.size))))


def _pack(state: WalkerState, L: int) -> NDArray[np.complex128]:
    f = state.field(L)
    vec = np.empty(2 * (2 * L + 1), dtype=np.complex128)
    vec[0::2] = f[0]
    vec[1::2] = f[1]
    return vec


def oracle_evolve(
    initial: WalkerState, protocol: GameProtocol, T: int, L: int
) -> WalkerState:
    """Evolve by dense matrix-vector products; returns a state with ``t_max = L``.

    Raises
    ------
    ValueError
        If the light cone of ``initial`` after ``T`` steps would reach past ``L``.
    """
    if T < 0:
        raise ValueError(f"T must be non-negative, got {T}")
    if T > L or initial.radius + T > L:
        raise ValueError(
            f"T={T} steps from support radius {initial.radius} exceeds oracle box L={L}"
        )
    vec = _pack(initial, L)
    for k in range(T):
        t = initial.t + k
        vec = build_walk_matrix(angle_at(protocol, t), L) @ vec
    return WalkerState(
        initial.t + T, L, vec[0::2].copy(), vec[1::2].copy(), min(initial.radius + T, L)
    )
