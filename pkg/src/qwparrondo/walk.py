"""
Two-state discrete-time quantum walk on the integer line.

The walker state holds the spin-up and spin-down amplitude fields on a
preallocated lattice ``x = -t_max .. t_max``; array index ``i`` maps to
``x = i - t_max``. One step applies a site-local coin and then the
spin-dependent shift (up moves right, down moves left).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np
from numpy.typing import NDArray

__all__ = [
    "CapacityError",
    "Spinor",
    "CoinMatrix",
    "WalkerState",
    "coin_matrix",
    "make_initial",
    "apply_coin",
    "apply_shift",
    "step",
]


class CapacityError(RuntimeError):
    """Raised when a shift would push nonzero amplitude off the lattice."""


class Spinor(NamedTuple):
    up: complex
    down: complex


@dataclass(frozen=True)
class CoinMatrix:
    """2x2 coin acting on the (up, down) spinor at each site.

    Column convention: ``|U> -> c_uu |U> + c_du |D>`` and
    ``|D> -> c_ud |U> + c_dd |D>``.
    """

    c_uu: complex
    c_ud: complex
    c_du: complex
    c_dd: complex

    def as_array(self) -> NDArray[np.complex128]:
        return np.array(
            [[self.c_uu, self.c_ud], [self.c_du, self.c_dd]], dtype=np.complex128
        )

    def is_unitary(self, tol: float = 1e-14) -> bool:
        m = self.as_array()
        return bool(np.max(np.abs(m.conj().T @ m - np.eye(2))) <= tol)


@dataclass
class WalkerState:
    """Amplitude field of the walker after ``t`` steps.

    ``radius`` bounds the support: every amplitude with ``|x| > radius`` is
    exactly zero. Stepping only touches sites inside it, so one step costs
    O(t) rather than O(t_max).
    """

    t: int
    t_max: int
    up: NDArray[np.complex128]
    down: NDArray[np.complex128]
    radius: int = 0

    def __post_init__(self) -> None:
        size = 2 * self.t_max + 1
        if self.up.shape != (size,) or self.down.shape != (size,):
            raise ValueError(
                f"amplitude arrays must have shape ({size},), "
                f"got {self.up.shape} and {self.down.shape}"
            )
        if not 0 <= self.radius <= self.t_max:
            raise ValueError(f"radius must lie in [0, {self.t_max}], got {self.radius}")

    @property
    def origin_offset(self) -> int:
        return self.t_max

    @property
    def positions(self) -> NDArray[np.int64]:
        return np.arange(-self.t_max, self.t_max + 1)

    def spinor(self, x: int) -> Spinor:
        if abs(x) > self.t_max:
            return Spinor(0j, 0j)
        i = x + self.t_max
        return Spinor(complex(self.up[i]), complex(self.down[i]))

    def norm(self) -> float:
        lo, hi = self.window()
        u, d = self.up[lo:hi], self.down[lo:hi]
        return float(np.sum(u.real**2 + u.imag**2 + d.real**2 + d.imag**2))

    def window(self) -> tuple[int, int]:
        """Index slice ``[lo, hi)`` covering the support."""
        return self.t_max - self.radius, self.t_max + self.radius + 1

    def field(self, radius: int) -> NDArray[np.complex128]:
        """Amplitudes on ``|x| <= radius`` as a ``(2, 2*radius+1)`` array.

        Sites beyond ``t_max`` are reported as zero, so states with
        different lattice sizes can be compared directly.
        """
        out = np.zeros((2, 2 * radius + 1), dtype=np.complex128)
        r = min(radius, self.t_max)
        src = slice(self.t_max - r, self.t_max + r + 1)
        dst = slice(radius - r, radius + r + 1)
        out[0, dst] = self.up[src]
        out[1, dst] = self.down[src]
        return out

    def copy(self) -> WalkerState:
        return WalkerState(self.t, self.t_max, self.up.copy(), self.down.copy(), self.radius)

    @classmethod
    def from_field(cls, up, down, t_max: int, t: int = 0) -> WalkerState:
        """Build a state from amplitude arrays centred on ``x = 0``.

        ``up`` and ``down`` have odd length ``2r+1`` and cover ``|x| <= r``.
        No normalization is applied.
        """
        up = np.asarray(up, dtype=np.complex128)
        down = np.asarray(down, dtype=np.complex128)
        if up.shape != down.shape or up.ndim != 1 or up.size % 2 == 0:
            raise ValueError("up and down must be 1-D arrays of equal odd length")
        r = up.size // 2
        if r > t_max:
            raise ValueError(f"field radius {r} exceeds t_max={t_max}")
        u = np.zeros(2 * t_max + 1, dtype=np.complex128)
        d = np.zeros_like(u)
        u[t_max - r : t_max + r + 1] = up
        d[t_max - r : t_max + r + 1] = down
        return cls(t, t_max, u, d, r)


def coin_matrix(theta: float) -> CoinMatrix:
    """Generalized Hadamard coin ``cos(theta) sigma_z + sin(theta) sigma_x``.

    ``theta`` is in radians; ``theta = pi/4`` gives the Hadamard matrix.
    """
    if not math.isfinite(theta):
        raise ValueError(f"coin angle must be finite, got {theta!r}")
    c, s = math.cos(theta), math.sin(theta)
    return CoinMatrix(complex(c), complex(s), complex(s), complex(-c))


InitialSpec = Union[str, Spinor, tuple]

_NAMED_SPINORS = {
    "up": Spinor(1 + 0j, 0j),
    "down": Spinor(0j, 1 + 0j),
    "symmetric": Spinor(1 / math.sqrt(2) + 0j, 1j / math.sqrt(2)),
}


def make_initial(kind: InitialSpec, t_max: int) -> WalkerState:
    """Walker localized at the origin.

    Parameters
    ----------
    kind : str or (complex, complex)
        ``"up"``, ``"down"``, ``"symmetric"`` (``(|U> + i|D>)/sqrt(2)``), or a
        custom ``(a_up, a_down)`` pair which is rescaled to unit norm.
    t_max : int
        Lattice half-width; the state can take at most ``t_max`` steps.

    Raises
    ------
    ValueError
        Unknown name, negative ``t_max``, or a custom spinor of zero norm.
    """
    if t_max < 0:
        raise ValueError(f"t_max must be non-negative, got {t_max}")
    if isinstance(kind, str):
        try:
            a, b = _NAMED_SPINORS[kind]
        except KeyError:
            raise ValueError(
                f"unknown initial state {kind!r}; expected one of {sorted(_NAMED_SPINORS)}"
            ) from None
    else:
        a, b = (complex(v) for v in kind)
        if not (math.isfinite(abs(a)) and math.isfinite(abs(b))):
            raise ValueError("custom spinor must be finite")
        n = math.sqrt(abs(a) ** 2 + abs(b) ** 2)
        if n == 0.0:
            raise ValueError("custom spinor has zero norm")
        a, b = a / n, b / n
    up = np.zeros(2 * t_max + 1, dtype=np.complex128)
    down = np.zeros_like(up)
    up[t_max] = a
    down[t_max] = b
    return WalkerState(0, t_max, up, down, 0)


def _coin_inplace(state: WalkerState, coin: CoinMatrix) -> None:
    lo, hi = state.window()
    u = state.up[lo:hi]
    d = state.down[lo:hi]
    new_u = coin.c_uu * u + coin.c_ud * d
    d[:] = coin.c_du * u + coin.c_dd * d
    u[:] = new_u


def _shift_inplace(state: WalkerState) -> None:
    n, r = state.t_max, state.radius
    if r == n:
        if state.up[-1] != 0 or state.down[0] != 0:
            raise CapacityError(
                f"amplitude at the lattice edge |x|={n} would leave the array; "
                "increase t_max"
            )
        lo, hi = 0, 2 * n + 1
        up_dst, down_dst = slice(1, hi), slice(0, hi - 1)
        up_src, down_src = slice(0, hi - 1), slice(1, hi)
    else:
        lo, hi = n - r, n + r + 1
        up_dst, down_dst = slice(lo + 1, hi + 1), slice(lo - 1, hi - 1)
        up_src = down_src = slice(lo, hi)
        state.radius = r + 1
    # up moves right, down moves left; the vacated edge sites become zero
    state.up[up_dst] = state.up[up_src]
    state.up[lo] = 0
    state.down[down_dst] = state.down[down_src]
    state.down[hi - 1] = 0


def apply_coin(state: WalkerState, coin: CoinMatrix) -> WalkerState:
    """Return a new state with ``coin`` applied at every site."""
    out = state.copy()
    _coin_inplace(out, coin)
    return out


def apply_shift(state: WalkerState) -> WalkerState:
    """Return a new state with up amplitudes moved to ``x+1`` and down to ``x-1``.

    The step counter is not advanced; :func:`step` does that.
    """
    out = state.copy()
    _shift_inplace(out)
    return out


def step(state: WalkerState, coin: CoinMatrix) -> WalkerState:
    """One walk step: coin, then shift. Advances ``t`` by one."""
    out = state.copy()
    step_inplace(out, coin)
    return out


def step_inplace(state: WalkerState, coin: CoinMatrix) -> None:
    _coin_inplace(state, coin)
    _shift_inplace(state)
    state.t += 1
