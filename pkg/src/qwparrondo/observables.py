"""Position distribution, probability current and moments of a walker state."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numpy.typing import NDArray

from .walk import WalkerState

__all__ = [
    "Distribution",
    "SeriesRecord",
    "distribution",
    "p_max",
    "bias",
    "delta_p",
    "moment",
    "series_record",
    "state_bias",
    "temporal_average",
]


@dataclass(frozen=True)
class Distribution:
    """Site probabilities ``p[i]`` for ``x = i - t_max``."""

    p: NDArray[np.float64]
    t: int

    @property
    def t_max(self) -> int:
        return self.p.size // 2

    @property
    def positions(self) -> NDArray[np.int64]:
        return np.arange(-self.t_max, self.t_max + 1)

    def at(self, x: int) -> float:
        if abs(x) > self.t_max:
            return 0.0
        return float(self.p[x + self.t_max])


@dataclass(frozen=True)
class SeriesRecord:
    t: int
    bias: float
    m1: float
    m2: float
    p_max: float

    @property
    def delta_p(self) -> float:
        """Current in the ``P_L - P_R`` sign convention."""
        return -self.bias


def distribution(state: WalkerState) -> Distribution:
    u, d = state.up, state.down
    p = u.real**2 + u.imag**2 + d.real**2 + d.imag**2
    return Distribution(p, state.t)


def p_max(dist: Distribution) -> float:
    return float(np.max(dist.p))


def bias(dist: Distribution) -> float:
    """Net rightward probability ``P(x > 0) - P(x < 0)``; the origin counts for neither."""
    n = dist.t_max
    return float(np.sum(dist.p[n + 1 :]) - np.sum(dist.p[:n]))


def delta_p(dist: Distribution) -> float:
    """``P(x < 0) - P(x > 0)``, the negation of :func:`bias`."""
    return -bias(dist)


def moment(dist: Distribution, n: int) -> float:
    if n < 1:
        raise ValueError(f"moment order must be >= 1, got {n}")
    x = dist.positions.astype(np.float64)
    return float(np.sum(x**n * dist.p))


def state_bias(state: WalkerState) -> float:
    """:func:`bias` restricted to the state's support window.

    Cheaper than building the full distribution; this is the per-step
    observer used by sweeps.
    """
    n = state.t_max
    lo, hi = state.window()
    ur, ul = state.up[n + 1 : hi], state.up[lo:n]
    dr, dl = state.down[n + 1 : hi], state.down[lo:n]
    right = np.sum(ur.real**2 + ur.imag**2 + dr.real**2 + dr.imag**2)
    left = np.sum(ul.real**2 + ul.imag**2 + dl.real**2 + dl.imag**2)
    return float(right - left)


def series_record(state: WalkerState) -> SeriesRecord:
    dist = distribution(state)
    return SeriesRecord(
        t=state.t,
        bias=bias(dist),
        m1=moment(dist, 1),
        m2=moment(dist, 2),
        p_max=p_max(dist),
    )


def temporal_average(series: Sequence, transient: int) -> float:
    """Mean bias over records with ``t > transient``.

    ``series`` holds :class:`SeriesRecord` objects, or ``(t, bias)`` pairs.

    Raises
    ------
    ValueError
        If no record lies past the transient.
    """
    values = []
    for rec in series:
        t, b = (rec.t, rec.bias) if isinstance(rec, SeriesRecord) else rec
        if t > transient:
            values.append(b)
    if not values:
        raise ValueError(f"no records with t > {transient}; nothing to average")
    return float(np.mean(values))
