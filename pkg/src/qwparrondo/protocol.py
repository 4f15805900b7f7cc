"""
Coin-angle schedules and the two-game alternation rule.

A game is an angle schedule: ``linear`` gives ``theta_t = (t + offset) * base``
(``offset = 1`` by default, so the first coin uses ``1 * base``), ``static``
gives ``theta_t = base`` for every step. The alternating protocol plays
game A on even steps and game B on odd steps, with ``t`` the global step
counter.

Base angles are kept in degrees and each ``theta_t`` is reduced modulo 360
before conversion to radians. For integer (or dyadic) degree inputs this is
exact, so ``base`` and ``base + 360`` give bit-identical coins at every ``t``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Literal, Optional

from .walk import CoinMatrix, WalkerState, coin_matrix, step_inplace

__all__ = [
    "AngleSchedule",
    "GameProtocol",
    "Evolution",
    "single",
    "alternating",
    "angle_at",
    "coin_at",
    "evolve",
]

ScheduleMode = Literal["linear", "static"]


@dataclass(frozen=True)
class AngleSchedule:
    mode: ScheduleMode
    base_deg: float
    offset: int = 1

    def __post_init__(self) -> None:
        if self.mode not in ("linear", "static"):
            raise ValueError(f"schedule mode must be 'linear' or 'static', got {self.mode!r}")
        if not math.isfinite(self.base_deg):
            raise ValueError(f"base angle must be finite, got {self.base_deg!r}")

    def degrees_at(self, t: int) -> float:
        if self.mode == "static":
            return self.base_deg % 360.0
        return ((t + self.offset) * self.base_deg) % 360.0


@dataclass(frozen=True)
class GameProtocol:
    kind: Literal["single", "alternating"]
    schedule_a: AngleSchedule
    schedule_b: Optional[AngleSchedule] = None

    def __post_init__(self) -> None:
        if self.kind not in ("single", "alternating"):
            raise ValueError(f"protocol kind must be 'single' or 'alternating', got {self.kind!r}")
        if self.kind == "alternating" and self.schedule_b is None:
            raise ValueError("alternating protocol needs schedule_b")


def single(theta_deg: float, mode: ScheduleMode = "linear", offset: int = 1) -> GameProtocol:
    return GameProtocol("single", AngleSchedule(mode, theta_deg, offset))


def alternating(
    theta_a_deg: float, theta_b_deg: float, mode: ScheduleMode = "linear", offset: int = 1
) -> GameProtocol:
    return GameProtocol(
        "alternating",
        AngleSchedule(mode, theta_a_deg, offset),
        AngleSchedule(mode, theta_b_deg, offset),
    )


def angle_at(protocol: GameProtocol, t: int) -> float:
    """Coin angle in radians applied at step ``t`` (the step ``t -> t+1``)."""
    if t < 0:
        raise ValueError(f"step index must be non-negative, got {t}")
    sched = protocol.schedule_a
    if protocol.kind == "alternating" and t % 2 == 1:
        sched = protocol.schedule_b
    return math.radians(sched.degrees_at(t))


def coin_at(protocol: GameProtocol, t: int) -> CoinMatrix:
    return coin_matrix(angle_at(protocol, t))


@dataclass
class Evolution:
    """Final state plus whatever the observer returned after each step."""

    state: WalkerState
    records: list[Any] = field(default_factory=list)


def evolve(
    initial: WalkerState,
    protocol: GameProtocol,
    steps: int,
    observer: Optional[Callable[[WalkerState], Any]] = None,
) -> Evolution:
    """Run ``steps`` walk steps from ``initial`` (which is left untouched).

    The coin for each step is ``coin_at(protocol, state.t)``. ``observer`` is
    called with the current state after every step and must not modify it;
    its return values are collected in ``Evolution.records``.
    """
    if steps < 0:
        raise ValueError(f"number of steps must be non-negative, got {steps}")
    state = initial.copy()
    records = []
    for _ in range(steps):
        step_inplace(state, coin_at(protocol, state.t))
        if observer is not None:
            records.append(observer(state))
    return Evolution(state, records)
