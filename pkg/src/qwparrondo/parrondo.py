"""
Parrondo classification of (theta_A, theta_B) pairs and the phase-diagram sweep.

For each pair three walks are run from the same initial state: game A alone,
game B alone, and the alternation A/B. Each is summarized by its rightward
bias averaged over the steps after the transient. A pair is ``parrondo``
when both single games lose (bias < -epsilon) and the alternation wins
(bias > epsilon); ``anti_parrondo`` is the mirror case.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Literal, Optional, Sequence

from .observables import state_bias, temporal_average
from .protocol import GameProtocol, ScheduleMode, alternating, evolve, single
from .walk import InitialSpec, make_initial

__all__ = [
    "SweepConfig",
    "DiagramCell",
    "averaged_bias",
    "classify_biases",
    "classify",
    "sweep",
    "PARRONDO",
    "ANTI_PARRONDO",
    "NONE",
]

log = logging.getLogger(__name__)

PARRONDO = "parrondo"
ANTI_PARRONDO = "anti_parrondo"
NONE = "none"
Classification = Literal["parrondo", "anti_parrondo", "none"]


@dataclass(frozen=True)
class SweepConfig:
    theta_grid: tuple[float, ...] = tuple(float(d) for d in range(1, 90))
    t_max: int = 1000
    transient: Optional[int] = None
    epsilon: float = 1 / 3
    initial: InitialSpec = "up"
    schedule: ScheduleMode = "linear"
    clock_offset: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "theta_grid", tuple(float(v) for v in self.theta_grid))
        if self.t_max < 1:
            raise ValueError(f"t_max must be >= 1, got {self.t_max}")
        if self.transient is None:
            object.__setattr__(self, "transient", self.t_max // 2)
        if not 0 <= self.transient < self.t_max:
            raise ValueError(f"transient must lie in [0, t_max), got {self.transient}")
        if not 0 < self.epsilon < 1:
            raise ValueError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if not all(math.isfinite(v) for v in self.theta_grid):
            raise ValueError("grid angles must be finite")

    def single(self, theta_deg: float) -> GameProtocol:
        return single(theta_deg, self.schedule, self.clock_offset)

    def alternating(self, theta_a_deg: float, theta_b_deg: float) -> GameProtocol:
        return alternating(theta_a_deg, theta_b_deg, self.schedule, self.clock_offset)


@dataclass(frozen=True)
class DiagramCell:
    theta_a: float
    theta_b: float
    bias_a: float
    bias_b: float
    bias_combined: float
    classification: Classification


def averaged_bias(protocol: GameProtocol, cfg: SweepConfig) -> float:
    """Rightward bias of one walk averaged over ``t > cfg.transient``."""
    transient = cfg.transient

    def observe(state):
        return (state.t, state_bias(state)) if state.t > transient else None

    ev = evolve(make_initial(cfg.initial, cfg.t_max), protocol, cfg.t_max, observe)
    return temporal_average([r for r in ev.records if r is not None], transient)


def classify_biases(
    bias_a: float, bias_b: float, bias_combined: float, epsilon: float
) -> Classification:
    if bias_a < -epsilon and bias_b < -epsilon and bias_combined > epsilon:
        return PARRONDO
    if bias_a > epsilon and bias_b > epsilon and bias_combined < -epsilon:
        return ANTI_PARRONDO
    return NONE


def classify(theta_a: float, theta_b: float, cfg: SweepConfig) -> DiagramCell:
    """Run the three walks for one pair of base angles (degrees) and classify."""
    ba = averaged_bias(cfg.single(theta_a), cfg)
    bb = ba if theta_b == theta_a else averaged_bias(cfg.single(theta_b), cfg)
    bc = averaged_bias(cfg.alternating(theta_a, theta_b), cfg)
    return DiagramCell(theta_a, theta_b, ba, bb, bc, classify_biases(ba, bb, bc, cfg.epsilon))


def _single_task(args: tuple[float, SweepConfig]) -> float:
    theta, cfg = args
    return averaged_bias(cfg.single(theta), cfg)


def _combined_task(args: tuple[float, float, SweepConfig]) -> float:
    a, b, cfg = args
    return averaged_bias(cfg.alternating(a, b), cfg)


def _parallel_map(fn, items: Sequence, workers: int) -> list:
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    chunk = max(1, len(items) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def sweep(cfg: SweepConfig, workers: int = 1) -> list[DiagramCell]:
    """Classify every ``(theta_a, theta_b)`` pair of ``cfg.theta_grid``.

    Cells come back in row-major order (``theta_a`` outer). Single-game
    biases are computed once per distinct angle. Diagonal cells reuse them,
    since alternating a game with itself is the game itself. Every walk is
    computed by the same sequential code whatever ``workers`` is, so results
    are bit-identical across worker counts.
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    grid = cfg.theta_grid
    if not grid:
        raise ValueError("theta grid is empty")

    distinct = list(dict.fromkeys(grid))
    log.info("sweep: %d single games, %d pairs", len(distinct), len(grid) ** 2)
    singles = dict(zip(distinct, _parallel_map(_single_task, [(a, cfg) for a in distinct], workers)))

    pairs = [(a, b) for a in grid for b in grid]
    todo = [(a, b, cfg) for a, b in pairs if a != b]
    combined = dict(zip(((a, b) for a, b, _ in todo), _parallel_map(_combined_task, todo, workers)))

    cells = []
    for a, b in pairs:
        ba, bb = singles[a], singles[b]
        bc = singles[a] if a == b else combined[(a, b)]
        cells.append(DiagramCell(a, b, ba, bb, bc, classify_biases(ba, bb, bc, cfg.epsilon)))
    return cells


def parrondo_cells(cells: Iterable[DiagramCell]) -> list[DiagramCell]:
    return [c for c in cells if c.classification == PARRONDO]
