"""
Command-line front end.

    qwparrondo simulate --protocol alternating --theta-a 60 --theta-b 36 --tmax 1000
    qwparrondo carpet --theta-a 60 --tmax 100 --output carpet.csv
    qwparrondo sweep --grid 1:89:1 --tmax 1000 --workers 8 --output diagram.csv

Angles are in degrees. Exit status: 0 on success, 2 on usage errors, 1 on
runtime errors.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from typing import Optional, Sequence

import numpy as np

from . import observables as obs
from .parrondo import SweepConfig, sweep
from .protocol import GameProtocol, alternating, evolve, single
from .tables import render_table
from .walk import CapacityError, Spinor, make_initial

log = logging.getLogger("qwparrondo")

SERIES_COLUMNS = ("t", "delta_p", "bias", "m1", "m2", "p_max")
CARPET_COLUMNS = ("t", "x", "p", "p_normalized")
DIAGRAM_COLUMNS = ("theta_a_deg", "theta_b_deg", "bias_a", "bias_b", "bias_combined", "class")


def parse_angle(text: str) -> float:
    v = float(text)
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"angle must be finite: {text!r}")
    return v % 360.0


def parse_initial(text: str):
    if text in ("up", "down", "symmetric"):
        return text
    if text.startswith("custom:"):
        parts = text[len("custom:") :].split(",")
        if len(parts) != 4:
            raise argparse.ArgumentTypeError(
                "custom initial state takes four numbers: custom:re_u,im_u,re_d,im_d"
            )
        try:
            re_u, im_u, re_d, im_d = (float(p) for p in parts)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad number in {text!r}") from None
        spinor = Spinor(complex(re_u, im_u), complex(re_d, im_d))
        if not all(math.isfinite(abs(a)) for a in spinor):
            raise argparse.ArgumentTypeError("custom spinor must be finite")
        if abs(spinor.up) == 0 and abs(spinor.down) == 0:
            raise argparse.ArgumentTypeError("custom spinor has zero norm")
        return spinor
    raise argparse.ArgumentTypeError(
        f"initial state must be up, down, symmetric or custom:re_u,im_u,re_d,im_d; got {text!r}"
    )


def parse_grid(text: str) -> tuple[float, ...]:
    """``start:stop:step`` in degrees, stop inclusive."""
    try:
        start, stop, stride = (float(p) for p in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must be start:stop:step, got {text!r}") from None
    if not all(math.isfinite(v) for v in (start, stop, stride)) or stride <= 0 or stop < start:
        raise argparse.ArgumentTypeError(f"invalid grid {text!r}")
    n = int(math.floor((stop - start) / stride + 1e-9)) + 1
    return tuple((start + k * stride) % 360.0 for k in range(n))


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {text}")
    return v


def _open_unit(text: str) -> float:
    v = float(text)
    if not 0 < v < 1:
        raise argparse.ArgumentTypeError(f"expected a value in (0, 1), got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwparrondo",
        description="Two-state quantum walks with time-dependent coins and Parrondo games.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--protocol", choices=("single", "alternating"), default="single")
    common.add_argument("--schedule", choices=("linear", "static"), default="linear")
    common.add_argument("--theta-a", type=parse_angle, default=60.0, metavar="DEG")
    common.add_argument("--theta-b", type=parse_angle, default=36.0, metavar="DEG")
    common.add_argument("--tmax", type=_positive_int, default=1000)
    common.add_argument("--initial", type=parse_initial, default="up", metavar="SPEC",
                        help="up, down, symmetric or custom:re_u,im_u,re_d,im_d")
    common.add_argument("--clock-offset", type=int, default=1, choices=(0, 1),
                        help="first linear-schedule multiplier: theta_t = (t + offset) * theta")
    common.add_argument("--output", default="-", help="output file ('-' for stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("-v", "--verbose", action="store_true")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("simulate", parents=[common], help="per-step current and moments")
    sub.add_parser("carpet", parents=[common], help="space-time probability map")
    sw = sub.add_parser("sweep", parents=[common], help="(theta_A, theta_B) Parrondo diagram")
    sw.add_argument("--grid", type=parse_grid, default=parse_grid("1:89:1"), metavar="START:STOP:STEP")
    sw.add_argument("--epsilon", type=_open_unit, default=1 / 3)
    sw.add_argument("--transient-frac", type=_open_unit, default=0.5)
    sw.add_argument("--workers", type=_positive_int, default=1)
    return parser


def protocol_from_args(args) -> GameProtocol:
    if args.protocol == "single":
        return single(args.theta_a, args.schedule, args.clock_offset)
    return alternating(args.theta_a, args.theta_b, args.schedule, args.clock_offset)


def simulate_rows(args) -> list[tuple]:
    ev = evolve(make_initial(args.initial, args.tmax), protocol_from_args(args), args.tmax,
                obs.series_record)
    return [(r.t, r.delta_p, r.bias, r.m1, r.m2, r.p_max) for r in ev.records]


def carpet_rows(args) -> list[tuple]:
    rows: list[tuple] = []

    def emit(state):
        p = obs.distribution(state).p
        peak = float(np.max(p))
        for i in np.flatnonzero(p > 0):
            rows.append((state.t, int(i) - state.t_max, float(p[i]), float(p[i] / peak)))

    init = make_initial(args.initial, args.tmax)
    emit(init)
    evolve(init, protocol_from_args(args), args.tmax, emit)
    return rows


def sweep_rows(args) -> list[tuple]:
    cfg = SweepConfig(
        theta_grid=args.grid,
        t_max=args.tmax,
        transient=int(args.transient_frac * args.tmax),
        epsilon=args.epsilon,
        initial=args.initial,
        schedule=args.schedule,
        clock_offset=args.clock_offset,
    )
    return [
        (c.theta_a, c.theta_b, c.bias_a, c.bias_b, c.bias_combined, c.classification)
        for c in sweep(cfg, workers=args.workers)
    ]


COMMANDS = {
    "simulate": (SERIES_COLUMNS, simulate_rows),
    "carpet": (CARPET_COLUMNS, carpet_rows),
    "sweep": (DIAGRAM_COLUMNS, sweep_rows),
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command == "sweep" and int(args.transient_frac * args.tmax) >= args.tmax:
        parser.error("transient must leave at least one step to average")

    columns, make_rows = COMMANDS[args.command]
    try:
        text = render_table(columns, make_rows(args), args.format)
    except (CapacityError, ValueError) as exc:
        print(f"qwparrondo: error: {exc}", file=sys.stderr)
        return 1

    if args.output == "-":
        sys.stdout.write(text)
        return 0
    try:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"qwparrondo: cannot write {args.output}: {exc}", file=sys.stderr)
        return 1
    log.info("wrote %s", args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
