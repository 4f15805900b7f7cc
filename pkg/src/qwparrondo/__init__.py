"""Two-state discrete-time quantum walks with time-dependent coins and Parrondo games."""

from .observables import (
    Distribution,
    SeriesRecord,
    bias,
    delta_p,
    distribution,
    moment,
    p_max,
    series_record,
    temporal_average,
)
from .parrondo import DiagramCell, SweepConfig, classify, sweep
from .protocol import (
    AngleSchedule,
    Evolution,
    GameProtocol,
    alternating,
    angle_at,
    coin_at,
    evolve,
    single,
)
from .walk import (
    CapacityError,
    CoinMatrix,
    Spinor,
    WalkerState,
    apply_coin,
    apply_shift,
    coin_matrix,
    make_initial,
    step,
)

__version__ = "0.1.0"
