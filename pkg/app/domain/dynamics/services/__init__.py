from .critical_points import (
    NewtonOptions,
    annotate_critical_point,
    find_critical_points,
    newton_solve,
)
from .flow import (
    conserved_drift,
    conserved_track,
    divergence_track,
    integrate,
    liouville_log_volume,
    utility_track,
)
from .integrators import FlowIntegrator, rk4_step, rkf45_step, safe_norm
from .monodromy import MonodromyTrack, ensemble_volume, monodromy_log_det, monodromy_track
from .recurrence import recurrence

__all__ = [
    "FlowIntegrator",
    "MonodromyTrack",
    "NewtonOptions",
    "annotate_critical_point",
    "conserved_drift",
    "conserved_track",
    "divergence_track",
    "ensemble_volume",
    "find_critical_points",
    "integrate",
    "liouville_log_volume",
    "monodromy_log_det",
    "monodromy_track",
    "newton_solve",
    "recurrence",
    "rk4_step",
    "rkf45_step",
    "safe_norm",
    "utility_track",
]
