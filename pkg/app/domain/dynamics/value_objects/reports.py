"""
Dynamics reports
"""
from dataclasses import asdict, dataclass, field
from typing import List, Optional, Tuple


@dataclass(frozen=True)
class RecurrenceReport:
    """Returns of a trajectory to the epsilon-ball around its initial state"""
    epsilon: float
    t_min: float
    return_times: Tuple[float, ...]
    min_distance_after_t_min: Optional[float]
    verdict: bool

    def __post_init__(self):
        times = tuple(float(t) for t in self.return_times)
        if any(t <= self.t_min for t in times):
            raise ValueError("Return times must exceed t_min")
        if any(b <= a for a, b in zip(times, times[1:])):
            raise ValueError("Return times must be increasing")
        object.__setattr__(self, "return_times", times)

    @property
    def return_count(self) -> int:
        return len(self.return_times)

    def to_dict(self) -> dict:
        data = asdict(self)
        data["return_times"] = list(self.return_times)
        data["return_count"] = self.return_count
        return data


@dataclass(frozen=True)
class PlayerHessianRange:
    player: str
    min_eigenvalue: float
    max_eigenvalue: float

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class CriticalPoint:
    """Zero of Du with second-order local-Nash diagnostics"""
    location: Tuple[float, ...]
    gradient_norm: float
    hessian_ranges: Tuple[PlayerHessianRange, ...]
    local_ne_candidate: bool
    flatness: float

    def to_dict(self) -> dict:
        return {
            "location": list(self.location),
            "gradient_norm": self.gradient_norm,
            "hessian_ranges": [r.to_dict() for r in self.hessian_ranges],
            "local_ne_candidate": self.local_ne_candidate,
            "flatness": self.flatness,
        }


@dataclass(frozen=True)
class CriticalPointSearch:
    points: Tuple[CriticalPoint, ...]
    seeds: int
    converged_seeds: int
    non_converged_seeds: int
    tolerance: float
    outside_box: int = 0

    def to_dict(self) -> dict:
        return {
            "points": [p.to_dict() for p in self.points],
            "seeds": self.seeds,
            "converged_seeds": self.converged_seeds,
            "non_converged_seeds": self.non_converged_seeds,
            "tolerance": self.tolerance,
            "outside_box": self.outside_box,
        }


@dataclass(frozen=True)
class EnsembleVolumeReport:
    """Volume change of a cloud of initial states under the flow"""
    t_end: float
    log_dets: Tuple[float, ...]
    mean_log_det: float
    max_abs_log_det: float
    escaped: int
    hull_area_start: Optional[float] = None
    hull_area_end: Optional[float] = None
    final_states: List[Tuple[float, ...]] = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {
            "t_end": self.t_end,
            "log_dets": list(self.log_dets),
            "mean_log_det": self.mean_log_det,
            "max_abs_log_det": self.max_abs_log_det,
            "escaped": self.escaped,
            "hull_area_start": self.hull_area_start,
            "hull_area_end": self.hull_area_end,
        }
