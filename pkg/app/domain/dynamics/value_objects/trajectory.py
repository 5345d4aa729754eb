"""
Trajectory Value Object
"""
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np


class TerminationReason(str, Enum):
    T_END = "t_end"
    ESCAPE = "escape"


@dataclass(frozen=True, eq=False)
class Trajectory:
    """
    Recorded states of one integration

    ``states`` has one row per entry of ``times``; ``log_volume`` is the
    integral of Div(Du) along the recorded states.
    """
    times: np.ndarray
    states: np.ndarray
    log_volume: np.ndarray
    terminated_by: TerminationReason
    variables: Tuple[str, ...]
    steps: int = 0

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        states = np.atleast_2d(np.asarray(self.states, dtype=float))
        log_volume = np.asarray(self.log_volume, dtype=float)
        if states.shape[0] != times.shape[0] or log_volume.shape[0] != times.shape[0]:
            raise ValueError("times, states and log_volume must have one entry per record")
        if times.size > 1 and not np.all(np.diff(times) > 0.0):
            raise ValueError("Trajectory times must be strictly increasing")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "log_volume", log_volume)
        object.__setattr__(self, "terminated_by", TerminationReason(self.terminated_by))
        object.__setattr__(self, "variables", tuple(self.variables))

    @property
    def initial_state(self) -> np.ndarray:
        return self.states[0]

    @property
    def final_state(self) -> np.ndarray:
        return self.states[-1]

    @property
    def final_time(self) -> float:
        return float(self.times[-1])

    @property
    def final_norm(self) -> float:
        return float(np.linalg.norm(self.states[-1]))

    def norms(self) -> np.ndarray:
        return np.linalg.norm(self.states, axis=1)

    def summary(self) -> dict:
        return {
            "records": int(self.times.size),
            "steps": self.steps,
            "final_time": self.final_time,
            "final_norm": self.final_norm,
            "terminated_by": self.terminated_by.value,
        }
