"""
Poincare recurrence detection on recorded trajectories
"""
from typing import List

import numpy as np

from app.domain.dynamics.value_objects import RecurrenceReport, Trajectory


def recurrence(trajectory: Trajectory, epsilon: float, t_min: float) -> RecurrenceReport:
    """
    Returns of x(t) to the open epsilon-ball around x(0) after t_min

    The path between records is the straight segment, so a return is
    found even when it falls between two records. Consecutive segments
    inside the ball form one return, reported at its closest approach.
    """
    if not epsilon > 0.0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")

    times = trajectory.times
    states = trajectory.states
    origin = states[0]
    if times.size < 2:
        return RecurrenceReport(epsilon, t_min, (), None, False)

    t0, t1 = times[:-1], times[1:]
    a, b = states[:-1] - origin, states[1:] - origin
    direction = b - a
    length_sq = np.sum(direction**2, axis=1)

    # 1. Part of each segment after t_min
    active = t1 > t_min
    s_low = np.clip((t_min - t0) / (t1 - t0), 0.0, 1.0)

    # 2. Closest point of each segment to the initial state
    with np.errstate(divide="ignore", invalid="ignore"):
        s_star = np.where(length_sq > 0.0, -np.sum(a * direction, axis=1) / length_sq, 0.0)
    s_star = np.clip(s_star, s_low, 1.0)
    closest = a + s_star[:, None] * direction
    distance = np.linalg.norm(closest, axis=1)
    when = t0 + s_star * (t1 - t0)

    if not np.any(active):
        return RecurrenceReport(epsilon, t_min, (), None, False)

    # 3. Episodes of consecutive in-ball segments
    inside = active & (distance < epsilon) & (when > t_min)
    return_times: List[float] = []
    k = 0
    count = inside.size
    while k < count:
        if not inside[k]:
            k += 1
            continue
        end = k
        while end + 1 < count and inside[end + 1]:
            end += 1
        best = k + int(np.argmin(distance[k : end + 1]))
        t_return = float(when[best])
        if not return_times or t_return > return_times[-1]:
            return_times.append(t_return)
        k = end + 1

    return RecurrenceReport(
        epsilon=epsilon,
        t_min=t_min,
        return_times=tuple(return_times),
        min_distance_after_t_min=float(np.min(distance[active])),
        verdict=bool(return_times),
    )
