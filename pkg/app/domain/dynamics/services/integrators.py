"""
Explicit Runge-Kutta integrators for autonomous systems y' = f(y)

Classical RK4 with a fixed step, and the Fehlberg 4(5) pair with a PI step
controller. The 4th order solution is propagated; the embedded 5th order
solution only estimates the local error.
"""
import math
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np

from app.core.exceptions import IntegrationError
from app.domain.dynamics.value_objects import IntegrationMethod, IntegratorConfig, TerminationReason

RightHandSide = Callable[[np.ndarray], np.ndarray]
# Applied to every accepted state together with its time
PostStep = Callable[[np.ndarray, float], np.ndarray]

# Fehlberg tableau
_A = (
    (),
    (1 / 4,),
    (3 / 32, 9 / 32),
    (1932 / 2197, -7200 / 2197, 7296 / 2197),
    (439 / 216, -8.0, 3680 / 513, -845 / 4104),
    (-8 / 27, 2.0, -3544 / 2565, 1859 / 4104, -11 / 40),
)
_B4 = np.array([25 / 216, 0.0, 1408 / 2565, 2197 / 4104, -1 / 5, 0.0])
# b5 - b4, local truncation error weights
_TR = np.array([1 / 360, 0.0, -128 / 4275, -2197 / 75240, 1 / 50, 2 / 55])

SAFETY = 0.9
FACTOR_MIN = 0.2
FACTOR_MAX = 5.0
# PI controller exponents for a 4th order propagator
BETA_1 = 0.7 / 5.0
BETA_2 = 0.4 / 5.0


@dataclass
class IntegrationRun:
    times: np.ndarray
    states: np.ndarray
    steps: int
    terminated_by: TerminationReason


def safe_norm(v: np.ndarray) -> float:
    """Euclidean norm that does not overflow for finite entries up to the float maximum"""
    scale = float(np.max(np.abs(v))) if v.size else 0.0
    if scale == 0.0 or not math.isfinite(scale):
        return scale
    return scale * float(np.linalg.norm(v / scale))


def rk4_step(f: RightHandSide, y: np.ndarray, h: float) -> np.ndarray:
    k1 = f(y)
    k2 = f(y + 0.5 * h * k1)
    k3 = f(y + 0.5 * h * k2)
    k4 = f(y + h * k3)
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def rkf45_step(f: RightHandSide, y: np.ndarray, h: float):
    """One Fehlberg step; returns (4th order solution, error estimate)"""
    k = np.empty((6, y.size))
    for stage in range(6):
        increment = np.zeros_like(y)
        for j, a in enumerate(_A[stage]):
            increment = increment + a * k[j]
        k[stage] = f(y + h * increment)
    y_new = y + h * (_B4 @ k)
    error = h * (_TR @ k)
    return y_new, error


class FlowIntegrator:
    """
    Integrates y' = f(y) from t = 0 to t_end

    Integration stops early once the norm of the first ``state_dim``
    components exceeds the escape radius. ``post_step`` may rewrite each
    accepted state, e.g. to re-orthonormalise co-integrated matrices.
    """

    def __init__(
        self,
        rhs: RightHandSide,
        config: IntegratorConfig,
        state_dim: int,
        post_step: Optional[PostStep] = None,
    ):
        self.rhs = rhs
        self.config = config
        self.state_dim = state_dim
        self.post_step = post_step

    def _escaped(self, y: np.ndarray) -> bool:
        return safe_norm(y[: self.state_dim]) > self.config.escape_radius

    def _check_finite(self, y: np.ndarray, t: float) -> None:
        if not np.all(np.isfinite(y)):
            raise IntegrationError("Non-finite state", t)

    def _accept(self, y: np.ndarray, t: float) -> np.ndarray:
        self._check_finite(y, t)
        if self.post_step is not None:
            y = self.post_step(y, t)
            self._check_finite(y, t)
        return y

    def run(self, y0: np.ndarray) -> IntegrationRun:
        y0 = np.asarray(y0, dtype=float).copy()
        self._check_finite(y0, 0.0)
        with np.errstate(all="ignore"):
            if self.config.method is IntegrationMethod.RK4:
                return self._run_fixed(y0)
            return self._run_adaptive(y0)

    def _run_fixed(self, y: np.ndarray) -> IntegrationRun:
        cfg = self.config
        h = cfg.step
        n_steps = max(1, int(math.ceil(cfg.t_end / h * (1.0 - 1e-12))))
        if n_steps > cfg.max_steps:
            raise IntegrationError(
                f"rk4 needs {n_steps} steps, above the budget of {cfg.max_steps}", 0.0
            )

        times: List[float] = [0.0]
        states: List[np.ndarray] = [y]
        t = 0.0
        terminated = TerminationReason.T_END
        for k in range(1, n_steps + 1):
            t_next = cfg.t_end if k == n_steps else k * h
            y = rk4_step(self.rhs, y, t_next - t)
            t = t_next
            y = self._accept(y, t)
            escaped = self._escaped(y)
            if k % cfg.record_stride == 0 or k == n_steps or escaped:
                times.append(t)
                states.append(y)
            if escaped:
                terminated = TerminationReason.ESCAPE
                break
        return IntegrationRun(np.array(times), np.array(states), k, terminated)

    def _run_adaptive(self, y: np.ndarray) -> IntegrationRun:
        cfg = self.config
        t = 0.0
        h = min(cfg.step, cfg.t_end)
        error_prev = 1.0
        accepted = 0
        attempts = 0

        times: List[float] = [0.0]
        states: List[np.ndarray] = [y]
        terminated = TerminationReason.T_END
        while cfg.t_end - t > 1e-12 * max(1.0, cfg.t_end):
            attempts += 1
            if attempts > cfg.max_steps:
                raise IntegrationError(f"rkf45 exceeded the budget of {cfg.max_steps} steps", t)
            h = min(h, cfg.t_end - t)

            y_new, error = rkf45_step(self.rhs, y, h)
            scale = cfg.abs_tol + cfg.rel_tol * np.maximum(np.abs(y), np.abs(y_new))
            error_norm = float(np.max(np.abs(error) / scale))
            if not np.isfinite(error_norm):
                error_norm = np.inf

            if error_norm <= 1.0:
                t = cfg.t_end if cfg.t_end - (t + h) <= 1e-12 * max(1.0, cfg.t_end) else t + h
                y = y_new
                accepted += 1
                y = self._accept(y, t)
                escaped = self._escaped(y)
                finished = t >= cfg.t_end
                if accepted % cfg.record_stride == 0 or finished or escaped:
                    times.append(t)
                    states.append(y)
                if escaped:
                    terminated = TerminationReason.ESCAPE
                    break
                if error_norm == 0.0:
                    factor = FACTOR_MAX
                else:
                    factor = SAFETY * error_norm ** (-BETA_1) * error_prev ** BETA_2
                error_prev = max(error_norm, 1e-4)
            else:
                factor = SAFETY * error_norm ** (-1.0 / 5.0) if np.isfinite(error_norm) else FACTOR_MIN
            h *= min(FACTOR_MAX, max(FACTOR_MIN, factor))
            if h < 1e-14 * max(1.0, t):
                raise IntegrationError("Step size underflow", t)

        if times[-1] != t:
            times.append(t)
            states.append(y)
        return IntegrationRun(np.array(times), np.array(states), accepted, terminated)
