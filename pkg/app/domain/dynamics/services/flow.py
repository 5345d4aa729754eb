"""
Gradient flow x' = Du and quantities tracked along it
"""
from typing import Dict, Optional

import numpy as np
from scipy.integrate import cumulative_trapezoid

from app.domain.expr.entities import Expr
from app.domain.expr.services import compile_exprs
from app.domain.dynamics.value_objects import IntegratorConfig, Trajectory
from app.domain.game.entities import DifferentialGame
from app.domain.game.services import derivatives_for
from app.domain.game.value_objects import StrategyProfile

from .integrators import FlowIntegrator


def integrate(
    game: DifferentialGame,
    x0: StrategyProfile,
    config: Optional[IntegratorConfig] = None,
) -> Trajectory:
    """
    Integrate gradient ascent of every player on its own utility

    The log-volume w(t) is co-integrated as one extra component with
    w' = Div(Du)(x), so it carries the order of the method.

    Raises:
        IntegrationError: the state became non-finite
    """
    config = config or IntegratorConfig()
    if x0.dimension != game.dimension:
        raise ValueError(
            f"Initial state has {x0.dimension} coordinates, game '{game.name}' has dimension {game.dimension}"
        )
    n = game.dimension
    run = FlowIntegrator(flow_with_log_volume(game), config, n).run(np.append(x0.as_array(), 0.0))
    return Trajectory(
        times=run.times,
        states=run.states[:, :n],
        log_volume=run.states[:, n],
        terminated_by=run.terminated_by,
        variables=game.variables,
        steps=run.steps,
    )


def flow_with_log_volume(game: DifferentialGame):
    """Right-hand side of (x, w)' = (Du(x), tr J(x))"""
    derivatives = derivatives_for(game)
    n = game.dimension
    gradient = derivatives.gradient_fn.at_state
    jacobian = derivatives.jacobian_fn.at_state

    def rhs(z: np.ndarray) -> np.ndarray:
        x = z[:n]
        return np.append(gradient(x), np.trace(jacobian(x).reshape(n, n)))

    return rhs


def divergence_track(game: DifferentialGame, trajectory: Trajectory) -> np.ndarray:
    """Div(Du) at every recorded state"""
    J = derivatives_for(game).jacobian_at(trajectory.states)
    return np.trace(J, axis1=1, axis2=2)


def liouville_log_volume(game: DifferentialGame, trajectory: Trajectory) -> np.ndarray:
    """
    w(t) = int_0^t Div(Du)(x(s)) ds, composite trapezoid over the records

    Works on any trajectory, including strided or externally produced ones.
    ``integrate`` stores the co-integrated w, which is more accurate on
    coarse records.
    """
    if trajectory.times.size == 1:
        return np.zeros(1)
    return cumulative_trapezoid(divergence_track(game, trajectory), trajectory.times, initial=0.0)


def conserved_track(trajectory: Trajectory, quantity: Expr) -> np.ndarray:
    fn = compile_exprs([quantity], trajectory.variables)
    return fn.at_points(trajectory.states)[:, 0]


def conserved_drift(trajectory: Trajectory, quantity: Expr) -> float:
    """max_t |H(x(t)) - H(x(0))| over the records"""
    values = conserved_track(trajectory, quantity)
    return float(np.max(np.abs(values - values[0])))


def utility_track(game: DifferentialGame, trajectory: Trajectory) -> Dict[str, np.ndarray]:
    """Each player's utility along the trajectory, keyed by player name"""
    values = derivatives_for(game).utilities_at(trajectory.states)
    return {player.name: values[:, m] for m, player in enumerate(game.players)}
