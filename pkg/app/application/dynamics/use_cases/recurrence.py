"""
Application Layer - Recurrence Use Case
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

from app.adapters.report_writer import JsonReportWriter
from app.domain.dynamics.value_objects import RecurrenceReport, Trajectory
from app.domain.game.repository import GameRepository
from app.services.dynamics_service import DynamicsService


@dataclass
class RecurrenceRequest:
    game_path: Path
    init: Tuple[float, ...]
    eps: Optional[float] = None
    t_min: Optional[float] = None
    method: Optional[str] = None
    dt: Optional[float] = None
    t_end: Optional[float] = None
    out: Optional[Path] = None


@dataclass
class RecurrenceResponse:
    trajectory: Trajectory
    report: RecurrenceReport

    def to_dict(self) -> dict:
        data = self.report.to_dict()
        data["trajectory"] = self.trajectory.summary()
        return data


class RecurrenceUseCase:
    def __init__(
        self,
        game_repository: GameRepository,
        dynamics_service: DynamicsService,
        json_writer: JsonReportWriter,
    ):
        self.game_repo = game_repository
        self.dynamics_service = dynamics_service
        self.json_writer = json_writer

    def execute(self, request: RecurrenceRequest) -> RecurrenceResponse:
        game = self.game_repo.load(request.game_path)
        x0 = self.dynamics_service.initial_state(game, request.init)
        config = self.dynamics_service.integrator_config(
            method=request.method, step=request.dt, t_end=request.t_end
        )
        trajectory, report = self.dynamics_service.recurrence(
            game, x0, epsilon=request.eps, t_min=request.t_min, config=config
        )
        response = RecurrenceResponse(trajectory=trajectory, report=report)
        if request.out is not None:
            self.json_writer.write(request.out, response.to_dict())
        return response
