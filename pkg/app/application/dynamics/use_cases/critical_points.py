"""
Application Layer - Critical Points Use Case
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

from app.adapters.report_writer import JsonReportWriter
from app.domain.dynamics.value_objects import CriticalPointSearch
from app.domain.game.repository import GameRepository
from app.services.dynamics_service import DynamicsService


@dataclass
class CriticalPointsRequest:
    game_path: Path
    seeds: Optional[int] = None
    box: Optional[Tuple[float, float]] = None
    out: Optional[Path] = None


@dataclass
class CriticalPointsResponse:
    search: CriticalPointSearch

    def to_dict(self) -> dict:
        return self.search.to_dict()


class CriticalPointsUseCase:
    """Newton roots of Du with local Nash diagnostics"""

    def __init__(
        self,
        game_repository: GameRepository,
        dynamics_service: DynamicsService,
        json_writer: JsonReportWriter,
    ):
        self.game_repo = game_repository
        self.dynamics_service = dynamics_service
        self.json_writer = json_writer

    def execute(self, request: CriticalPointsRequest) -> CriticalPointsResponse:
        game = self.game_repo.load(request.game_path)
        low, high = request.box if request.box is not None else (None, None)
        search = self.dynamics_service.critical_points(game, seeds=request.seeds, low=low, high=high)
        response = CriticalPointsResponse(search=search)
        if request.out is not None:
            self.json_writer.write(request.out, response.to_dict())
        return response
