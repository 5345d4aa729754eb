"""
Application Layer - Classify Game Use Case
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

from app.adapters.report_writer import JsonReportWriter
from app.domain.classification.value_objects import ClassificationReport
from app.domain.game.repository import GameRepository
from app.domain.game.value_objects import SamplerSpec
from app.services.classification_service import ClassificationService


@dataclass
class ClassifyGameRequest:
    game_path: Path
    box: Optional[Tuple[float, float]] = None
    resolution: Optional[int] = None
    out: Optional[Path] = None


@dataclass
class ClassifyGameResponse:
    report: ClassificationReport

    def to_dict(self) -> dict:
        return self.report.to_dict()


class ClassifyGameUseCase:
    def __init__(
        self,
        game_repository: GameRepository,
        classification_service: ClassificationService,
        json_writer: JsonReportWriter,
    ):
        self.game_repo = game_repository
        self.classification_service = classification_service
        self.json_writer = json_writer

    def execute(self, request: ClassifyGameRequest) -> ClassifyGameResponse:
        game = self.game_repo.load(request.game_path)
        sampler = SamplerSpec.from_settings(self.classification_service.settings.sampler)
        if request.box is not None:
            sampler = SamplerSpec(request.box[0], request.box[1], sampler.count, sampler.seed)

        report = self.classification_service.classify(game, sampler, request.resolution)
        response = ClassifyGameResponse(report=report)
        if request.out is not None:
            self.json_writer.write(request.out, response.to_dict())
        return response
