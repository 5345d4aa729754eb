"""
Dependency Injection Wiring
"""
from dataclasses import dataclass
from typing import Optional

from app.adapters.report_writer import CsvReportWriter, JsonReportWriter, Provenance
from app.application.analysis.use_cases import (
    CheckGameUseCase,
    ClassifyGameUseCase,
    DecomposeGameUseCase,
    SampleFieldUseCase,
)
from app.application.dynamics.use_cases import (
    CriticalPointsUseCase,
    EnsembleUseCase,
    RecurrenceUseCase,
    SimulateUseCase,
)
from app.application.experiments.use_cases import InterpolationSpectrumUseCase
from app.core.config import Settings, settings as default_settings
from app.domain.game.repository import GameRepository
from app.infrastructure.file_store import JsonGameRepository
from app.services.classification_service import ClassificationService
from app.services.dynamics_service import DynamicsService
from app.services.game_analysis_service import GameAnalysisService
from app.services.game_field_service import GameFieldService
from app.services.hodge_service import HodgeService


@dataclass
class Container:
    """Services and adapters shared by the use cases of one run"""
    settings: Settings
    game_repository: GameRepository
    field_service: GameFieldService
    dynamics_service: DynamicsService
    hodge_service: HodgeService
    classification_service: ClassificationService
    analysis_service: GameAnalysisService
    csv_writer: CsvReportWriter
    json_writer: JsonReportWriter


def build_container(
    app_settings: Optional[Settings] = None,
    provenance: Optional[Provenance] = None,
) -> Container:
    """Build every collaborator from one settings object"""
    app_settings = app_settings or default_settings
    provenance = provenance or Provenance(seed=app_settings.sampler.seed)

    field_service = GameFieldService(app_settings)
    dynamics_service = DynamicsService(app_settings)
    return Container(
        settings=app_settings,
        game_repository=JsonGameRepository(),
        field_service=field_service,
        dynamics_service=dynamics_service,
        hodge_service=HodgeService(field_service, app_settings),
        classification_service=ClassificationService(field_service, app_settings),
        analysis_service=GameAnalysisService(field_service, dynamics_service, app_settings),
        csv_writer=CsvReportWriter(provenance),
        json_writer=JsonReportWriter(provenance),
    )


# Use case dependencies
def get_check_game_use_case(container: Container) -> CheckGameUseCase:
    return CheckGameUseCase(container.game_repository, container.analysis_service, container.json_writer)


def get_classify_game_use_case(container: Container) -> ClassifyGameUseCase:
    return ClassifyGameUseCase(
        container.game_repository, container.classification_service, container.json_writer
    )


def get_decompose_game_use_case(container: Container) -> DecomposeGameUseCase:
    return DecomposeGameUseCase(container.game_repository, container.hodge_service, container.json_writer)


def get_sample_field_use_case(container: Container) -> SampleFieldUseCase:
    return SampleFieldUseCase(container.game_repository, container.field_service, container.csv_writer)


def get_simulate_use_case(container: Container) -> SimulateUseCase:
    return SimulateUseCase(container.game_repository, container.dynamics_service, container.csv_writer)


def get_recurrence_use_case(container: Container) -> RecurrenceUseCase:
    return RecurrenceUseCase(container.game_repository, container.dynamics_service, container.json_writer)


def get_critical_points_use_case(container: Container) -> CriticalPointsUseCase:
    return CriticalPointsUseCase(container.game_repository, container.dynamics_service, container.json_writer)


def get_ensemble_use_case(container: Container) -> EnsembleUseCase:
    return EnsembleUseCase(container.game_repository, container.dynamics_service, container.json_writer)


def get_interpolation_spectrum_use_case(container: Container) -> InterpolationSpectrumUseCase:
    return InterpolationSpectrumUseCase(
        container.game_repository,
        container.classification_service,
        container.dynamics_service,
        container.csv_writer,
    )
