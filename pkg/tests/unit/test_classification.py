"""
Unit tests for game classification and the interpolation spectrum
"""
import pytest

from app.core.exceptions import StructureMismatchError, UsageError
from app.domain.classification.value_objects import (
    GameLabel,
    LabelThresholds,
    TrajectorySummary,
)
from app.domain.dynamics.services import integrate
from app.domain.dynamics.value_objects import IntegratorConfig
from app.domain.game.value_objects import StrategyProfile
from app.domain.hodge.value_objects import ResidualReport
from app.services.classification_service import ClassificationService, assign_label
from app.services.game_loader import load_game

pytestmark = pytest.mark.unit

THRESHOLDS = LabelThresholds()
CLEAN_GRID = ResidualReport(curl_residual=1.0, div_residual=1.0, near_vp_residual=1.0)


def two_player(first: str, second: str, name: str = "game"):
    return load_game(
        {
            "name": name,
            "players": [
                {"name": "p1", "vars": ["x"], "utility": first},
                {"name": "p2", "vars": ["y"], "utility": second},
            ],
        }
    )


def label(**overrides) -> GameLabel:
    values = dict(
        nonstrategic=False,
        sym_res=1.0,
        skew_res=1.0,
        analytic_div_max=1.0,
        grid_residuals=CLEAN_GRID,
        thresholds=THRESHOLDS,
    )
    values.update(overrides)
    return assign_label(**values)


class TestAssignLabel:
    """Test label precedence"""

    def test_nonstrategic_wins(self):
        assert label(nonstrategic=True, sym_res=0.0, analytic_div_max=0.0) is GameLabel.NON_STRATEGIC

    def test_hamiltonian(self):
        assert label(analytic_div_max=0.0, skew_res=0.0) is GameLabel.HAMILTONIAN

    def test_vector_potential_before_scalar_potential(self):
        """Test a harmonic field is labelled vector potential"""
        assert label(analytic_div_max=0.0, sym_res=0.0) is GameLabel.VECTOR_POTENTIAL

    def test_exact_scalar_potential(self):
        assert label(sym_res=1e-9) is GameLabel.EXACT_SCALAR_POTENTIAL

    def test_near_vector_potential(self):
        grid = ResidualReport(curl_residual=1.0, div_residual=0.5, near_vp_residual=1e-4)
        assert label(grid_residuals=grid) is GameLabel.NEAR_VECTOR_POTENTIAL

    def test_near_vector_potential_needs_divergence(self):
        """Test a grid-divergence-free field is not near vector potential"""
        grid = ResidualReport(curl_residual=1.0, div_residual=1e-4, near_vp_residual=1e-4)
        assert label(grid_residuals=grid) is GameLabel.MIXED

    def test_mixed(self):
        assert label() is GameLabel.MIXED

    def test_thresholds_are_inclusive(self):
        assert label(sym_res=THRESHOLDS.symbolic) is GameLabel.EXACT_SCALAR_POTENTIAL

    def test_thresholds_from_settings(self, test_settings):
        thresholds = LabelThresholds.from_settings(test_settings.tolerances)
        assert thresholds == LabelThresholds(nonstrategic=1e-10, symbolic=1e-8, grid=1e-3)


class TestClassify:
    """Test labels of reference games"""

    @pytest.fixture
    def service(self, test_settings):
        return ClassificationService(app_settings=test_settings)

    def test_orbit_is_vector_potential(self, service, orbit_game):
        report = service.classify(orbit_game, resolution=16)
        assert report.label is GameLabel.VECTOR_POTENTIAL
        assert report.vector_potential is True
        assert report.hamiltonian is False
        assert report.analytic_div_max == 0.0
        assert report.symbolic_divergence_zero is True

    def test_linear_rotation_is_hamiltonian(self, service, linear_rotation_game):
        report = service.classify(linear_rotation_game, resolution=16)
        assert report.label is GameLabel.HAMILTONIAN
        assert report.hamiltonian is True
        assert report.vector_potential is True
        assert report.skew_res == 0.0

    def test_divergence_free_but_not_hamiltonian(self, service, vp_game):
        report = service.classify(vp_game, resolution=16)
        assert report.label is GameLabel.VECTOR_POTENTIAL
        assert report.hamiltonian is False
        assert report.scalar_potential is True

    def test_divergent_game(self, service, divergent_game):
        """Test Du = (y, x) is harmonic: vector potential and closed"""
        report = service.classify(divergent_game, resolution=16)
        assert report.label is GameLabel.VECTOR_POTENTIAL
        assert report.scalar_potential is True

    def test_potential_game(self, service, potential_game):
        report = service.classify(potential_game, resolution=8)
        assert report.label is GameLabel.EXACT_SCALAR_POTENTIAL
        assert report.scalar_potential is True
        assert report.vector_potential is False
        assert report.grid["resolution"] == [8, 8, 8, 8]

    def test_mixed_game(self, service):
        game = two_player("x^2 + x*y", "-x*y", name="mixed")
        report = service.classify(game, resolution=16)
        assert report.label is GameLabel.MIXED
        assert report.scalar_potential is False

    def test_nonstrategic_game(self, service):
        game = two_player("y^2", "x^3", name="inert")
        report = service.classify(game, resolution=16)
        assert report.label is GameLabel.NON_STRATEGIC
        assert report.nonstrategic_max_norm == 0.0
        fractions = report.energy_fractions
        assert (fractions.rho_P, fractions.rho_V, fractions.rho_harmonic) == (0.0, 0.0, 1.0)

    def test_fractions_sum_to_one(self, service, orbit_game):
        report = service.classify(orbit_game, resolution=16)
        assert report.rho_P + report.rho_V + report.rho_harmonic == pytest.approx(1.0, abs=1e-10)

    def test_resolution_is_clamped(self, test_settings, potential_game):
        """Test a requested resolution above the point cap is lowered"""
        test_settings.grid.max_points = 8**4
        service = ClassificationService(app_settings=test_settings)
        report = service.classify(potential_game, resolution=32)
        assert report.grid["resolution"] == [8, 8, 8, 8]

    def test_to_dict(self, service, linear_rotation_game):
        data = service.classify(linear_rotation_game, resolution=16).to_dict()
        assert data["label"] == "hamiltonian"
        assert data["thresholds"] == {"nonstrategic": 1e-10, "symbolic": 1e-8, "grid": 1e-3}
        assert data["sampler"]["count"] == 64
        assert set(data["grid_residuals"]) == {"curl_residual", "div_residual", "near_vp_residual"}


class TestSummarizeTrajectory:
    """Test trajectory summaries"""

    @pytest.fixture
    def service(self, test_settings):
        return ClassificationService(app_settings=test_settings)

    def test_escaped(self, service, divergent_game):
        trajectory = integrate(divergent_game, StrategyProfile((1.0, 1.0)), IntegratorConfig(t_end=20.0))
        assert service.summarize_trajectory(divergent_game, trajectory) == (TrajectorySummary.ESCAPED, None)

    def test_converged(self, service, interp_sp_game):
        config = IntegratorConfig(t_end=40.0, step=1e-2)
        trajectory = integrate(interp_sp_game, StrategyProfile((1.0, 1.0, 1.0, 1.0)), config)
        assert service.summarize_trajectory(interp_sp_game, trajectory) == (TrajectorySummary.CONVERGED, None)

    def test_recurrent(self, service, linear_rotation_game):
        config = IntegratorConfig(t_end=20.0, step=1e-2)
        trajectory = integrate(linear_rotation_game, StrategyProfile((1.0, 0.0)), config)
        assert service.summarize_trajectory(linear_rotation_game, trajectory) == (TrajectorySummary.RECURRENT, 3)

    def test_bounded(self, service, orbit_game):
        """Test a closed orbit integrated for less than one period"""
        config = IntegratorConfig(t_end=2.0, step=1e-2)
        trajectory = integrate(orbit_game, StrategyProfile((1.0, 0.0)), config)
        assert service.summarize_trajectory(orbit_game, trajectory) == (TrajectorySummary.BOUNDED, 0)


class TestSpectrumExperiment:
    """Test the interpolation sweep"""

    @pytest.fixture
    def service(self, test_settings):
        return ClassificationService(app_settings=test_settings)

    def test_records_in_gamma_order(self, service, interp_sp_game, interp_vp_game):
        records = service.spectrum_experiment(
            interp_sp_game,
            interp_vp_game,
            [0.0, 0.5, 1.0],
            StrategyProfile((1.0, 1.0, 1.0, 1.0)),
            IntegratorConfig(t_end=1.0, step=1e-2),
            resolution=8,
        )
        assert [r.gamma for r in records] == [0.0, 0.5, 1.0]
        assert records[-1].classification.label is GameLabel.EXACT_SCALAR_POTENTIAL
        assert records[0].classification.label is not GameLabel.EXACT_SCALAR_POTENTIAL
        row = records[-1].row()
        assert list(row) == [
            "gamma",
            "label",
            "rho_P",
            "rho_V",
            "rho_harmonic",
            "sym_res",
            "skew_res",
            "div_max",
            "summary",
            "final_norm",
        ]
        assert row["div_max"] == pytest.approx(9.6, abs=1e-9)

    def test_workers_do_not_change_results(self, service, interp_sp_game, interp_vp_game):
        arguments = (
            interp_sp_game,
            interp_vp_game,
            [0.0, 0.25, 0.75, 1.0],
            StrategyProfile((1.0, 1.0, 1.0, 1.0)),
            IntegratorConfig(t_end=0.5, step=1e-2),
        )
        serial = service.spectrum_experiment(*arguments, resolution=8, max_workers=1)
        parallel = service.spectrum_experiment(*arguments, resolution=8, max_workers=2)
        assert [r.row() for r in serial] == [r.row() for r in parallel]

    def test_gamma_out_of_range(self, service, interp_sp_game, interp_vp_game):
        with pytest.raises(UsageError):
            service.spectrum_experiment(
                interp_sp_game,
                interp_vp_game,
                [1.5],
                StrategyProfile((1.0, 1.0, 1.0, 1.0)),
                IntegratorConfig(t_end=0.5, step=1e-2),
                resolution=8,
            )

    def test_structure_mismatch(self, service, interp_sp_game, orbit_game):
        with pytest.raises(StructureMismatchError):
            service.spectrum_experiment(interp_sp_game, orbit_game, [0.5], StrategyProfile((1.0, 1.0)))
