"""
Integration tests for use cases wired through the container
"""
import json

import pytest

from app import wiring
from app.adapters.lattice_codec import read_lattice
from app.adapters.report_writer import Provenance
from app.application.analysis.use_cases import (
    CheckGameRequest,
    ClassifyGameRequest,
    DecomposeGameRequest,
    SampleFieldRequest,
)
from app.application.dynamics.use_cases import (
    CriticalPointsRequest,
    EnsembleRequest,
    RecurrenceRequest,
    SimulateRequest,
)
from app.application.experiments.use_cases import InterpolationSpectrumRequest
from app.core.exceptions import GameSpecError, StructureMismatchError, UsageError
from app.domain.grid.value_objects import GridField, GridScalar

from tests.conftest import (
    INTERP_SP_DOCUMENT,
    INTERP_VP_DOCUMENT,
    LINEAR_ROTATION_DOCUMENT,
    ORBIT_HAMILTONIAN,
    POTENTIAL_DOCUMENT,
)

pytestmark = pytest.mark.integration


@pytest.fixture
def container(test_settings):
    return wiring.build_container(test_settings, Provenance(argv=["test"], seed=0))


class TestAnalysisUseCases:
    """Test check, classify, decompose and field"""

    def test_check_orbit_passes(self, container, orbit_file, tmp_path):
        out = tmp_path / "check.json"
        response = wiring.get_check_game_use_case(container).execute(
            CheckGameRequest(orbit_file, resolution=16, out=out)
        )
        failures = [c.to_dict() for c in response.report.failures]
        assert response.passed, failures
        names = {c.name for c in response.report.checks}
        assert "hodge.reconstruction" in names
        assert "grid.exact_is_closed" in names
        document = json.loads(out.read_text(encoding="utf-8"))
        assert document["passed"] is True
        assert document["provenance"]["argv"] == ["test"]

    def test_check_skips_hamiltonian_check_for_potential_game(self, container, write_game, tmp_path):
        path = write_game(POTENTIAL_DOCUMENT, "potential.json")
        report = wiring.get_check_game_use_case(container).execute(
            CheckGameRequest(path, resolution=8)
        ).report
        statuses = {c.name: c.status.value for c in report.checks}
        assert statuses.get("game.hamiltonian_is_vector_potential") == "skipped"
        assert report.passed

    def test_classify(self, container, vp_file, tmp_path):
        out = tmp_path / "classify.json"
        response = wiring.get_classify_game_use_case(container).execute(
            ClassifyGameRequest(vp_file, resolution=16, out=out)
        )
        data = response.to_dict()
        assert data["label"] == "vector-potential"
        assert data["hamiltonian"] is False
        assert json.loads(out.read_text(encoding="utf-8"))["label"] == "vector-potential"

    def test_classify_custom_box(self, container, orbit_file):
        data = wiring.get_classify_game_use_case(container).execute(
            ClassifyGameRequest(orbit_file, box=(-1.0, 1.0), resolution=16)
        ).to_dict()
        assert data["sampler"]["low"] == -1.0
        assert data["grid"]["lower"] == [-1.0, -1.0]

    def test_decompose_writes_lattices(self, container, orbit_file, tmp_path):
        out_dir = tmp_path / "decomposition"
        response = wiring.get_decompose_game_use_case(container).execute(
            DecomposeGameRequest(orbit_file, out_dir=out_dir, resolution=16, zero_mode="vector")
        )
        assert set(response.files) == {"field", "phi", "x_p", "x_v", "diagnostics"}
        assert isinstance(read_lattice(out_dir / "phi.ghg1"), GridScalar)
        x_v = read_lattice(out_dir / "x_v.ghg1")
        assert isinstance(x_v, GridField)
        assert x_v.grid.resolution == (16, 16)
        diagnostics = json.loads((out_dir / "diagnostics.json").read_text(encoding="utf-8"))
        assert diagnostics["zero_mode_policy"] == "to_vector"
        assert diagnostics["diagnostics"]["reconstruction_error"] <= 1e-12

    def test_field_sample(self, container, orbit_file, tmp_path):
        out = tmp_path / "field.csv"
        response = wiring.get_sample_field_use_case(container).execute(
            SampleFieldRequest(orbit_file, out=out, resolution=5, box=(-1.0, 1.0))
        )
        assert response.to_dict()["rows"] == 25
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[1] == "x,y,Dx,Dy"
        # Du(-1, -1) = (y, -x - x^3) = (-1, 2)
        assert lines[2] == "-1,-1,-1,2"

    def test_malformed_game(self, container, write_game):
        path = write_game({"players": [{"name": "p", "vars": ["x"], "utility": "x +"}]})
        with pytest.raises(GameSpecError):
            wiring.get_classify_game_use_case(container).execute(ClassifyGameRequest(path))

    def test_invalid_json(self, container, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(GameSpecError):
            wiring.get_classify_game_use_case(container).execute(ClassifyGameRequest(path))


class TestDynamicsUseCases:
    """Test simulate, recurrence, critical and ensemble"""

    def test_simulate_orbit(self, container, orbit_file, tmp_path):
        out = tmp_path / "trajectory.csv"
        response = wiring.get_simulate_use_case(container).execute(
            SimulateRequest(
                orbit_file, init=(1.0, 0.0), out=out, t_end=5.0, conserved=ORBIT_HAMILTONIAN
            )
        )
        data = response.to_dict()
        assert data["conserved_drift"] <= 1e-6
        assert data["records"] == 5001
        assert out.read_text(encoding="utf-8").splitlines()[1] == "t,x,y,log_volume,conserved"

    def test_simulate_wrong_dimension(self, container, orbit_file, tmp_path):
        with pytest.raises(UsageError):
            wiring.get_simulate_use_case(container).execute(
                SimulateRequest(orbit_file, init=(1.0,), out=tmp_path / "t.csv")
            )

    def test_recurrence(self, container, write_game):
        path = write_game(LINEAR_ROTATION_DOCUMENT, "rotation.json")
        data = wiring.get_recurrence_use_case(container).execute(
            RecurrenceRequest(path, init=(1.0, 0.0), eps=1e-2, t_min=1.0, dt=1e-2, t_end=20.0)
        ).to_dict()
        assert data["verdict"] is True
        assert data["return_count"] == 3

    def test_critical_points(self, container, write_game):
        path = write_game(INTERP_SP_DOCUMENT, "sp.json")
        data = wiring.get_critical_points_use_case(container).execute(
            CriticalPointsRequest(path, seeds=8)
        ).to_dict()
        assert len(data["points"]) == 1
        assert data["points"][0]["local_ne_candidate"] is True

    def test_ensemble(self, container, orbit_file, tmp_path):
        out = tmp_path / "ensemble.json"
        data = wiring.get_ensemble_use_case(container).execute(
            EnsembleRequest(orbit_file, center=(0.5, 0.0), radius=0.1, points=6, t_end=1.0, out=out)
        ).to_dict()
        assert data["max_abs_log_det"] <= 1e-8
        assert json.loads(out.read_text(encoding="utf-8"))["escaped"] == 0


class TestInterpolationSpectrum:
    """Test the interpolation sweep end to end"""

    def test_spectrum_csv(self, container, write_game, tmp_path):
        game_a = write_game(INTERP_SP_DOCUMENT, "sp.json")
        game_b = write_game(INTERP_VP_DOCUMENT, "vp.json")
        out = tmp_path / "spectrum.csv"
        response = wiring.get_interpolation_spectrum_use_case(container).execute(
            InterpolationSpectrumRequest(
                game_a,
                game_b,
                gammas=(0.0, 0.5, 1.0),
                init=(1.0, 1.0, 1.0, 1.0),
                resolution=8,
                dt=1e-2,
                t_end=1.0,
                out=out,
            )
        )
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0].startswith("# hodge-games ")
        assert lines[1].split(",")[0] == "gamma"
        assert len(lines) == 2 + 3
        assert lines[-1].split(",")[1] == "exact-scalar-potential"
        assert [r["gamma"] for r in response.to_dict()["records"]] == [0.0, 0.5, 1.0]

    def test_structure_mismatch(self, container, write_game, orbit_file):
        game_a = write_game(INTERP_SP_DOCUMENT, "sp.json")
        with pytest.raises(StructureMismatchError):
            wiring.get_interpolation_spectrum_use_case(container).execute(
                InterpolationSpectrumRequest(game_a, orbit_file, gammas=(0.5,), init=(0.0,) * 4)
            )

    def test_no_gammas(self, container, orbit_file):
        with pytest.raises(UsageError):
            wiring.get_interpolation_spectrum_use_case(container).execute(
                InterpolationSpectrumRequest(orbit_file, orbit_file, gammas=(), init=(0.0, 0.0))
            )
