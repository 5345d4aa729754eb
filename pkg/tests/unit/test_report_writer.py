"""
Unit tests for report writers and CLI run configuration
"""
import json

import numpy as np
import pytest
from pydantic import ValidationError

from app.adapters.report_writer import (
    SPECTRUM_COLUMNS,
    CsvReportWriter,
    JsonReportWriter,
    Provenance,
    format_value,
)
from app.api.v1.schemas import RunConfig, parse_floats, parse_gammas
from app.domain.game.value_objects import StrategyProfile
from app.services.dynamics_service import DynamicsService

pytestmark = pytest.mark.unit

PROVENANCE = Provenance(argv=["simulate", "orbit.json"], seed=7, version="0.1.0")


class TestFormatValue:
    """Test CSV cell formatting"""

    @pytest.mark.parametrize(
        "value, expected",
        [
            (True, "true"),
            (np.bool_(False), "false"),
            (None, ""),
            (3, "3"),
            (np.int64(4), "4"),
            (0.1, "0.10000000000000001"),
            (np.float64(-2.5), "-2.5"),
            ("mixed", "mixed"),
        ],
    )
    def test_format(self, value, expected):
        assert format_value(value) == expected

    def test_float_round_trip(self):
        value = 1.0 / 3.0
        assert float(format_value(value)) == value


class TestCsvReportWriter:
    """Test CSV rendering"""

    def test_provenance_line(self):
        text = CsvReportWriter(PROVENANCE).render(["a", "b"], [[1.0, True]])
        lines = text.splitlines()
        assert lines[0] == '# hodge-games 0.1.0 argv=["simulate", "orbit.json"] seed=7'
        assert lines[1] == "a,b"
        assert lines[2] == "1,true"
        assert text.endswith("\n")

    def test_write_trajectory(self, orbit_game, test_settings, tmp_path):
        service = DynamicsService(test_settings)
        simulation = service.simulate(
            orbit_game,
            StrategyProfile((1.0, 0.0)),
            service.integrator_config(t_end=0.01, step=1e-3),
            conserved="y^2/2 + x^2/2 + x^4/4",
            utilities=True,
        )
        path = CsvReportWriter(PROVENANCE).write_trajectory(tmp_path / "traj.csv", simulation)
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[1] == "t,x,y,log_volume,conserved,u_p1,u_p2"
        assert len(lines) == 2 + 11
        assert lines[2].startswith("0,1,0,0,0.75,")

    def test_write_spectrum_columns(self, tmp_path):
        class Record:
            def row(self):
                return {column: 0.5 for column in SPECTRUM_COLUMNS} | {"label": "mixed", "summary": "bounded"}

        path = CsvReportWriter(PROVENANCE).write_spectrum(tmp_path / "spectrum.csv", [Record()])
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[1] == ",".join(SPECTRUM_COLUMNS)
        assert lines[2] == "0.5,mixed,0.5,0.5,0.5,0.5,0.5,0.5,bounded,0.5"

    def test_identical_inputs_identical_bytes(self, tmp_path):
        writer = CsvReportWriter(PROVENANCE)
        rows = [[0.1, 0.2], [1e-300, -3.0]]
        first = writer.write(tmp_path / "a.csv", ["u", "v"], rows).read_bytes()
        second = writer.write(tmp_path / "b.csv", ["u", "v"], rows).read_bytes()
        assert first == second


class TestJsonReportWriter:
    """Test JSON rendering"""

    def test_render(self):
        text = JsonReportWriter(PROVENANCE).render({"b": np.float64(1.5), "a": np.array([1, 2]), "flag": np.bool_(True)})
        document = json.loads(text)
        assert document["provenance"] == {
            "tool": "hodge-games",
            "version": "0.1.0",
            "argv": ["simulate", "orbit.json"],
            "seed": 7,
        }
        assert document["a"] == [1, 2]
        assert document["flag"] is True
        assert list(document) == sorted(document)

    def test_non_finite_values_become_strings(self):
        document = json.loads(JsonReportWriter(PROVENANCE).render({"x": float("inf")}))
        assert document["x"] == "inf"

    def test_write(self, tmp_path):
        path = JsonReportWriter(PROVENANCE).write(tmp_path / "report.json", {"label": "hamiltonian"})
        assert json.loads(path.read_text(encoding="utf-8"))["label"] == "hamiltonian"


class TestParseGammas:
    """Test gamma list parsing"""

    def test_range(self):
        assert parse_gammas("0:1:0.25") == (0.0, 0.25, 0.5, 0.75, 1.0)

    def test_list(self):
        assert parse_gammas("0,0.5,1") == (0.0, 0.5, 1.0)

    @pytest.mark.parametrize("text", ["0:1:0.3", "1:0:0.1", "0:1:0", "0:1", "a,b"])
    def test_invalid(self, text):
        with pytest.raises(ValueError):
            parse_gammas(text)

    def test_parse_floats(self):
        assert parse_floats("1,-2.5,3e-1") == (1.0, -2.5, 0.3)


class TestRunConfig:
    """Test option validation"""

    def test_valid(self, orbit_file, tmp_path):
        config = RunConfig(subcommand="simulate", games=[orbit_file], out=tmp_path / "t.csv", dt=1e-3)
        assert config.games == [orbit_file]
        assert config.utilities is False

    def test_grid_power_of_two(self, orbit_file):
        with pytest.raises(ValidationError):
            RunConfig(subcommand="classify", games=[orbit_file], grid=12)

    def test_box_order(self, orbit_file):
        with pytest.raises(ValidationError):
            RunConfig(subcommand="classify", games=[orbit_file], box=(1.0, -1.0))

    def test_missing_game_file(self, tmp_path):
        with pytest.raises(ValidationError):
            RunConfig(subcommand="classify", games=[tmp_path / "missing.json"])

    def test_out_required(self, orbit_file):
        with pytest.raises(ValidationError):
            RunConfig(subcommand="simulate", games=[orbit_file])

    def test_gamma_range(self, orbit_file):
        with pytest.raises(ValidationError):
            RunConfig(subcommand="spectrum", games=[orbit_file, orbit_file], gammas=(0.0, 1.5))

    def test_unknown_option(self, orbit_file):
        with pytest.raises(ValidationError):
            RunConfig(subcommand="classify", games=[orbit_file], colour="red")

    def test_non_positive_step(self, orbit_file, tmp_path):
        with pytest.raises(ValidationError):
            RunConfig(subcommand="simulate", games=[orbit_file], out=tmp_path / "t.csv", dt=0.0)
