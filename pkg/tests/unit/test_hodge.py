"""
Unit tests for the Helmholtz-Hodge decomposition
"""
import numpy as np
import pytest

from app.core.exceptions import GridError
from app.domain.grid.services import d1_grid, div_grid, norm1, sample
from app.domain.grid.value_objects import BoxGrid, GridField
from app.domain.hodge.services import decompose, epsilon_potential_fit, residuals
from app.domain.hodge.value_objects import DecompositionConfig, ZeroModePolicy
from app.services.hodge_service import HodgeService

pytestmark = pytest.mark.unit


def gradient_field(grid: BoxGrid) -> GridField:
    """d1 of sin x sin y"""
    return sample(lambda x, y: (np.cos(x) * np.sin(y), np.sin(x) * np.cos(y)), grid)


def rotation_field(grid: BoxGrid) -> GridField:
    return sample(lambda x, y: (-np.sin(y), np.sin(x)), grid)


def random_field(grid: BoxGrid, rng: np.random.Generator) -> GridField:
    return GridField.from_arrays(grid, rng.standard_normal((grid.dimension,) + grid.shape))


class TestDecompose:
    """Test the spectral projection"""

    def test_gradient_field(self, periodic_grid):
        """Test a pure gradient has no rotational part"""
        result = decompose(gradient_field(periodic_grid))
        assert result.x_v.max_abs() <= 1e-12
        x, y = periodic_grid.mesh()
        np.testing.assert_allclose(result.phi.values, np.sin(x) * np.sin(y), atol=1e-12)

    def test_rotation_field(self, periodic_grid):
        """Test a divergence-free field has no gradient part"""
        X = rotation_field(periodic_grid)
        result = decompose(X)
        assert result.x_p.max_abs() <= 1e-12
        np.testing.assert_allclose(result.x_v.stack(), X.stack(), atol=1e-12)

    def test_superposition(self, periodic_grid):
        """Test both parts are recovered from their sum"""
        P = gradient_field(periodic_grid)
        V = rotation_field(periodic_grid)
        result = decompose(P + V)
        np.testing.assert_allclose(result.x_p.stack(), P.stack(), atol=1e-12)
        np.testing.assert_allclose(result.x_v.stack(), V.stack(), atol=1e-12)

    def test_parts_are_closed_and_divergence_free(self, periodic_grid, rng):
        """Test diagnostics on a random field"""
        diagnostics = decompose(random_field(periodic_grid, rng)).diagnostics
        assert diagnostics.reconstruction_error <= 1e-12
        assert diagnostics.curl_residual_P <= 1e-10
        assert diagnostics.div_residual_V <= 1e-10
        assert diagnostics.orthogonality_L2 <= 1e-10
        assert diagnostics.orthogonality_H1 <= 1e-10

    def test_projection_is_idempotent(self, periodic_grid, rng):
        """Test decomposing X_P again leaves it unchanged"""
        first = decompose(random_field(periodic_grid, rng))
        second = decompose(first.x_p)
        np.testing.assert_allclose(second.x_p.stack(), first.x_p.stack(), atol=1e-10)
        assert second.x_v.max_abs() <= 1e-10

    def test_policies_differ_by_constant(self, periodic_grid, rng):
        """Test the zero-mode policy moves only the harmonic mean"""
        X = random_field(periodic_grid, rng).plus_constant((0.5, -1.5))
        to_p = decompose(X, DecompositionConfig(zero_mode_policy=ZeroModePolicy.TO_POTENTIAL))
        to_v = decompose(X, DecompositionConfig(zero_mode_policy=ZeroModePolicy.TO_VECTOR))
        difference = (to_p.x_p - to_v.x_p).stack()
        for axis, mean in enumerate(to_p.harmonic_mean):
            np.testing.assert_allclose(difference[axis], mean, atol=1e-12)
        np.testing.assert_allclose(to_p.phi.values, to_v.phi.values)
        assert to_p.harmonic_mean == pytest.approx((0.5, -1.5), abs=0.5)

    def test_constant_field_is_harmonic(self, periodic_grid):
        """Test a constant field is all harmonic mean"""
        X = GridField.zeros(periodic_grid).plus_constant((1.0, 2.0))
        result = decompose(X)
        assert result.harmonic_mean == pytest.approx((1.0, 2.0), abs=1e-14)
        fractions = result.energy_fractions()
        assert fractions.rho_harmonic == pytest.approx(1.0, abs=1e-12)
        assert fractions.rho_P == pytest.approx(0.0, abs=1e-12)

    def test_zero_field(self, periodic_grid):
        """Test the zero field reports itself as harmonic"""
        fractions = decompose(GridField.zeros(periodic_grid)).energy_fractions()
        assert (fractions.rho_P, fractions.rho_V, fractions.rho_harmonic) == (0.0, 0.0, 1.0)

    def test_fractions_sum_to_one(self, periodic_grid, rng):
        """Test energy fractions of a random field"""
        fractions = decompose(random_field(periodic_grid, rng).plus_constant((1.0, 0.0))).energy_fractions()
        assert fractions.total == pytest.approx(1.0, abs=1e-10)
        assert all(v >= 0.0 for v in (fractions.rho_P, fractions.rho_V, fractions.rho_harmonic))

    def test_to_dict(self, periodic_grid):
        """Test the serializable summary"""
        data = decompose(rotation_field(periodic_grid)).to_dict()
        assert data["zero_mode_policy"] == "to_potential"
        assert data["scheme"] == "spectral"
        assert data["grid"]["resolution"] == [32, 32]
        assert set(data["energy_fractions"]) == {"rho_P", "rho_V", "rho_harmonic"}

    def test_non_finite_field(self, periodic_grid):
        """Test non-finite input is rejected"""
        with pytest.raises(GridError):
            GridField.from_arrays(periodic_grid, np.full((2,) + periodic_grid.shape, np.inf))


class TestResiduals:
    """Test curl, divergence and near-vector-potential residuals"""

    def test_gradient_is_closed(self, periodic_grid):
        report = residuals(gradient_field(periodic_grid))
        assert report.curl_residual <= 1e-12
        assert report.div_residual > 0.1

    def test_rotation_is_divergence_free(self, periodic_grid):
        report = residuals(rotation_field(periodic_grid))
        assert report.div_residual <= 1e-12
        assert report.curl_residual > 0.1

    def test_near_vector_potential(self, periodic_grid):
        """Test (sin x, 0): div + lap(div) vanishes but div does not"""
        X = sample(lambda x, y: (np.sin(x), 0.0 * y), periodic_grid)
        report = residuals(X)
        assert report.div_residual == pytest.approx(1.0 / np.sqrt(2.0), abs=1e-10)
        assert report.near_vp_residual <= 1e-10

    def test_central2_scheme(self):
        """Test residuals under second-order differences"""
        grid = BoxGrid.cube(2, -np.pi, np.pi, 64)
        report = residuals(rotation_field(grid), DecompositionConfig(scheme="central2"))
        assert report.div_residual <= 1e-12


class TestEpsilonPotentialFit:
    """Test the best-gradient fit"""

    def test_gradient_fits_exactly(self, periodic_grid):
        fit = epsilon_potential_fit(gradient_field(periodic_grid))
        assert fit.residual <= 1e-10
        assert fit.x_v_fraction <= 1e-10

    def test_rotation_has_no_gradient(self, periodic_grid):
        fit = epsilon_potential_fit(rotation_field(periodic_grid))
        assert fit.residual == pytest.approx(1.0, abs=1e-10)
        assert fit.phi.max_abs() <= 1e-12

    def test_constant_counts_as_misfit(self, periodic_grid):
        """Test the constant mode is not a gradient"""
        X = gradient_field(periodic_grid).plus_constant((1.0, 0.0))
        fit = epsilon_potential_fit(X)
        assert fit.residual > 0.1
        misfit = d1_grid(fit.phi) - X
        assert fit.residual == pytest.approx(norm1(misfit) / norm1(X), rel=1e-12)


class TestZeroModePolicy:
    """Test policy parsing"""

    @pytest.mark.parametrize(
        "value, expected",
        [
            ("potential", ZeroModePolicy.TO_POTENTIAL),
            ("to_potential", ZeroModePolicy.TO_POTENTIAL),
            ("vector", ZeroModePolicy.TO_VECTOR),
            ("to_vector", ZeroModePolicy.TO_VECTOR),
        ],
    )
    def test_parse(self, value, expected):
        assert ZeroModePolicy.parse(value) is expected

    def test_unknown_policy(self):
        with pytest.raises(GridError):
            ZeroModePolicy.parse("harmonic")


class TestHodgeService:
    """Test decomposition of a game's windowed gradient"""

    def test_decompose_game(self, linear_rotation_game, test_settings):
        service = HodgeService(app_settings=test_settings)
        decomposition = service.decompose_game(linear_rotation_game, resolution=16)
        assert decomposition.game == "linear-rotation"
        assert decomposition.field.grid.resolution == (16, 16)
        assert decomposition.result.diagnostics.reconstruction_error <= 1e-12
        data = decomposition.to_dict()
        assert data["game"] == "linear-rotation"
        assert "curl_residual" in data["residuals"]

    def test_window_vanishes_on_boundary(self, orbit_game, test_settings):
        """Test the windowed gradient is zero on the box faces"""
        service = HodgeService(app_settings=test_settings)
        field = service.decompose_game(orbit_game, resolution=16).field
        assert np.all(field.stack()[:, 0, :] == 0.0)

    def test_policy_override(self, test_settings):
        service = HodgeService(app_settings=test_settings)
        assert service.config("vector").zero_mode_policy is ZeroModePolicy.TO_VECTOR
        assert service.config().zero_mode_policy is ZeroModePolicy.TO_POTENTIAL

    def test_rotational_part_of_game(self, linear_rotation_game, test_settings):
        """Test X_V of a windowed game field is divergence-free"""
        service = HodgeService(app_settings=test_settings)
        decomposition = service.decompose_game(linear_rotation_game, resolution=32)
        assert div_grid(decomposition.result.x_v).max_abs() <= 1e-10
