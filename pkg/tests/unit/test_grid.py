"""
Unit tests for the grid domain and the GHG1 lattice codec
"""
import numpy as np
import pytest

from app.adapters.lattice_codec import LatticeCodec, read_lattice, write_lattice
from app.core.exceptions import GridError
from app.domain.expr.entities import Const
from app.domain.expr.services import parse
from app.domain.grid.services import (
    DerivativeScheme,
    d1_grid,
    d2_grid,
    div_grid,
    inner1,
    inner2,
    inner_l2,
    laplacian_grid,
    norm0,
    norm2,
    quadrature,
    sample,
)
from app.domain.grid.value_objects import (
    BoxGrid,
    BumpWindow,
    GridField,
    GridScalar,
    GridTwoForm,
)

pytestmark = pytest.mark.unit

XY = ("x", "y")


def scalar(grid: BoxGrid, text: str) -> GridScalar:
    return sample(parse(text, set(XY)), grid, variables=XY)


def field(grid: BoxGrid, first: str, second: str) -> GridField:
    return sample([parse(first, set(XY)), parse(second, set(XY))], grid, variables=XY)


def band_limited(grid: BoxGrid, rng: np.random.Generator, band: int) -> GridScalar:
    """Random lattice keeping only modes with |k_i| <= band on every axis"""
    spectrum = np.fft.fftn(rng.standard_normal(grid.shape))
    mask = np.ones(grid.shape, dtype=bool)
    for axis, n in enumerate(grid.shape):
        shape = [1] * grid.dimension
        shape[axis] = -1
        mask = mask & (np.abs(np.fft.fftfreq(n) * n) <= band).reshape(shape)
    return GridScalar(grid, np.real(np.fft.ifftn(spectrum * mask)))


class TestBoxGrid:
    """Test lattice construction"""

    def test_spacing_and_nodes(self):
        """Test nodes start at the lower bound and exclude the upper one"""
        grid = BoxGrid.cube(2, 0.0, 1.0, 8)
        assert grid.spacing == (0.125, 0.125)
        assert grid.size == 64
        axis = grid.axes()[0]
        assert axis[0] == 0.0
        assert axis[-1] == pytest.approx(0.875)
        assert grid.points().shape == (64, 2)

    @pytest.mark.parametrize("resolution", [4, 12, 0])
    def test_bad_resolution(self, resolution):
        """Test resolutions that are not powers of two >= 8"""
        with pytest.raises(GridError):
            BoxGrid.cube(2, 0.0, 1.0, resolution)

    def test_empty_axis(self):
        """Test upper bound not above lower bound"""
        with pytest.raises(GridError):
            BoxGrid(lower=(0.0, 1.0), upper=(1.0, 1.0), resolution=(8, 8))

    def test_point_cap(self):
        """Test the total point cap"""
        with pytest.raises(GridError):
            BoxGrid.cube(2, 0.0, 1.0, 64, max_points=1000)

    def test_lattice_validation(self, periodic_grid):
        """Test wrong sizes and non-finite values"""
        with pytest.raises(GridError):
            GridScalar(periodic_grid, np.zeros(10))
        values = np.zeros(periodic_grid.shape)
        values[0, 0] = np.nan
        with pytest.raises(GridError):
            GridScalar(periodic_grid, values)
        with pytest.raises(GridError):
            GridTwoForm.from_arrays(periodic_grid, {(1, 0): np.zeros(periodic_grid.shape)})

    def test_grid_mismatch(self, periodic_grid):
        """Test operands on different grids"""
        other = BoxGrid.cube(2, 0.0, 1.0, 32)
        with pytest.raises(GridError):
            inner_l2(GridScalar.zeros(periodic_grid), GridScalar.zeros(other))


class TestSampling:
    """Test sampling analytic fields"""

    def test_constant(self):
        """Test a constant field"""
        grid = BoxGrid.cube(2, 0.0, 1.0, 8)
        values = sample(Const(1.0), grid)
        np.testing.assert_array_equal(values.values, np.ones((8, 8)))

    def test_sine(self):
        """Test sin(x) at the nodes"""
        grid = BoxGrid.cube(2, -np.pi, np.pi, 16)
        values = scalar(grid, "sin(x)")
        np.testing.assert_allclose(values.values, np.sin(grid.mesh()[0]), rtol=0, atol=1e-15)

    def test_windowed_constant(self):
        """Test the window vanishes on the boundary and peaks at bump(0)^2"""
        grid = BoxGrid.cube(2, -1.0, 1.0, 8)
        values = sample(Const(1.0), grid, BumpWindow.for_grid(grid)).values
        assert np.all(values[0, :] == 0.0)
        assert np.all(values[:, 0] == 0.0)
        assert values[4, 4] == pytest.approx(np.exp(-2.0), abs=1e-12)
        assert values[4, 4] == pytest.approx(0.13533528, abs=1e-8)

    def test_vector_field(self, periodic_grid):
        """Test an n-component field"""
        X = field(periodic_grid, "-sin(y)", "sin(x)")
        assert isinstance(X, GridField)
        x, y = periodic_grid.mesh()
        np.testing.assert_allclose(X.components[0].values, -np.sin(y))

    def test_callable_field(self, periodic_grid):
        """Test a callable taking one coordinate array per axis"""
        X = sample(lambda x, y: (np.sin(x), 0.0 * y), periodic_grid)
        assert isinstance(X, GridField)
        assert X.components[1].max_abs() == 0.0

    def test_wrong_component_count(self):
        """Test a field with neither 1 nor n components"""
        grid = BoxGrid.cube(3, 0.0, 1.0, 8)
        with pytest.raises(GridError):
            sample(lambda x, y, z: (x, y), grid)


class TestOperators:
    """Test d1, d2, divergence and Laplacian"""

    def test_spectral_gradient_of_sine(self, periodic_grid):
        """Test d/dx sin(x) = cos(x) spectrally"""
        gradient = d1_grid(scalar(periodic_grid, "sin(x)"))
        x, _ = periodic_grid.mesh()
        np.testing.assert_allclose(gradient.components[0].values, np.cos(x), atol=1e-12)
        assert gradient.components[1].max_abs() <= 1e-12

    def test_gradient_of_constant(self, periodic_grid):
        """Test the gradient of a constant vanishes"""
        gradient = d1_grid(GridScalar(periodic_grid, np.full(periodic_grid.shape, 3.0)))
        assert gradient.max_abs() <= 1e-12

    def test_central2_second_order(self):
        """Test central differences converge at rate four per doubling"""
        errors = []
        for n in (32, 64):
            grid = BoxGrid.cube(2, -np.pi, np.pi, n)
            gradient = d1_grid(scalar(grid, "sin(x)*sin(y)"), DerivativeScheme.CENTRAL2)
            x, y = grid.mesh()
            errors.append(
                max(
                    np.max(np.abs(gradient.components[0].values - np.cos(x) * np.sin(y))),
                    np.max(np.abs(gradient.components[1].values - np.sin(x) * np.cos(y))),
                )
            )
        assert 3.5 <= errors[0] / errors[1] <= 4.5

    def test_exact_is_closed(self, periodic_grid):
        """Test d2(d1 f) = 0"""
        curl = d2_grid(d1_grid(scalar(periodic_grid, "sin(x)*sin(y)")))
        assert curl.max_abs() <= 1e-12

    def test_d2_of_d1_random(self, periodic_grid, rng):
        """Test d2(d1 f) = 0 for random lattices"""
        f = GridScalar(periodic_grid, rng.standard_normal(periodic_grid.shape))
        assert norm2(d2_grid(d1_grid(f))) <= 1e-10 * np.linalg.norm(f.values)

    def test_d2_of_rotation(self, periodic_grid):
        """Test (d2 X)_12 = cos y + cos x for X = (-sin y, sin x)"""
        curl = d2_grid(field(periodic_grid, "-sin(y)", "sin(x)"))
        x, y = periodic_grid.mesh()
        np.testing.assert_allclose(curl.entries[(0, 1)].values, np.cos(y) + np.cos(x), atol=1e-12)

    @pytest.mark.slow
    @pytest.mark.parametrize("dimension, resolution", [(2, 64), (3, 32)])
    def test_d2_of_d1_band_limited(self, dimension, resolution, rng):
        """Test |d2(d1 f)|_2 <= 1e-10 |f|_0 for 50 band-limited scalars"""
        grid = BoxGrid.cube(dimension, -np.pi, np.pi, resolution)
        for _ in range(50):
            f = band_limited(grid, rng, resolution // 4)
            assert norm2(d2_grid(d1_grid(f))) <= 1e-10 * norm0(f)

    def test_divergence(self, periodic_grid):
        """Test rotation is divergence-free and (sin x, 0) has divergence cos x"""
        assert div_grid(field(periodic_grid, "-sin(y)", "sin(x)")).max_abs() <= 1e-12
        x, _ = periodic_grid.mesh()
        np.testing.assert_allclose(
            div_grid(field(periodic_grid, "sin(x)", "0")).values, np.cos(x), atol=1e-12
        )

    def test_laplacian_eigenfunction(self, periodic_grid):
        """Test lap(sin x sin y) = -2 sin x sin y"""
        f = scalar(periodic_grid, "sin(x)*sin(y)")
        np.testing.assert_allclose(laplacian_grid(f).values, -2.0 * f.values, atol=1e-12)


class TestInnerProducts:
    """Test quadrature inner products"""

    def test_unit_measure(self):
        """Test inner2 of a unit two-form on [0, 1)^2"""
        grid = BoxGrid.cube(2, 0.0, 1.0, 8)
        F = GridTwoForm.from_arrays(grid, {(0, 1): np.ones(grid.shape)})
        assert inner2(F, F) == pytest.approx(1.0, abs=1e-14)

    def test_inner1_of_sine(self, periodic_grid):
        """Test <(sin x, 0), (sin x, 0)>_1 = 4 pi^2"""
        X = field(periodic_grid, "sin(x)", "0")
        assert inner1(X, X) == pytest.approx(4.0 * np.pi**2, rel=1e-12)
        assert inner1(X, X) == pytest.approx(39.478418, abs=1e-6)

    def test_inner1_orthogonal(self, periodic_grid):
        """Test disjoint components are orthogonal"""
        X = field(periodic_grid, "sin(x)", "0")
        Y = field(periodic_grid, "0", "sin(y)")
        assert abs(inner1(X, Y)) <= 1e-12

    def test_d2_bounded_by_h1(self, periodic_grid, rng):
        """Test |d2 X|_2^2 <= 4 |X|_1^2"""
        for _ in range(5):
            X = GridField.from_arrays(periodic_grid, rng.standard_normal((2,) + periodic_grid.shape))
            curl = d2_grid(X)
            assert inner2(curl, curl) <= 4.0 * inner1(X, X) + 1e-9

    @pytest.mark.slow
    def test_d2_bounded_by_h1_many_fields(self, rng):
        """Test the bound on 100 random fields over two- and three-dimensional boxes"""
        for k in range(100):
            dimension = 2 + k % 2
            resolution = 16 if dimension == 2 else 8
            lengths = rng.uniform(0.5, 4.0, size=dimension)
            grid = BoxGrid(lower=(0.0,) * dimension, upper=tuple(lengths), resolution=(resolution,) * dimension)
            scale = 10.0 ** rng.uniform(-3.0, 3.0)
            X = GridField.from_arrays(grid, scale * rng.standard_normal((dimension,) + grid.shape))
            curl = d2_grid(X)
            assert inner2(curl, curl) <= 4.0 * inner1(X, X) + 1e-9

    def test_integration_by_parts(self, periodic_grid, rng):
        """Test sum_i <d_i f, X_i> = -<f, div X>"""
        f = GridScalar(periodic_grid, rng.standard_normal(periodic_grid.shape))
        X = GridField.from_arrays(periodic_grid, rng.standard_normal((2,) + periodic_grid.shape))
        gradient = d1_grid(f)
        left = sum(inner_l2(g, c) for g, c in zip(gradient.components, X.components))
        right = -quadrature(f.values * div_grid(X).values, periodic_grid.cell_volume)
        scale = np.linalg.norm(f.values) * np.linalg.norm(X.stack()) * periodic_grid.cell_volume
        assert abs(left - right) <= 1e-10 * scale


class TestLatticeCodec:
    """Test the GHG1 binary format"""

    def test_header_layout(self):
        """Test magic, dimension and resolution fields"""
        grid = BoxGrid(lower=(0.0, -1.0), upper=(1.0, 1.0), resolution=(8, 16))
        data = LatticeCodec().encode(grid, [np.zeros(grid.shape)])
        assert data[:4] == b"GHG1"
        assert data[4:8] == (2).to_bytes(4, "little")
        assert data[8:12] == (8).to_bytes(4, "little")
        assert data[12:16] == (16).to_bytes(4, "little")
        assert len(data) == 4 + 4 + 2 * 4 + 4 * 8 + 8 * grid.size

    def test_write_and_read_field(self, periodic_grid, tmp_path):
        """Test a field survives the file"""
        X = field(periodic_grid, "-sin(y)", "sin(x)")
        path = write_lattice(tmp_path / "field.ghg1", X)
        loaded = read_lattice(path)
        assert isinstance(loaded, GridField)
        assert loaded.grid == periodic_grid
        np.testing.assert_array_equal(loaded.stack(), X.stack())

    def test_bad_magic(self):
        """Test a file that is not GHG1"""
        with pytest.raises(GridError):
            LatticeCodec().decode(b"NOPE" + bytes(32))

    def test_truncated_payload(self):
        """Test a payload that is not a whole lattice"""
        grid = BoxGrid.cube(2, 0.0, 1.0, 8)
        data = LatticeCodec().encode(grid, [np.zeros(grid.shape)])
        with pytest.raises(GridError):
            LatticeCodec().decode(data[:-8])
