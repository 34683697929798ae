import numpy as np
import pytest

from antibunch import numerics


def test_solve_linear_matches_numpy():
    rng = np.random.default_rng(7)
    a = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
    b = rng.normal(size=6)
    x = numerics.solve_linear(a, b)
    assert np.allclose(a @ x, b, atol=1e-12)


def test_solve_linear_rejects_singular():
    a = np.zeros((3, 3))
    with pytest.raises(numerics.SingularMatrixError):
        numerics.solve_linear(a, np.ones(3))


def test_null_vector_recovers_kernel():
    rng = np.random.default_rng(3)
    q, _ = np.linalg.qr(rng.normal(size=(5, 5)))
    diag = np.diag([0.0, 1.0, 2.0, 3.0, 4.0])
    a = q @ diag @ q.T
    v = numerics.null_vector(a)
    assert np.linalg.norm(a @ v) < 1e-10
    assert abs(np.linalg.norm(v) - 1.0) < 1e-12


def test_propagate_matches_scalar_exponential():
    a = np.array([[-0.7]])
    t = np.linspace(0.0, 5.0, 11)
    states = numerics.propagate(a, np.array([2.0]), t)
    assert np.allclose(states[:, 0], 2.0 * np.exp(-0.7 * t), atol=1e-12)


def test_propagate_requires_ascending_grid():
    a = -np.eye(2)
    with pytest.raises(ValueError):
        numerics.propagate(a, np.ones(2), np.array([1.0, 0.5]))


def test_integrate_semi_infinite_exponential():
    spec = numerics.QuadratureSpec()
    val = numerics.integrate_semi_infinite(lambda t: np.exp(-2.0 * t), 2.0, spec)
    assert abs(val - 0.5) < 1e-10


def test_integrate_semi_infinite_with_kink():
    spec = numerics.QuadratureSpec()

    def f(t):
        return np.exp(-t) * (1.0 if t < 1.0 else 0.5)

    expected = (1.0 - np.exp(-1.0)) + 0.5 * np.exp(-1.0)
    val = numerics.integrate_semi_infinite(f, 1.0, spec, kinks=(1.0,))
    assert abs(val - expected) < 1e-10
