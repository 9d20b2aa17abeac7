import numpy as np
import pytest


def circle_nodes(radius=1.0, m=100, z=0.0, center=(0.0, 0.0, 0.0)):
    """Uniformly sampled horizontal circle (counterclockwise from +x)."""
    u = np.arange(m) / m
    ang = 2.0 * np.pi * u
    return np.stack([
        center[0] + radius * np.cos(ang),
        center[1] + radius * np.sin(ang),
        np.full(m, center[2] + z),
    ], axis=1)


def skewed_circle_nodes(radius=1.0, m=100, skew=0.2):
    """Circle sampled with a smooth, non-uniform parameter grading."""
    v = np.arange(m) / m
    u = v - skew * np.sin(2.0 * np.pi * v) / (2.0 * np.pi)
    ang = 2.0 * np.pi * u
    return np.stack([radius * np.cos(ang), radius * np.sin(ang), np.zeros(m)], axis=1)


def fourier_loop(m=80, seed=0, modes=4, wiggle=0.3):
    """Smooth random closed space curve built from a few Fourier modes."""
    rng = np.random.default_rng(seed)
    u = np.arange(m) / m
    ang = 2.0 * np.pi * u
    nodes = np.stack([np.cos(ang), np.sin(ang), np.zeros(m)], axis=1)
    for k in range(1, modes + 1):
        amp = wiggle / (k * k)
        for axis in range(3):
            nodes[:, axis] += amp * (
                rng.normal() * np.cos(2.0 * np.pi * k * u)
                + rng.normal() * np.sin(2.0 * np.pi * k * u)
            )
    return nodes


def snap_to_grid(nodes, scale=2.0 ** 20):
    """Round coordinates to an exact binary grid (for bitwise-equality tests)."""
    return np.round(np.asarray(nodes) * scale) / scale


def random_rotation(seed=0):
    rng = np.random.default_rng(seed)
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
